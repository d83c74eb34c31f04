#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ltower/corpus.hpp"
#include "ltower/derived_cover.hpp"
#include "ltower/errors.hpp"
#include "ltower/padic.hpp"
#include "ltower/report.hpp"
#include "ltower/tower_spec.hpp"

namespace ltower::cli {

namespace {

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kUsage = 2;

unsigned thread_count() {
  if (const char* env = std::getenv("LTOWER_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1 && n <= 256) return static_cast<unsigned>(n);
  }
  return 1;
}

struct Common {
  std::string file;
  std::optional<unsigned> levels;
  std::vector<std::uint64_t> primes;
  std::optional<long> budget_ms;
  std::optional<unsigned> mt_level;
  bool json = false;
};

ReportOptions report_options(const Common& c, const VoltageAssignment& va) {
  ReportOptions o;
  o.levels = c.levels.value_or(std::min(va.precision(), 3u));
  o.primes = c.primes;
  o.tower.matrix_tree_max_level = c.mt_level;
  o.tower.threads = thread_count();
  return o;
}

int emit(const RunReport& report, const Common& c, std::ostream& out) {
  out << (c.json ? report_to_json(report) : report_to_text(report));
  return report.cross_check_ok ? kOk : kDomain;
}

int cmd_validate(const Common& c, std::ostream& out) {
  const TowerSpec spec = read_tower_spec(c.file);
  const VoltageAssignment va = build_voltage_assignment(spec);
  const ValidationReport v = validate(va.graph());
  bool cover_connected = false;
  if (v.connected) cover_connected = is_connected(derived_graph(va, 1));
  const bool ok = v.accepted() && cover_connected;
  if (c.json) {
    nlohmann::ordered_json doc{{"valid", ok},
                               {"connected", v.connected},
                               {"min_valency_ok", v.min_valency_ok},
                               {"euler_characteristic", euler_characteristic(va.graph())},
                               {"level1_cover_connected", cover_connected},
                               {"violations", v.violations}};
    out << doc.dump(2) << "\n";
  } else {
    out << (ok ? "valid" : "invalid") << ": " << va.graph().vertex_count() << " vertices, "
        << va.graph().edge_count() << " edges, chi = " << euler_characteristic(va.graph())
        << ", ell = " << va.ell() << ", precision " << va.precision() << "\n";
    for (const std::string& s : v.violations) out << "  " << s << "\n";
    if (v.connected && !cover_connected) out << "  the level-1 cover is disconnected\n";
  }
  return ok ? kOk : kDomain;
}

int cmd_count(const Common& c, std::ostream& out) {
  const VoltageAssignment va = build_voltage_assignment(read_tower_spec(c.file));
  ReportOptions o = report_options(c, va);
  o.primes.clear();
  return emit(build_report(va, o), c, out);
}

int cmd_analyze(const Common& c, std::ostream& out, std::ostream& err) {
  const VoltageAssignment va = build_voltage_assignment(read_tower_spec(c.file));
  ReportOptions o = report_options(c, va);
  o.factor = false;
  if (o.primes.empty()) {
    err << "analyze: --p is required\n";
    return kUsage;
  }
  const RunReport report = build_report(va, o);
  for (const PrimeSection& s : report.primes) {
    if (s.warning) err << "warning: p = " << s.p << ": " << *s.warning << "\n";
  }
  if (report.ell_fit) err << "note: p = ell; reporting the ell-part fit\n";
  return emit(report, c, out);
}

int cmd_classify(const Common& c, std::ostream& out) {
  const VoltageAssignment va = build_voltage_assignment(read_tower_spec(c.file));
  ReportOptions o = report_options(c, va);
  o.primes.clear();
  o.classify = true;
  return emit(build_report(va, o), c, out);
}

int cmd_report(const Common& c, std::ostream& out) {
  const VoltageAssignment va = build_voltage_assignment(read_tower_spec(c.file));
  ReportOptions o = report_options(c, va);
  o.all_primes = true;
  o.classify = true;
  o.ell_fit = true;
  return emit(build_report(va, o), c, out);
}

int cmd_selftest(const Common& c, std::ostream& out, std::ostream& err) {
  SelftestOptions o;
  if (c.budget_ms) o.budget = std::chrono::milliseconds(*c.budget_ms);
  o.threads = thread_count();
  const SelftestResult result = run_selftest(builtin_corpus(), o);
  if (c.json) {
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const SelftestItem& i : result.items) {
      items.push_back({{"id", i.id},
                       {"status", to_string(i.status)},
                       {"levels_checked", i.levels_checked},
                       {"diffs", i.diffs},
                       {"note", i.note}});
    }
    out << nlohmann::ordered_json{{"ok", result.ok()}, {"items", items}}.dump(2) << "\n";
  } else {
    for (const SelftestItem& i : result.items) {
      out << "Example " << i.id << ": " << to_string(i.status);
      if (i.status != SelftestStatus::skipped) out << " (levels 0.." << i.levels_checked - 1 << ")";
      if (!i.note.empty()) out << " [" << i.note << "]";
      out << "\n";
      for (const std::string& d : i.diffs) out << "  - " << d << "\n";
    }
  }
  if (result.count(SelftestStatus::skipped) > 0) {
    err << "warning: " << result.count(SelftestStatus::skipped)
        << " example(s) skipped for lack of time budget\n";
  }
  return result.ok() ? kOk : kDomain;
}

struct SqrtArgs {
  std::string radicand;
  std::uint64_t ell = 0;
  unsigned precision = 0;
  std::optional<std::string> branch;
};

int cmd_sqrt(const SqrtArgs& a, bool json, std::ostream& out) {
  std::optional<BigInt> branch;
  if (a.branch) branch = parse_bigint(*a.branch);
  const TruncatedPadic root = padic_sqrt(parse_bigint(a.radicand), a.ell, a.precision, branch);
  const std::vector<unsigned> digits = root.digits();
  if (json) {
    nlohmann::ordered_json voltage{{"kind", "sqrt"},
                                   {"radicand", a.radicand},
                                   {"branch", a.branch ? *a.branch : std::string()}};
    out << nlohmann::ordered_json{{"residue", to_string(root.residue())},
                                  {"modulus", to_string(root.modulus())},
                                  {"digits", digits},
                                  {"voltage", voltage}}
               .dump(2)
        << "\n";
  } else {
    out << "sqrt(" << a.radicand << ") = " << to_string(root.residue()) << " mod "
        << to_string(root.modulus()) << "\n";
    out << "digits (least significant first):";
    for (unsigned d : digits) out << " " << d;
    out << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spanning trees and p-adic valuations in abelian ell-towers of multigraphs",
               "ltower"};
  app.require_subcommand(1);
  Common c;
  SqrtArgs sq;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", c.file, "tower spec (JSON)")->required();
    sub->add_flag("--json", c.json, "machine-readable output");
  };
  auto add_levels = [&](CLI::App* sub) {
    sub->add_option("--levels", c.levels, "highest level n to compute (default min(N, 3))");
    sub->add_option("--matrix-tree-max-level", c.mt_level,
                    "cross-check levels up to this depth by direct Matrix-Tree counts");
  };

  CLI::App* validate_cmd = app.add_subcommand("validate", "check a tower spec");
  add_file(validate_cmd);
  CLI::App* count_cmd = app.add_subcommand("count", "spanning-tree counts kappa_0..kappa_n");
  add_file(count_cmd);
  add_levels(count_cmd);
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "p-adic valuation law for kappa_n");
  add_file(analyze_cmd);
  add_levels(analyze_cmd);
  analyze_cmd->add_option("--p", c.primes, "prime(s) to analyze")->required();
  CLI::App* classify_cmd = app.add_subcommand("classify", "boundedness of omega(kappa_n)");
  add_file(classify_cmd);
  add_levels(classify_cmd);
  CLI::App* report_cmd = app.add_subcommand("report", "full run report");
  add_file(report_cmd);
  add_levels(report_cmd);
  report_cmd->add_option("--p", c.primes, "additional primes to analyze");
  CLI::App* selftest_cmd = app.add_subcommand("selftest", "recompute the built-in example tables");
  selftest_cmd->add_option("--budget-ms", c.budget_ms, "time budget in milliseconds")
      ->check(CLI::NonNegativeNumber);
  selftest_cmd->add_flag("--json", c.json, "machine-readable output");
  CLI::App* sqrt_cmd = app.add_subcommand("sqrt", "square root in Z_ell");
  sqrt_cmd->add_option("radicand", sq.radicand, "integer to take the root of")->required();
  sqrt_cmd->add_option("--ell", sq.ell, "prime ell")->required();
  sqrt_cmd->add_option("--precision", sq.precision, "number of ell-adic digits")->required();
  sqrt_cmd->add_option("--branch", sq.branch, "residue of the root mod ell (mod 8 for ell = 2)");
  sqrt_cmd->add_flag("--json", c.json, "machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(c, out);
    if (*count_cmd) return cmd_count(c, out);
    if (*analyze_cmd) return cmd_analyze(c, out, err);
    if (*classify_cmd) return cmd_classify(c, out);
    if (*report_cmd) return cmd_report(c, out);
    if (*selftest_cmd) return cmd_selftest(c, out, err);
    if (*sqrt_cmd) return cmd_sqrt(sq, c.json, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kUsage;
}

}  // namespace ltower::cli
