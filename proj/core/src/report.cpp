#include "ltower/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "json.hpp"
#include "ltower/errors.hpp"

namespace ltower {

namespace {

using nlohmann::ordered_json;

std::string fixed6(double x) {
  if (!std::isfinite(x)) return x < 0 ? "-inf" : "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string join(const std::vector<long>& values) {
  std::string out;
  for (long v : values) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

ordered_json factorization_json(const FactoredInteger& f) {
  ordered_json factors = ordered_json::array();
  for (const PrimePower& pp : f.factors) factors.push_back({to_string(pp.prime), pp.exponent});
  return {{"factors", factors},
          {"cofactor", to_string(f.cofactor)},
          {"complete", f.complete()},
          {"omega", f.omega()}};
}

ordered_json prime_json(const PrimeSection& s) {
  ordered_json out{{"p", s.p}};
  if (s.warning) out["warning"] = *s.warning;
  if (!s.analysis) return out;
  const PrimeAnalysisReport& r = *s.analysis;
  out["mu"] = r.mu;
  out["n0"] = r.n0;
  out["n0_certified"] = r.n0_certified;
  out["nu"] = r.nu;
  out["n1"] = r.n1 ? ordered_json(*r.n1) : ordered_json(nullptr);
  out["log_bound"] = r.log_bound && std::isfinite(*r.log_bound) ? ordered_json(fixed6(*r.log_bound))
                                                                 : ordered_json(nullptr);
  out["vanishing_levels"] = r.vanishing_levels;
  out["law"] = valuation_law(r);
  out["law_from"] = r.law_from;
  out["constant_from"] = r.constant_from ? ordered_json(*r.constant_from) : ordered_json(nullptr);
  out["divides_any"] = r.divides_any;
  out["divisibility_criterion"] =
      r.divisibility_criterion ? ordered_json(*r.divisibility_criterion) : ordered_json(nullptr);
  out["observed"] = r.observed;
  out["predicted"] = r.predicted;
  out["matches"] = r.matches();
  return out;
}

std::string cyclotomic_product(const OmegaClassification& c) {
  std::string out = to_string(c.content);
  if (c.unit_root_multiplicity > 0) {
    out += " * (T - 1)";
    if (c.unit_root_multiplicity > 1) out += "^" + std::to_string(c.unit_root_multiplicity);
  }
  for (const CyclotomicFactor& f : c.cyclotomic_factors) {
    out += " * Phi_" + std::to_string(f.order);
    if (f.multiplicity > 1) out += "^" + std::to_string(f.multiplicity);
  }
  if (c.non_cyclotomic_part.degree() > 0) out += " * (" + c.non_cyclotomic_part.to_string() + ")";
  return out;
}

ordered_json omega_json(const OmegaClassification& c) {
  ordered_json out{{"verdict", to_string(c.verdict)}};
  if (!c.U) return out;
  out["U"] = c.U->to_string();
  out["b"] = c.b;
  out["unit_root_multiplicity"] = c.unit_root_multiplicity;
  ordered_json cyc = ordered_json::array();
  for (const CyclotomicFactor& f : c.cyclotomic_factors) cyc.push_back({f.order, f.multiplicity});
  out["cyclotomic_factors"] = cyc;
  out["content"] = to_string(c.content);
  out["non_cyclotomic_part"] = c.non_cyclotomic_part.to_string();
  out["factored"] = cyclotomic_product(c);
  ordered_json primes = ordered_json::array();
  for (const BigInt& p : c.content_primes) primes.push_back(to_string(p));
  out["content_primes"] = primes;
  return out;
}

std::string fit_text(const IwasawaFit& fit, std::uint64_t ell) {
  std::string expr;
  auto term = [&](long c, const std::string& unit) {
    if (c == 0) return;
    const std::string mag = std::to_string(c < 0 ? -c : c);
    const std::string body = unit.empty() ? mag : (c == 1 || c == -1 ? unit : mag + "*" + unit);
    if (expr.empty()) {
      expr = (c < 0 ? "-" : "") + body;
    } else {
      expr += (c < 0 ? " - " : " + ") + body;
    }
  };
  term(fit.mu, std::to_string(ell) + "^n");
  term(fit.lambda, "n");
  term(fit.nu, "");
  if (expr.empty()) expr = "0";
  return "mu = " + std::to_string(fit.mu) + ", lambda = " + std::to_string(fit.lambda) +
         ", nu = " + std::to_string(fit.nu) + "; ord_" + std::to_string(ell) +
         "(kappa_n) = " + expr + " for n >= " + std::to_string(fit.onset);
}

}  // namespace

PrimeSection prime_section(const Tower& tower, std::uint64_t p) {
  PrimeSection out;
  out.p = p;
  try {
    out.analysis = analyze_prime(tower, p);
  } catch (const InconclusiveError& e) {
    out.warning = std::string("inconclusive: ") + e.what();
  }
  return out;
}

EllFitSection ell_fit_section(const Tower& tower) {
  EllFitSection out;
  for (const BigInt& k : tower.kappas()) out.valuations.push_back(ord(k, tower.ell()));
  try {
    out.fit = iwasawa_fit_ell(out.valuations, tower.ell());
    if (!out.fit) out.warning = "no exact fit on the computed levels";
  } catch (const InsufficientDataError& e) {
    out.warning = e.what();
  }
  return out;
}

std::string valuation_law(const PrimeAnalysisReport& r) {
  const std::string p = std::to_string(r.p);
  if (r.mu == 0 && r.nu == 0) return p + " never divides kappa_n";
  std::string expr;
  if (r.mu != 0) {
    expr = (r.mu == 1 ? "" : std::to_string(r.mu) + "*") + std::to_string(r.ell) + "^n";
    if (r.nu > 0) expr += " + " + std::to_string(r.nu);
    if (r.nu < 0) expr += " - " + std::to_string(-r.nu);
  } else {
    expr = std::to_string(r.nu);
  }
  return "ord_" + p + "(kappa_n) = " + expr + " for n >= " + std::to_string(r.law_from);
}

RunReport build_report(const VoltageAssignment& va, const ReportOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.ell = va.ell();
  report.precision = va.precision();
  report.vertices = va.graph().vertex_count();
  report.edges = va.graph().edge_count();
  report.integral_exponents = va.integral();
  report.depth = options.levels;

  const Tower tower(va, options.levels, options.tower);
  report.f = tower.f().to_string();
  report.matrix_tree_level = tower.matrix_tree_level();
  report.cross_check_ok = tower.cross_check_ok();

  std::vector<OmegaEntry> omega;
  if (options.factor) omega = omega_sequence(tower, options.budget, options.tower.threads);
  for (unsigned n = 0; n <= options.levels; ++n) {
    LevelRow row;
    row.level = n;
    row.kappa = tower.kappa(n);
    row.norm = tower.norm(n);
    row.matrix_tree_checked = tower.matrix_tree_kappa(n).has_value();
    if (options.factor) row.factorization = omega[n].factorization;
    report.levels.push_back(std::move(row));
  }

  std::set<std::uint64_t> primes;
  bool fit = options.ell_fit;
  for (std::uint64_t p : options.primes) {
    if (p == va.ell()) {
      fit = true;
    } else {
      primes.insert(p);
    }
  }
  if (options.all_primes) {
    for (const OmegaEntry& e : omega) {
      for (const PrimePower& pp : e.factorization.factors) {
        if (pp.prime.fits_ulong_p() && pp.prime != va.ell()) primes.insert(pp.prime.get_ui());
      }
    }
  }
  for (std::uint64_t p : primes) report.primes.push_back(prime_section(tower, p));
  if (options.classify) report.omega = classify_omega(tower.f(), options.budget);
  if (fit) report.ell_fit = ell_fit_section(tower);

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string report_to_json(const RunReport& report, bool include_timing) {
  ordered_json doc;
  doc["tower"] = {{"ell", report.ell},
                  {"precision", report.precision},
                  {"vertices", report.vertices},
                  {"edges", report.edges},
                  {"integral_exponents", report.integral_exponents},
                  {"depth", report.depth},
                  {"f", report.f}};
  doc["certification"] = {{"matrix_tree_level", report.matrix_tree_level},
                          {"cross_check_ok", report.cross_check_ok}};
  ordered_json levels = ordered_json::array();
  for (const LevelRow& row : report.levels) {
    ordered_json entry{{"n", row.level},
                       {"kappa", to_string(row.kappa)},
                       {"norm", to_string(row.norm)},
                       {"matrix_tree_checked", row.matrix_tree_checked}};
    if (row.factorization) entry["factorization"] = factorization_json(*row.factorization);
    levels.push_back(entry);
  }
  doc["levels"] = levels;
  if (!report.primes.empty()) {
    ordered_json primes = ordered_json::array();
    for (const PrimeSection& s : report.primes) primes.push_back(prime_json(s));
    doc["primes"] = primes;
  }
  if (report.omega) doc["omega"] = omega_json(*report.omega);
  if (report.ell_fit) {
    const EllFitSection& e = *report.ell_fit;
    ordered_json fit{{"valuations", e.valuations}};
    if (e.fit) {
      fit["mu"] = e.fit->mu;
      fit["lambda"] = e.fit->lambda;
      fit["nu"] = e.fit->nu;
      fit["onset"] = e.fit->onset;
    }
    if (e.warning) fit["warning"] = *e.warning;
    doc["ell_fit"] = fit;
  }
  if (include_timing) doc["elapsed_ms"] = std::round(report.elapsed_ms * 1000) / 1000;
  return doc.dump(2) + "\n";
}

std::string report_to_text(const RunReport& report) {
  std::ostringstream out;
  out << "tower: ell = " << report.ell << ", precision " << report.precision << ", "
      << report.vertices << " vertices, " << report.edges << " edges, "
      << (report.integral_exponents ? "integral" : "ell-adic") << " exponents, levels 0.."
      << report.depth << "\n";
  out << "f(T) = " << report.f << "\n";
  out << "Matrix-Tree cross-check through level " << report.matrix_tree_level << ": "
      << (report.cross_check_ok ? "ok" : "MISMATCH") << "\n\n";

  for (const LevelRow& row : report.levels) {
    out << "kappa_" << row.level << " = " << to_string(row.kappa) << "\n";
    if (row.factorization) {
      const FactoredInteger& f = *row.factorization;
      out << "  factors: " << f.to_string() << "\n";
      out << "  omega: " << f.omega() << (f.complete() ? "" : " (lower bound, cofactor unfactored)")
          << "\n";
    }
    out << "  norm N_" << row.level << " = " << to_string(row.norm) << "\n";
    out << "  route: " << (row.matrix_tree_checked ? "Matrix-Tree and product" : "product")
        << "\n";
  }

  for (const PrimeSection& s : report.primes) {
    out << "\np = " << s.p << "\n";
    if (s.warning) out << "  warning: " << *s.warning << "\n";
    if (!s.analysis) continue;
    const PrimeAnalysisReport& r = *s.analysis;
    out << "  " << valuation_law(r) << "\n";
    out << "  mu = " << r.mu << ", n0 = " << r.n0
        << (r.n0_certified ? " (certified)" : " (empirical)") << ", nu = " << r.nu << "\n";
    if (r.n1) out << "  n1 = " << *r.n1 << ", log bound = " << fixed6(*r.log_bound) << "\n";
    out << "  vanishing levels: ";
    if (r.vanishing_levels.empty()) out << "none";
    for (std::size_t i = 0; i < r.vanishing_levels.size(); ++i) {
      out << (i ? " " : "") << r.vanishing_levels[i];
    }
    out << "\n";
    if (r.constant_from) out << "  constant from n = " << *r.constant_from << "\n";
    out << "  divides some kappa_n (n >= 1): " << (r.divides_any ? "yes" : "no") << "\n";
    out << "   n  observed  predicted\n";
    for (std::size_t n = 0; n < r.observed.size(); ++n) {
      char line[96];
      std::snprintf(line, sizeof line, "  %2zu  %8ld  %9ld%s\n", n, r.observed[n], r.predicted[n],
                    r.observed[n] == r.predicted[n] ? "" : "  <-- mismatch");
      out << line;
    }
  }

  if (report.omega) {
    const OmegaClassification& c = *report.omega;
    out << "\nomega(kappa_n): " << to_string(c.verdict) << "\n";
    if (c.U) {
      out << "  U(T) = T^" << c.b << " * f(T) = " << c.U->to_string() << "\n";
      out << "       = " << cyclotomic_product(c) << "\n";
      out << "  content primes:";
      if (c.content_primes.empty()) out << " none";
      for (const BigInt& p : c.content_primes) out << " " << to_string(p);
      out << "\n";
    } else {
      out << "  exponents are not integral; the root-of-unity criterion does not apply\n";
    }
  }

  if (report.ell_fit) {
    const EllFitSection& e = *report.ell_fit;
    out << "\nell-part: ord_" << report.ell << "(kappa_n) = " << join(e.valuations) << "\n";
    if (e.fit) out << "  fit: " << fit_text(*e.fit, report.ell) << "\n";
    if (e.warning) out << "  warning: " << *e.warning << "\n";
  }
  out << "\nelapsed: " << fixed6(report.elapsed_ms / 1000) << " s\n";
  return out.str();
}

}  // namespace ltower
