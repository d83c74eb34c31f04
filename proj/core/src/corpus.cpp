#include "ltower/corpus.hpp"

#include <algorithm>

#include "ltower/errors.hpp"
#include "ltower/tower.hpp"

namespace ltower {

namespace {

using Row = std::vector<std::pair<unsigned long, unsigned>>;

CorpusRow row(unsigned level, const Row& factors) {
  CorpusRow out{level, {}};
  for (const auto& [p, e] : factors) out.factors.push_back({BigInt(p), e});
  return out;
}

std::vector<CorpusRow> table(const std::vector<Row>& rows) {
  std::vector<CorpusRow> out;
  for (unsigned n = 0; n < rows.size(); ++n) out.push_back(row(n, rows[n]));
  return out;
}

TowerSpec integer_spec(std::uint64_t ell, unsigned precision, std::vector<std::string> vertices,
                       const std::vector<std::tuple<std::string, std::string, long>>& edges) {
  TowerSpec spec{ell, precision, std::move(vertices), {}};
  for (const auto& [tail, head, v] : edges) {
    spec.edges.push_back({tail, head, IntegerVoltage{BigInt(v)}});
  }
  return spec;
}

TowerSpec bouquet(std::uint64_t ell, unsigned precision, const std::vector<long>& voltages) {
  std::vector<std::tuple<std::string, std::string, long>> edges;
  for (long v : voltages) edges.emplace_back("v1", "v1", v);
  return integer_spec(ell, precision, {"v1"}, edges);
}

std::vector<CorpusExample> make_corpus() {
  std::vector<CorpusExample> out;

  out.push_back({"b3-ell5", "ell = 5, bouquet of three loops, voltages 1, 1, 1",
                 bouquet(5, 4, {1, 1, 1}),
                 table({{}, {{3, 4}, {5, 1}}, {{3, 24}, {5, 2}}, {{3, 124}, {5, 3}},
                        {{3, 624}, {5, 4}}}),
                 OmegaVerdict::bounded});

  out.push_back({"b4-1122-ell3", "ell = 3, bouquet of four loops, voltages 1, 1, 2, 2",
                 bouquet(3, 4, {1, 1, 2, 2}),
                 table({{},
                        {{2, 4}, {3, 1}},
                        {{2, 10}, {3, 2}, {17, 2}},
                        {{2, 28}, {3, 3}, {17, 2}, {53, 2}, {109, 2}},
                        {{2, 82}, {3, 4}, {17, 2}, {53, 2}, {109, 2}, {2269, 2}, {4373, 2},
                         {19441, 2}}}),
                 OmegaVerdict::unbounded});

  out.push_back({"theta-ell5", "ell = 5, two vertices, three parallel edges, voltages 1, 2, 2",
                 integer_spec(5, 4, {"v1", "v2"},
                              {{"v1", "v2", 1}, {"v2", "v1", 2}, {"v2", "v1", 2}}),
                 table({{{3, 1}},
                        {{2, 4}, {3, 1}, {5, 1}},
                        {{2, 24}, {3, 1}, {5, 2}},
                        {{2, 124}, {3, 1}, {5, 3}},
                        {{2, 624}, {3, 1}, {5, 4}}}),
                 OmegaVerdict::bounded});

  out.push_back({"b4-1222-ell3", "ell = 3, bouquet of four loops, voltages 1, 2, 2, 2",
                 bouquet(3, 4, {1, 2, 2, 2}),
                 table({{},
                        {{2, 4}, {3, 1}},
                        {{2, 4}, {3, 2}, {127, 2}},
                        {{2, 4}, {3, 3}, {127, 2}, {3295783, 2}},
                        {{2, 4}, {3, 4}, {127, 2}, {1621, 2}, {3295783, 2},
                         {22480434859526947ul, 2}}}),
                 OmegaVerdict::unbounded});

  out.push_back({"parallel4-ell2", "ell = 2, two vertices, four parallel edges, voltages 1, 2, 3, 4",
                 integer_spec(2, 6, {"v1", "v2"},
                              {{"v1", "v2", 1}, {"v1", "v2", 2}, {"v1", "v2", 3}, {"v1", "v2", 4}}),
                 table({{{2, 2}},
                        {{2, 5}},
                        {{2, 12}},
                        {{2, 17}, {17, 2}},
                        {{2, 22}, {17, 2}, {1217, 2}},
                        {{2, 27}, {17, 2}, {257, 2}, {1217, 2}, {23041, 2}},
                        {{2, 32}, {17, 2}, {257, 2}, {1217, 2}, {23041, 2}, {158209, 2},
                         {886538753, 2}}}),
                 OmegaVerdict::unbounded});

  TowerSpec sqrt_spec{2, 8, {"v1"}, {}};
  sqrt_spec.edges.push_back({"v1", "v1", SqrtVoltage{BigInt(17), BigInt(1)}});
  sqrt_spec.edges.push_back({"v1", "v1", IntegerVoltage{BigInt(5)}});
  out.push_back({"sqrt17-ell2", "ell = 2, bouquet of two loops, voltages sqrt(17) and 5",
                 sqrt_spec,
                 table({{},
                        {{2, 2}},
                        {{2, 5}},
                        {{2, 12}},
                        {{2, 17}, {17, 2}},
                        {{2, 22}, {17, 2}, {1217, 2}},
                        {{2, 27}, {17, 2}, {257, 2}, {1217, 2}, {23041, 2}},
                        {{2, 32}, {17, 2}, {257, 4}, {1217, 2}, {23041, 2}, {1518337, 2},
                         {27744257, 2}}}),
                 OmegaVerdict::inapplicable});
  return out;
}

std::string factored(const std::vector<PrimePower>& factors) {
  FactoredInteger f;
  f.factors = factors;
  return f.to_string();
}

}  // namespace

BigInt CorpusRow::value() const {
  BigInt v = 1;
  for (const PrimePower& pp : factors) v *= pow(pp.prime, pp.exponent);
  return v;
}

const std::vector<CorpusExample>& builtin_corpus() {
  static const std::vector<CorpusExample> corpus = make_corpus();
  return corpus;
}

const CorpusExample& corpus_example(const std::string& id) {
  for (const CorpusExample& ex : builtin_corpus()) {
    if (ex.id == id) return ex;
  }
  throw Error("unknown corpus example '" + id + "'");
}

std::string to_string(SelftestStatus status) {
  switch (status) {
    case SelftestStatus::passed:
      return "pass";
    case SelftestStatus::failed:
      return "FAIL";
    case SelftestStatus::skipped:
      return "skipped";
  }
  return "skipped";
}

bool SelftestResult::ok() const { return count(SelftestStatus::failed) == 0; }

std::size_t SelftestResult::count(SelftestStatus status) const {
  return static_cast<std::size_t>(std::count_if(
      items.begin(), items.end(), [&](const SelftestItem& i) { return i.status == status; }));
}

SelftestResult run_selftest(const std::vector<CorpusExample>& corpus,
                            const SelftestOptions& options) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  SelftestResult result;
  for (const CorpusExample& ex : corpus) {
    SelftestItem item;
    item.id = ex.id;
    if (options.budget && clock::now() - start >= *options.budget) {
      item.note = "time budget exhausted before this example";
      result.items.push_back(std::move(item));
      continue;
    }
    try {
      const VoltageAssignment va = build_voltage_assignment(ex.spec);
      const unsigned depth = std::min<unsigned>(va.precision(), ex.table.size() - 1);
      TowerOptions tower_options;
      tower_options.threads = options.threads;
      const Tower tower(va, depth, tower_options);
      if (!tower.cross_check_ok()) item.diffs.push_back("Matrix-Tree and product routes disagree");
      for (unsigned n = 0; n <= depth; ++n) {
        const CorpusRow& expected = ex.table[n];
        const BigInt& got = tower.kappa(n);
        if (got != expected.value()) {
          item.diffs.push_back("kappa_" + std::to_string(n) + ": expected " +
                               factored(expected.factors) + " = " + to_string(expected.value()) +
                               ", got " + to_string(got));
          continue;
        }
        if (options.check_factorizations) {
          const FactoredInteger f = factor_kappa(got, options.factor_budget);
          if (f.complete() && f.factors != expected.factors) {
            item.diffs.push_back("kappa_" + std::to_string(n) + " factors as " + f.to_string() +
                                 ", table says " + factored(expected.factors));
          }
        }
        item.levels_checked = n + 1;
      }
      const OmegaVerdict verdict = classify_omega(tower.f(), options.factor_budget).verdict;
      if (verdict != ex.verdict) {
        item.diffs.push_back("omega verdict: expected " + to_string(ex.verdict) + ", got " +
                             to_string(verdict));
      }
      if (depth + 1 < ex.table.size()) {
        item.note = "levels above " + std::to_string(depth) + " exceed the precision";
      }
    } catch (const std::exception& e) {
      item.diffs.push_back(std::string("error: ") + e.what());
    }
    item.status = item.diffs.empty() ? SelftestStatus::passed : SelftestStatus::failed;
    result.items.push_back(std::move(item));
  }
  return result;
}

}  // namespace ltower
