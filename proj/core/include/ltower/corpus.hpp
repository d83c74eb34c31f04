#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "ltower/factor.hpp"
#include "ltower/omega.hpp"
#include "ltower/tower_spec.hpp"

namespace ltower {

struct CorpusRow {
  unsigned level = 0;
  std::vector<PrimePower> factors;

  BigInt value() const;
};

struct CorpusExample {
  std::string id;
  std::string description;
  TowerSpec spec;
  std::vector<CorpusRow> table;  // levels 0, 1, 2, ... in order
  OmegaVerdict verdict = OmegaVerdict::inapplicable;
};

// The six worked examples with their spanning-tree tables.
const std::vector<CorpusExample>& builtin_corpus();

// Looks an example up by id ("b3-ell5", "theta-ell5", ...); throws Error when unknown.
const CorpusExample& corpus_example(const std::string& id);

enum class SelftestStatus { passed, failed, skipped };

std::string to_string(SelftestStatus status);

struct SelftestItem {
  std::string id;
  SelftestStatus status = SelftestStatus::skipped;
  unsigned levels_checked = 0;
  std::vector<std::string> diffs;
  std::string note;
};

struct SelftestOptions {
  // Examples are started only while the elapsed time is below the budget.
  std::optional<std::chrono::milliseconds> budget;
  FactorBudget factor_budget;
  bool check_factorizations = true;
  unsigned threads = 1;
};

struct SelftestResult {
  std::vector<SelftestItem> items;

  bool ok() const;
  std::size_t count(SelftestStatus status) const;
};

SelftestResult run_selftest(const std::vector<CorpusExample>& corpus,
                            const SelftestOptions& options = {});

}  // namespace ltower
