#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ltower/factor.hpp"
#include "ltower/multigraph.hpp"
#include "ltower/omega.hpp"
#include "ltower/prime_analysis.hpp"
#include "ltower/tower.hpp"

namespace ltower {

struct LevelRow {
  unsigned level = 0;
  BigInt kappa;
  BigInt norm;  // N_level; 1 at level 0
  bool matrix_tree_checked = false;
  std::optional<FactoredInteger> factorization;
};

struct PrimeSection {
  std::uint64_t p = 0;
  std::optional<PrimeAnalysisReport> analysis;
  // Set when no analysis could be produced (inconclusive n0 search).
  std::optional<std::string> warning;
};

struct EllFitSection {
  std::vector<long> valuations;  // ord_ell(kappa_n), n = 0..depth
  std::optional<IwasawaFit> fit;
  std::optional<std::string> warning;
};

// Everything a run computed. Sections left empty were not requested.
struct RunReport {
  std::uint64_t ell = 0;
  unsigned precision = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  bool integral_exponents = true;
  unsigned depth = 0;
  std::string f;
  unsigned matrix_tree_level = 0;
  bool cross_check_ok = true;
  std::vector<LevelRow> levels;
  std::vector<PrimeSection> primes;
  std::optional<OmegaClassification> omega;
  std::optional<EllFitSection> ell_fit;
  double elapsed_ms = 0;  // excluded from comparisons
};

struct ReportOptions {
  unsigned levels = 0;
  bool factor = true;
  // Primes to analyze; with `all_primes` every prime != ell found in the
  // factorizations is added.
  std::vector<std::uint64_t> primes;
  bool all_primes = false;
  bool classify = false;
  bool ell_fit = false;
  FactorBudget budget;
  TowerOptions tower;
};

RunReport build_report(const VoltageAssignment& va, const ReportOptions& options);

// Per-prime section on an existing tower; p == ell yields the ell-part fit
// instead and must go through ell_fit_section.
PrimeSection prime_section(const Tower& tower, std::uint64_t p);
EllFitSection ell_fit_section(const Tower& tower);

// "ord_2(kappa_n) = 3^n + 1 for n >= 1", "7 never divides kappa_n", ...
std::string valuation_law(const PrimeAnalysisReport& report);

std::string report_to_json(const RunReport& report, bool include_timing = true);
std::string report_to_text(const RunReport& report);

}  // namespace ltower
