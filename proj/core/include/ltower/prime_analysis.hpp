#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ltower/gen_poly.hpp"
#include "ltower/int_poly.hpp"
#include "ltower/tower.hpp"

namespace ltower {

struct InertiaData {
  std::uint64_t degree = 0;       // f_i: order of p modulo ell^i
  std::uint64_t prime_count = 0;  // r_i = phi(ell^i) / f_i
};

// Throws InapplicableError when p == ell.
InertiaData inertia_degree(std::uint64_t p, std::uint64_t ell, unsigned i);

// The eventual (maximal) number of primes above p in Q(zeta_{ell^i}).
std::uint64_t eventual_prime_count(std::uint64_t p, std::uint64_t ell);

struct StabilizationBounds {
  unsigned n1 = 1;
  // log_ell(r * ell / (ell - 1) * deg(U mod p)); -infinity when that degree is 0.
  double log_bound = 0;
  long reduced_degree = 0;
  std::uint64_t eventual_primes = 0;

  // Least level n >= 1 with n > log_bound.
  unsigned first_level_past_log_bound() const;
};

// Requires mu_p(U) = 0; throws InapplicableError otherwise.
StabilizationBounds stabilization_bounds(const IntPoly& U, std::uint64_t p, std::uint64_t ell);

// Whether g mod p vanishes at some primitive ell^i-th root of unity, i.e.
// gcd(g mod p, Phi_{ell^i} mod p) is not 1.
bool vanishes_at_level(const GenPoly& g, std::uint64_t p, unsigned i);

struct N0Result {
  unsigned n0 = 1;
  // Certified by the inertia-degree bound (integral exponents); otherwise the
  // levels up to `checked_through` were inspected.
  bool certified = false;
  unsigned checked_through = 0;
  std::vector<unsigned> vanishing_levels;
};

// Least n0 >= 1 such that g mod p has no zero at primitive ell^i-th roots of
// unity for i >= n0. Requires mu_p(g) = 0. For non-integral exponents the
// search stops at `max_level` (default: the exponent precision) and throws
// InconclusiveError if g still vanishes there.
N0Result n0_search(const GenPoly& g, std::uint64_t p, std::optional<unsigned> max_level = {});

struct PrimeAnalysisReport {
  std::uint64_t p = 0;
  std::uint64_t ell = 0;
  long mu = 0;
  unsigned n0 = 1;
  bool n0_certified = false;
  long nu = 0;
  std::optional<unsigned> n1;
  std::optional<double> log_bound;
  std::vector<unsigned> vanishing_levels;
  std::vector<long> observed;   // ord_p(kappa_n), n = 0..depth
  std::vector<long> predicted;  // mu * ell^n + nu for n >= n0, exact below
  bool divides_any = false;     // p | kappa_n for some n >= 1
  // mu = 0 only: p | kappa_X or g mod p vanishes at a nontrivial ell-power root of unity.
  std::optional<bool> divisibility_criterion;
  // mu = 0 only: least level from which ord_p(kappa_n) is constant.
  std::optional<unsigned> constant_from;
  // Least level from which ord_p(kappa_n) = mu * ell^n + nu holds.
  unsigned law_from = 0;

  bool matches() const { return observed == predicted; }
};

// Throws InapplicableError when p == ell; propagates InconclusiveError.
PrimeAnalysisReport analyze_prime(const Tower& tower, std::uint64_t p);

struct IwasawaFit {
  long mu = 0;
  long lambda = 0;
  long nu = 0;
  unsigned onset = 1;

  friend bool operator==(const IwasawaFit&, const IwasawaFit&) = default;
};

// Exact fit of ord_ell(kappa_n) = mu * ell^n + lambda * n + nu (mu, lambda >= 0)
// on the longest tail starting at level >= 1 with at least three points.
// `ords[n]` is the valuation at level n. Throws InsufficientDataError when
// fewer than four levels are given; returns nullopt when no tail fits.
std::optional<IwasawaFit> iwasawa_fit_ell(std::span<const long> ords, std::uint64_t ell);

}  // namespace ltower
