#include "ltower/prime_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ltower/errors.hpp"
#include "ltower/fp_poly.hpp"

namespace ltower {

namespace {

std::uint64_t ell_power(std::uint64_t ell, unsigned i) {
  const BigInt m = pow_ui(ell, i);
  if (!m.fits_ulong_p() || m.get_ui() >= (std::uint64_t{1} << 62)) {
    throw Error("ell^" + std::to_string(i) + " exceeds the supported range");
  }
  return m.get_ui();
}

// Multiplicative order of p modulo m, given phi(m) and its prime divisors.
std::uint64_t multiplicative_order(std::uint64_t p, std::uint64_t m, std::uint64_t phi,
                                   const std::vector<std::uint64_t>& phi_primes) {
  if (m == 1) return 1;
  std::uint64_t order = phi;
  for (std::uint64_t q : phi_primes) {
    while (order % q == 0 && powmod_u64(p % m, order / q, m) == 1) order /= q;
  }
  return order;
}

}  // namespace

InertiaData inertia_degree(std::uint64_t p, std::uint64_t ell, unsigned i) {
  if (p == ell) throw InapplicableError("inertia degree requires p != ell");
  if (i == 0) return {1, 1};
  const std::uint64_t m = ell_power(ell, i);
  const std::uint64_t phi = m / ell * (ell - 1);
  std::vector<std::uint64_t> primes = prime_divisors_u64(ell - 1);
  primes.push_back(ell);
  const std::uint64_t degree = multiplicative_order(p, m, phi, primes);
  return {degree, phi / degree};
}

std::uint64_t eventual_prime_count(std::uint64_t p, std::uint64_t ell) {
  if (p == ell) throw InapplicableError("prime count requires p != ell");
  const BigInt pz = static_cast<unsigned long>(p);
  if (ell == 2) {
    if (p % 4 == 1) return std::uint64_t{1} << (ord(pz - 1, 2) - 1);
    return std::uint64_t{1} << (ord(pz * pz - 1, 2) - 2);
  }
  const std::uint64_t f1 = inertia_degree(p, ell, 1).degree;
  const long t = ord(pow(pz, static_cast<unsigned long>(f1)) - 1, ell);
  return (ell - 1) / f1 * pow_ui(ell, static_cast<unsigned long>(t - 1)).get_ui();
}

unsigned StabilizationBounds::first_level_past_log_bound() const {
  if (!std::isfinite(log_bound) || log_bound < 1) return 1;
  return static_cast<unsigned>(std::floor(log_bound)) + 1;
}

StabilizationBounds stabilization_bounds(const IntPoly& U, std::uint64_t p, std::uint64_t ell) {
  if (p == ell) throw InapplicableError("stabilization bounds require p != ell");
  const BigInt pz = static_cast<unsigned long>(p);
  if (U.is_zero() || mpz_divisible_p(U.content().get_mpz_t(), pz.get_mpz_t())) {
    throw InapplicableError("stabilization bounds require mu_p = 0");
  }
  StabilizationBounds out;
  out.reduced_degree = FpPoly::reduce(U, p).degree();
  out.eventual_primes = eventual_prime_count(p, ell);
  unsigned i = 1;
  while (inertia_degree(p, ell, i).degree <= static_cast<std::uint64_t>(out.reduced_degree)) ++i;
  out.n1 = i;
  if (out.reduced_degree == 0) {
    out.log_bound = -std::numeric_limits<double>::infinity();
  } else {
    const double l = static_cast<double>(ell);
    out.log_bound = std::log(static_cast<double>(out.eventual_primes) * l / (l - 1) *
                             static_cast<double>(out.reduced_degree)) /
                    std::log(l);
  }
  return out;
}

bool vanishes_at_level(const GenPoly& g, std::uint64_t p, unsigned i) {
  if (i == 0) throw Error("vanishes_at_level: level must be positive");
  const std::uint64_t ell = g.ell();
  if (g.integral_exponents()) {
    // Work with U = T^b g: same zeros at roots of unity, small degree.
    const FpPoly u = FpPoly::reduce(integerize(g).U, p);
    if (u.is_zero()) return true;
    if (u.degree() == 0) return false;
    const FpPoly x = power_of_t_mod(ell_power(ell, i - 1), u);
    FpPoly phi(p, {1});
    FpPoly xk = FpPoly(p, {1});
    for (std::uint64_t k = 1; k < ell; ++k) {
      xk = (xk * x) % u;
      phi = phi + xk;
    }
    return gcd(u, phi % u).degree() > 0;
  }
  const FpPoly r = FpPoly::reduce(reduce_level(g, i), p);
  if (r.is_zero()) return true;
  const FpPoly phi = FpPoly::reduce(cyclotomic(ell_power(ell, i)), p);
  return gcd(phi, r).degree() > 0;
}

N0Result n0_search(const GenPoly& g, std::uint64_t p, std::optional<unsigned> max_level) {
  if (p == g.ell()) throw InapplicableError("n0 requires p != ell");
  if (mu_invariant(g, static_cast<unsigned long>(p)).mu != 0) {
    throw InapplicableError("n0_search requires mu_p(g) = 0");
  }
  N0Result out;
  unsigned last;
  if (g.integral_exponents()) {
    const unsigned n1 = stabilization_bounds(integerize(g).U, p, g.ell()).n1;
    last = n1 - 1;
    out.certified = true;
  } else {
    last = max_level.value_or(g.precision());
  }
  out.checked_through = last;
  for (unsigned i = 1; i <= last; ++i) {
    if (vanishes_at_level(g, p, i)) out.vanishing_levels.push_back(i);
  }
  if (!out.vanishing_levels.empty()) out.n0 = out.vanishing_levels.back() + 1;
  if (!out.certified && last > 0 && !out.vanishing_levels.empty() &&
      out.vanishing_levels.back() == last) {
    throw InconclusiveError("g mod " + std::to_string(p) + " still vanishes at level " +
                            std::to_string(last) + "; no stable tail within the precision");
  }
  return out;
}

PrimeAnalysisReport analyze_prime(const Tower& tower, std::uint64_t p) {
  const std::uint64_t ell = tower.ell();
  if (p == ell) throw InapplicableError("analyze_prime requires p != ell; use the ell-part fit");
  if (!is_prime_u64(p)) throw Error(std::to_string(p) + " is not prime");

  PrimeAnalysisReport report;
  report.p = p;
  report.ell = ell;
  const GenPoly& f = tower.f();
  const BigInt pz = static_cast<unsigned long>(p);
  const MuDecomposition mu = mu_invariant(f, pz);
  report.mu = mu.mu;

  const N0Result n0 = n0_search(mu.unit_part, p);
  report.n0 = n0.n0;
  report.n0_certified = n0.certified;
  report.vanishing_levels = n0.vanishing_levels;

  const unsigned depth = tower.depth();
  const unsigned span = std::max(depth, report.n0);
  std::vector<long> norm_ord(span + 1, 0);
  for (unsigned i = 1; i < report.n0 || i <= depth; ++i) {
    if (i > span) break;
    norm_ord[i] = ord(i <= depth ? tower.norm(i) : level_norm(f, i), pz);
  }

  const long base_ord = ord(tower.kappa(0), pz);
  long below = base_ord;
  for (unsigned i = 1; i < report.n0; ++i) below += norm_ord[i];
  const BigInt lead = pow_ui(ell, report.n0 - 1);
  report.nu = below - report.mu * lead.get_si();

  // Exact values: cumulative norms below n0, the closed form from n0 on.
  std::vector<long> exact(span + 1, 0);
  long running = base_ord;
  for (unsigned n = 0; n <= span; ++n) {
    if (n > 0 && n < report.n0) running += norm_ord[n];
    exact[n] = n < report.n0 ? running
                             : report.mu * pow_ui(ell, n).get_si() + report.nu;
  }
  report.predicted.assign(exact.begin(), exact.begin() + depth + 1);
  for (unsigned n = 0; n <= depth; ++n) report.observed.push_back(ord(tower.kappa(n), pz));

  unsigned from = report.n0;
  while (from > 0 && exact[from - 1] == report.mu * pow_ui(ell, from - 1).get_si() + report.nu) {
    --from;
  }
  report.law_from = from;

  report.divides_any = report.mu > 0 || report.nu > 0;
  if (report.mu == 0) {
    report.divisibility_criterion = base_ord > 0 || !report.vanishing_levels.empty();
    report.constant_from = report.law_from;
    if (f.integral_exponents()) {
      const StabilizationBounds sb = stabilization_bounds(integerize(f).U, p, ell);
      report.n1 = sb.n1;
      report.log_bound = sb.log_bound;
    }
  }
  return report;
}

std::optional<IwasawaFit> iwasawa_fit_ell(std::span<const long> ords, std::uint64_t ell) {
  if (ords.size() < 4) throw InsufficientDataError("the ell-part fit needs at least four levels");
  const BigInt l = static_cast<unsigned long>(ell);
  for (std::size_t s = 1; s + 3 <= ords.size(); ++s) {
    const BigInt ls = pow(l, static_cast<unsigned long>(s));
    const BigInt d1 = ords[s + 1] - ords[s];
    const BigInt d2 = BigInt(ords[s + 2]) - 2 * BigInt(ords[s + 1]) + ords[s];
    const BigInt denom = ls * (l - 1) * (l - 1);
    if (!mpz_divisible_p(d2.get_mpz_t(), denom.get_mpz_t())) continue;
    const BigInt mu = d2 / denom;
    const BigInt lambda = d1 - mu * ls * (l - 1);
    if (mu < 0 || lambda < 0) continue;
    const BigInt nu = BigInt(ords[s]) - mu * ls - lambda * static_cast<unsigned long>(s);
    bool fits = true;
    for (std::size_t n = s; n < ords.size() && fits; ++n) {
      const BigInt value = mu * pow(l, static_cast<unsigned long>(n)) +
                           lambda * static_cast<unsigned long>(n) + nu;
      fits = value == ords[n];
    }
    if (fits) return IwasawaFit{mu.get_si(), lambda.get_si(), nu.get_si(), static_cast<unsigned>(s)};
  }
  return std::nullopt;
}

}  // namespace ltower
