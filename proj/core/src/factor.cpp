#include "ltower/factor.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "ltower/errors.hpp"

namespace ltower {

namespace {

const std::vector<std::uint64_t>& small_primes(std::uint64_t bound) {
  static std::mutex mutex;
  static std::map<std::uint64_t, std::vector<std::uint64_t>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(bound);
  if (it == cache.end()) it = cache.emplace(bound, primes_up_to(bound)).first;
  return it->second;
}

BigInt powm(const BigInt& base, const BigInt& exponent, const BigInt& modulus) {
  BigInt out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

// Strong probable-prime test to base a, for odd n > 2.
bool strong_probable_prime(const BigInt& n, unsigned long a) {
  const BigInt n1 = n - 1;
  BigInt d = n1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  BigInt x = powm(BigInt(a), d, n);
  if (x == 1 || x == n1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Bases 2..41 decide primality deterministically below this bound.
const BigInt& deterministic_mr_bound() {
  static const BigInt bound("3317044064679887385961981");
  return bound;
}

bool miller_rabin_deterministic(const BigInt& n) {
  for (unsigned long a : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul}) {
    if (n == a) return true;
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor or 0.
BigInt brent_rho(const BigInt& n, std::uint64_t budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  std::uint64_t spent = 0;
  for (unsigned long c = 1; spent < budget; ++c) {
    BigInt y = 2, x, ys, q = 1, g = 1;
    std::uint64_t r = 1;
    const std::uint64_t batch = 128;
    while (g == 1 && spent < budget) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        const std::uint64_t steps = std::min(batch, r - k);
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        spent += steps;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += steps;
      }
      r *= 2;
    }
    if (g == n) {
      // The batch overshot; replay one step at a time.
      do {
        ys = (ys * ys + c) % n;
        BigInt diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

struct Splitter {
  const FactorBudget& budget;
  std::map<BigInt, unsigned> primes;
  BigInt cofactor = 1;

  void add_prime(const BigInt& p, unsigned e) { primes[p] += e; }

  void split(const BigInt& m, unsigned multiplicity) {
    if (m == 1) return;
    if (is_certified_prime(m, budget)) {
      add_prime(m, multiplicity);
      return;
    }
    if (mpz_perfect_power_p(m.get_mpz_t())) {
      const unsigned long bits = mpz_sizeinbase(m.get_mpz_t(), 2);
      for (unsigned long k = bits; k >= 2; --k) {
        BigInt root;
        if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k) != 0) {
          split(root, multiplicity * static_cast<unsigned>(k));
          return;
        }
      }
    }
    if (mpz_probab_prime_p(m.get_mpz_t(), 30) == 0) {
      const BigInt d = brent_rho(m, budget.rho_iterations);
      if (d != 0) {
        BigInt a = d, b = m / d;
        // Keep shared factors together so exponents stay exact.
        BigInt g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (g != 1) {
          split(g, multiplicity * 2);
          split(a / g, multiplicity);
          split(b / g, multiplicity);
        } else {
          split(a, multiplicity);
          split(b, multiplicity);
        }
        return;
      }
    }
    cofactor *= pow(m, multiplicity);
  }
};

}  // namespace

bool is_certified_prime(const BigInt& n, const FactorBudget& budget) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
  if (mpz_even_p(n.get_mpz_t())) return false;
  if (n < deterministic_mr_bound()) return miller_rabin_deterministic(n);
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return false;

  // Pocklington: a certified factored part F of n - 1 with F^2 > n.
  const BigInt n1 = n - 1;
  const FactoredInteger partial = factor_kappa(n1, budget);
  BigInt F = 1;
  for (const PrimePower& pp : partial.factors) F *= pow(pp.prime, pp.exponent);
  if (F * F <= n) return false;
  for (const PrimePower& pp : partial.factors) {
    bool witnessed = false;
    for (unsigned long a = 2; a < 1000 && !witnessed; ++a) {
      if (powm(BigInt(a), n1, n) != 1) return false;
      BigInt t = powm(BigInt(a), n1 / pp.prime, n) - 1, g;
      mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      witnessed = g == 1;
    }
    if (!witnessed) return false;
  }
  return true;
}

FactoredInteger factor_kappa(const BigInt& n, const FactorBudget& budget) {
  if (n < 1) throw Error("factor_kappa requires a positive integer");
  FactoredInteger out;
  out.value = n;
  Splitter splitter{budget, {}, 1};

  BigInt rest = n;
  for (std::uint64_t p : small_primes(budget.trial_bound)) {
    const BigInt pz = static_cast<unsigned long>(p);
    if (pz * pz > rest) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) splitter.add_prime(pz, e);
  }
  splitter.split(rest, 1);

  for (const auto& [p, e] : splitter.primes) out.factors.push_back({p, e});
  out.cofactor = splitter.cofactor;
  return out;
}

std::string FactoredInteger::to_string() const {
  if (factors.empty() && cofactor == 1) return "1";
  std::string out;
  for (const PrimePower& pp : factors) {
    if (!out.empty()) out += " * ";
    out += ltower::to_string(pp.prime);
    if (pp.exponent > 1) out += "^" + std::to_string(pp.exponent);
  }
  if (cofactor != 1) {
    if (!out.empty()) out += " * ";
    out += "[" + ltower::to_string(cofactor) + "]";
  }
  return out;
}

}  // namespace ltower
