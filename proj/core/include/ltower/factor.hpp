#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ltower/bigint.hpp"

namespace ltower {

struct FactorBudget {
  std::uint64_t trial_bound = 1'000'000;
  std::uint64_t rho_iterations = 10'000'000;
};

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct FactoredInteger {
  BigInt value;
  std::vector<PrimePower> factors;  // ascending primes, each certified
  BigInt cofactor = 1;              // unfactored remainder

  bool complete() const { return cofactor == 1; }
  // Distinct primes found; a lower bound for omega when incomplete.
  std::size_t omega() const { return factors.size(); }
  std::string to_string() const;
};

// Trial division, perfect-power splitting, then Brent-Pollard rho within the
// budget. Primes are certified before being listed; whatever cannot be split
// or certified stays in the cofactor.
FactoredInteger factor_kappa(const BigInt& n, const FactorBudget& budget = {});

// Deterministic Miller-Rabin below 3.3e24, Pocklington certificate above.
bool is_certified_prime(const BigInt& n, const FactorBudget& budget = {});

}  // namespace ltower
