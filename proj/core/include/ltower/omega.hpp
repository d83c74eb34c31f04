#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ltower/factor.hpp"
#include "ltower/gen_poly.hpp"
#include "ltower/int_poly.hpp"
#include "ltower/tower.hpp"

namespace ltower {

struct CyclotomicFactor {
  std::uint64_t order = 0;
  unsigned multiplicity = 0;

  friend bool operator==(const CyclotomicFactor&, const CyclotomicFactor&) = default;
};

struct CyclotomicStrip {
  std::vector<CyclotomicFactor> factors;
  IntPoly remainder;
};

// Divides out every Phi_d with phi(d) <= deg U1 as often as it divides.
CyclotomicStrip strip_cyclotomics(const IntPoly& U1);

enum class OmegaVerdict { bounded, unbounded, inapplicable };

std::string to_string(OmegaVerdict verdict);

// U = content * (T - 1)^m * prod Phi_d^k * non_cyclotomic_part, with the
// last factor primitive and positive leading coefficient.
struct OmegaClassification {
  OmegaVerdict verdict = OmegaVerdict::inapplicable;
  std::optional<IntPoly> U;
  long b = 0;
  unsigned unit_root_multiplicity = 0;
  std::vector<CyclotomicFactor> cyclotomic_factors;
  BigInt content = 0;
  IntPoly non_cyclotomic_part;
  std::vector<BigInt> content_primes;
};

// Bounded iff every root of U is a root of unity. Inapplicable when the
// exponents of f are not declared integral.
OmegaClassification classify_omega(const GenPoly& f, const FactorBudget& budget = {});

struct OmegaEntry {
  unsigned level = 0;
  std::size_t omega = 0;
  bool complete = true;
  FactoredInteger factorization;
};

std::vector<OmegaEntry> omega_sequence(const Tower& tower, const FactorBudget& budget = {},
                                       unsigned threads = 1);

}  // namespace ltower
