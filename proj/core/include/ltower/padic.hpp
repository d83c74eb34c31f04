#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ltower/bigint.hpp"

namespace ltower {

// An element of Z_ell known modulo ell^precision.
class TruncatedPadic {
 public:
  // `residue` may be any integer; it is reduced into [0, ell^precision).
  TruncatedPadic(std::uint64_t ell, unsigned precision, const BigInt& residue);

  // Base-ell digits, least significant first. At most `precision` digits.
  static TruncatedPadic from_digits(std::uint64_t ell, unsigned precision,
                                    std::span<const unsigned> digits);

  std::uint64_t ell() const noexcept { return ell_; }
  unsigned precision() const noexcept { return precision_; }
  const BigInt& residue() const noexcept { return residue_; }
  BigInt modulus() const;

  // Image in Z/ell^n. Throws PrecisionError when n > precision.
  BigInt reduce(unsigned n) const;
  TruncatedPadic truncate(unsigned n) const;

  // Representative of least absolute value, in (-ell^N/2, ell^N/2].
  BigInt balanced() const;

  std::vector<unsigned> digits() const;

  TruncatedPadic operator-() const;
  friend TruncatedPadic operator+(const TruncatedPadic& a, const TruncatedPadic& b);
  friend TruncatedPadic operator-(const TruncatedPadic& a, const TruncatedPadic& b);
  friend TruncatedPadic operator*(const TruncatedPadic& a, const TruncatedPadic& b);
  friend bool operator==(const TruncatedPadic& a, const TruncatedPadic& b) {
    return a.ell_ == b.ell_ && a.precision_ == b.precision_ && a.residue_ == b.residue_;
  }

 private:
  std::uint64_t ell_;
  unsigned precision_;
  BigInt residue_;
};

// Square root of d in Z_ell by Hensel lifting, to `precision` digits.
//
// `branch` picks one of the two roots: its residue modulo ell (modulo 8 when
// ell = 2). Throws AmbiguousBranchError when omitted, NonResidueError when d
// has no square root in Z_ell or the branch is not the residue of a root.
TruncatedPadic padic_sqrt(const BigInt& d, std::uint64_t ell, unsigned precision,
                          const std::optional<BigInt>& branch);

}  // namespace ltower
