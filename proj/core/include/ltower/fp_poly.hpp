#pragma once

#include <cstdint>
#include <vector>

#include "ltower/int_poly.hpp"

namespace ltower {

// Dense polynomial over F_p for a prime p < 2^63, lowest degree first.
class FpPoly {
 public:
  explicit FpPoly(std::uint64_t p) : p_(p) {}
  FpPoly(std::uint64_t p, std::vector<std::uint64_t> coefficients);
  static FpPoly reduce(const IntPoly& a, std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return c_.empty(); }
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<std::uint64_t>& coefficients() const noexcept { return c_; }

  FpPoly monic() const;

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator%(const FpPoly& a, const FpPoly& b);
  friend bool operator==(const FpPoly&, const FpPoly&) = default;

 private:
  void trim();
  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

// Monic gcd; the zero polynomial when both inputs are zero.
FpPoly gcd(FpPoly a, FpPoly b);

// T^e mod m.
FpPoly power_of_t_mod(std::uint64_t e, const FpPoly& m);

}  // namespace ltower
