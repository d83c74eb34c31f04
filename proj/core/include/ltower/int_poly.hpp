#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ltower/bigint.hpp"

namespace ltower {

// Dense polynomial in Z[T], lowest degree first. The zero polynomial has no
// coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coefficients);
  IntPoly(std::initializer_list<long> coefficients);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  // Coefficient of T^i; zero beyond the degree.
  BigInt coeff(std::size_t i) const;
  const BigInt& leading() const;

  // Non-negative gcd of the coefficients; 0 for the zero polynomial.
  BigInt content() const;
  BigInt evaluate(const BigInt& x) const;
  bool is_palindromic() const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const BigInt& c, const IntPoly& a);
  // Exact division of every coefficient; the caller guarantees divisibility.
  IntPoly divexact(const BigInt& c) const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

struct PolyDivision {
  IntPoly quotient;
  IntPoly remainder;
};

// Division by a monic polynomial.
PolyDivision divmod_monic(const IntPoly& a, const IntPoly& monic);

// Quotient a / b when it exists in Z[T].
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);

IntPoly pow(const IntPoly& a, unsigned exponent);

// The d-th cyclotomic polynomial.
IntPoly cyclotomic(std::uint64_t d);

// Resultant by the subresultant remainder sequence. Throws ZeroPolynomialError.
BigInt resultant(const IntPoly& a, const IntPoly& b);

}  // namespace ltower
