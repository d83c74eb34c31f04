#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ltower/bigint.hpp"
#include "ltower/int_poly.hpp"
#include "ltower/multigraph.hpp"
#include "ltower/padic.hpp"

namespace ltower {

// Element of Z[T; Z_ell]: finitely many terms c * T^a with a in Z_ell known
// modulo ell^precision. Exponents are stored as residues in [0, ell^N).
//
// `integral_exponents()` records whether every exponent is declared to be a
// rational integer. Truncations cannot certify integrality, so the flag comes
// from the input and is carried through arithmetic.
class GenPoly {
 public:
  using Terms = std::map<BigInt, BigInt>;

  GenPoly(std::uint64_t ell, unsigned precision, bool integral_exponents = true);

  static GenPoly constant(std::uint64_t ell, unsigned precision, const BigInt& c);
  static GenPoly monomial(const BigInt& c, const TruncatedPadic& exponent, bool integral_exponent);

  std::uint64_t ell() const noexcept { return ell_; }
  unsigned precision() const noexcept { return precision_; }
  bool integral_exponents() const noexcept { return integral_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt modulus() const;

  // Coefficient of T^a for an exponent residue a.
  BigInt coeff(const BigInt& exponent) const;

  // Signed exponent of least absolute value for a stored residue.
  BigInt signed_exponent(const BigInt& residue) const;

  GenPoly operator-() const;
  friend GenPoly operator+(const GenPoly& a, const GenPoly& b);
  friend GenPoly operator-(const GenPoly& a, const GenPoly& b);
  friend GenPoly operator*(const GenPoly& a, const GenPoly& b);
  friend GenPoly operator*(const BigInt& c, const GenPoly& a);
  GenPoly divexact(const BigInt& c) const;

  // T -> T^c for an integer c (c = -1 gives the reciprocal).
  GenPoly substitute_power(const BigInt& c) const;

  friend bool operator==(const GenPoly& a, const GenPoly& b) {
    return a.ell_ == b.ell_ && a.precision_ == b.precision_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void add_term(const BigInt& exponent, const BigInt& c);

  std::uint64_t ell_;
  unsigned precision_;
  bool integral_;
  Terms terms_;
};

class GenPolyMatrix {
 public:
  GenPolyMatrix(std::size_t size, const GenPoly& zero);

  std::size_t size() const noexcept { return size_; }
  GenPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * size_ + c]; }
  const GenPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * size_ + c]; }

 private:
  std::size_t size_;
  std::vector<GenPoly> entries_;
};

// M(T) = D - sum_{inc(s)=(v_i,v_j)} T^alpha(s) - sum_{inc(s)=(v_j,v_i)} T^-alpha(s).
//
// For integral voltages the exponent precision is raised, if needed, so that
// every exponent of det M(T) lifts back to its exact integer value.
GenPolyMatrix voltage_matrix(const VoltageAssignment& va);

// Cofactor expansion for size <= 6, Berkowitz (division free) otherwise.
GenPoly determinant(const GenPolyMatrix& m);
GenPoly determinant_cofactor(const GenPolyMatrix& m);
GenPoly determinant_berkowitz(const GenPolyMatrix& m);

struct MuDecomposition {
  long mu = 0;
  GenPoly unit_part;  // f = p^mu * unit_part
};

// min ord_p of the coefficients. Throws ZeroPolynomialError.
MuDecomposition mu_invariant(const GenPoly& f, const BigInt& p);

struct Integerized {
  IntPoly U;   // T^b * f(T)
  long b = 0;
};

// Throws NonIntegralExponentError unless the exponents are declared integral.
Integerized integerize(const GenPoly& f);

struct UnitRootFactor {
  unsigned multiplicity = 0;
  IntPoly cofactor;  // U / (T - 1)^multiplicity
};

// Throws Error when U(1) != 0.
UnitRootFactor unit_root_factor(const IntPoly& U);

// Maps T^a to T^(a mod ell^n); the result has degree < ell^n.
IntPoly reduce_level(const GenPoly& f, unsigned n);

}  // namespace ltower
