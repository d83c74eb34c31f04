#include "ltower/gen_poly.hpp"

#include <algorithm>
#include <sstream>

#include "ltower/errors.hpp"

namespace ltower {

namespace {

constexpr std::uint64_t kMaxDenseDegree = std::uint64_t{1} << 26;

}  // namespace

GenPoly::GenPoly(std::uint64_t ell, unsigned precision, bool integral_exponents)
    : ell_(ell), precision_(precision), integral_(integral_exponents) {
  if (precision == 0) throw PrecisionError("precision must be at least 1");
}

GenPoly GenPoly::constant(std::uint64_t ell, unsigned precision, const BigInt& c) {
  GenPoly f(ell, precision);
  f.add_term(0, c);
  return f;
}

GenPoly GenPoly::monomial(const BigInt& c, const TruncatedPadic& exponent, bool integral_exponent) {
  GenPoly f(exponent.ell(), exponent.precision(), integral_exponent);
  f.add_term(exponent.residue(), c);
  return f;
}

BigInt GenPoly::modulus() const { return pow_ui(ell_, precision_); }

void GenPoly::add_term(const BigInt& exponent, const BigInt& c) {
  if (c == 0) return;
  BigInt e;
  const BigInt m = modulus();
  mpz_fdiv_r(e.get_mpz_t(), exponent.get_mpz_t(), m.get_mpz_t());
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt GenPoly::coeff(const BigInt& exponent) const {
  BigInt e;
  const BigInt m = modulus();
  mpz_fdiv_r(e.get_mpz_t(), exponent.get_mpz_t(), m.get_mpz_t());
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt GenPoly::signed_exponent(const BigInt& residue) const {
  const BigInt m = modulus();
  return 2 * residue > m ? residue - m : residue;
}

GenPoly GenPoly::operator-() const {
  GenPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

namespace {

GenPoly empty_like(const GenPoly& a, const GenPoly& b) {
  if (a.ell() != b.ell()) throw Error("generalized polynomials over different primes");
  return GenPoly(a.ell(), std::min(a.precision(), b.precision()),
                 a.integral_exponents() && b.integral_exponents());
}

}  // namespace

GenPoly operator+(const GenPoly& a, const GenPoly& b) {
  GenPoly r = empty_like(a, b);
  for (const auto& [e, c] : a.terms_) r.add_term(e, c);
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

GenPoly operator-(const GenPoly& a, const GenPoly& b) { return a + (-b); }

GenPoly operator*(const GenPoly& a, const GenPoly& b) {
  GenPoly r = empty_like(a, b);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

GenPoly operator*(const BigInt& c, const GenPoly& a) {
  GenPoly r(a.ell_, a.precision_, a.integral_);
  for (const auto& [e, x] : a.terms_) r.add_term(e, c * x);
  return r;
}

GenPoly GenPoly::divexact(const BigInt& c) const {
  GenPoly r = *this;
  for (auto& [e, x] : r.terms_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

GenPoly GenPoly::substitute_power(const BigInt& c) const {
  GenPoly r(ell_, precision_, integral_);
  for (const auto& [e, x] : terms_) r.add_term(e * c, x);
  return r;
}

std::string GenPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<BigInt, BigInt>> ordered;
  for (const auto& [e, c] : terms_) {
    ordered.emplace_back(integral_ ? signed_exponent(e) : e, c);
  }
  std::sort(ordered.begin(), ordered.end());
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "T";
    if (!integral_) {
      os << "^(" << e.get_str() << " mod " << ell_ << "^" << precision_ << ")";
    } else if (e != 1) {
      os << "^" << (e < 0 ? "(" + e.get_str() + ")" : e.get_str());
    }
  }
  return os.str();
}

GenPolyMatrix::GenPolyMatrix(std::size_t size, const GenPoly& zero)
    : size_(size), entries_(size * size, zero) {}

GenPolyMatrix voltage_matrix(const VoltageAssignment& va) {
  const Multigraph& g = va.graph();
  const std::uint64_t ell = va.ell();
  const bool integral = va.integral();

  unsigned precision = va.precision();
  if (integral) {
    // Every exponent of det M(T) has absolute value at most 2 * sum |alpha|.
    BigInt span = 1;
    for (const Voltage& v : va.voltages()) span += BigInt(std::to_string(4 * std::abs(*v.integer)));
    while (pow_ui(ell, precision) <= span) ++precision;
  }

  auto exponent = [&](std::size_t s) {
    const Voltage& v = va.voltages()[s];
    if (v.integer) return TruncatedPadic(ell, precision, BigInt(static_cast<long>(*v.integer)));
    return v.value;
  };

  const GenPoly zero(ell, precision, integral);
  GenPolyMatrix m(g.vertex_count(), zero);
  const auto val = g.valencies();
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    m(i, i) = m(i, i) + GenPoly::constant(ell, precision, BigInt(static_cast<unsigned long>(val[i])));
  }
  for (std::size_t s = 0; s < g.edge_count(); ++s) {
    const Edge& e = g.edges()[s];
    const TruncatedPadic a = exponent(s);
    m(e.tail, e.head) = m(e.tail, e.head) - GenPoly::monomial(1, a, integral);
    m(e.head, e.tail) = m(e.head, e.tail) - GenPoly::monomial(1, -a, integral);
  }
  return m;
}

namespace {

GenPoly cofactor_rec(const GenPolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = m.size();
  if (row == n) return GenPoly::constant(m(0, 0).ell(), m(0, 0).precision(), 1);
  GenPoly total(m(0, 0).ell(), m(0, 0).precision(), m(0, 0).integral_exponents());
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t c = cols[k];
    if (!m(row, c).is_zero()) {
      cols.erase(cols.begin() + static_cast<long>(k));
      GenPoly term = m(row, c) * cofactor_rec(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<long>(k), c);
      total = sign > 0 ? total + term : total - term;
    }
    sign = -sign;
  }
  return total;
}

}  // namespace

GenPoly determinant_cofactor(const GenPolyMatrix& m) {
  if (m.size() == 0) throw Error("determinant of an empty matrix");
  std::vector<std::size_t> cols(m.size());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  GenPoly d = cofactor_rec(m, cols, 0);
  // Keep the flag of the inputs even when the result collapses to a constant.
  GenPoly flagged(d.ell(), d.precision(), m(0, 0).integral_exponents());
  return flagged + d;
}

GenPoly determinant_berkowitz(const GenPolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error("determinant of an empty matrix");
  const GenPoly& proto = m(0, 0);
  const GenPoly zero(proto.ell(), proto.precision(), proto.integral_exponents());
  const GenPoly one = zero + GenPoly::constant(proto.ell(), proto.precision(), 1);

  // Characteristic polynomial coefficients of the trailing principal submatrix.
  std::vector<GenPoly> v{one, -m(n - 1, n - 1)};
  for (std::size_t k = n - 1; k-- > 0;) {
    const std::size_t size = n - k - 1;
    std::vector<GenPoly> t;
    t.reserve(size + 2);
    t.push_back(one);
    t.push_back(-m(k, k));
    // col = A1^j * C, starting from C.
    std::vector<GenPoly> col(size, zero);
    for (std::size_t r = 0; r < size; ++r) col[r] = m(k + 1 + r, k);
    for (std::size_t j = 0; j < size; ++j) {
      GenPoly rc = zero;
      for (std::size_t r = 0; r < size; ++r) rc = rc + m(k, k + 1 + r) * col[r];
      t.push_back(-rc);
      if (j + 1 < size) {
        std::vector<GenPoly> next(size, zero);
        for (std::size_t r = 0; r < size; ++r) {
          for (std::size_t c = 0; c < size; ++c) {
            next[r] = next[r] + m(k + 1 + r, k + 1 + c) * col[c];
          }
        }
        col = std::move(next);
      }
    }
    std::vector<GenPoly> w(size + 2, zero);
    for (std::size_t i = 0; i < size + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, size); ++j) w[i] = w[i] + t[i - j] * v[j];
    }
    v = std::move(w);
  }
  return (n % 2 == 0) ? v[n] : -v[n];
}

GenPoly determinant(const GenPolyMatrix& m) {
  return m.size() <= 6 ? determinant_cofactor(m) : determinant_berkowitz(m);
}

MuDecomposition mu_invariant(const GenPoly& f, const BigInt& p) {
  if (f.is_zero()) throw ZeroPolynomialError("mu of the zero polynomial");
  long mu = -1;
  for (const auto& [e, c] : f.terms()) {
    const long k = ord(c, p);
    if (mu < 0 || k < mu) mu = k;
  }
  return {mu, f.divexact(pow(p, static_cast<unsigned long>(mu)))};
}

Integerized integerize(const GenPoly& f) {
  if (!f.integral_exponents()) {
    throw NonIntegralExponentError("exponents are not declared integral");
  }
  if (f.is_zero()) throw ZeroPolynomialError("integerize of the zero polynomial");
  std::vector<std::pair<BigInt, BigInt>> signed_terms;
  BigInt lowest = 0;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    BigInt s = f.signed_exponent(e);
    if (first || s < lowest) lowest = s;
    first = false;
    signed_terms.emplace_back(std::move(s), c);
  }
  const long b = -lowest.get_si();
  long top = 0;
  for (const auto& [s, c] : signed_terms) top = std::max(top, s.get_si() + b);
  std::vector<BigInt> coeffs(static_cast<std::size_t>(top) + 1);
  for (const auto& [s, c] : signed_terms) coeffs[static_cast<std::size_t>(s.get_si() + b)] = c;
  return {IntPoly(std::move(coeffs)), b};
}

UnitRootFactor unit_root_factor(const IntPoly& U) {
  if (U.is_zero() || U.evaluate(1) != 0) {
    throw Error("unit_root_factor: U(1) != 0, the Laplacian singularity is missing");
  }
  const IntPoly t_minus_one{-1, 1};
  UnitRootFactor out{0, U};
  while (!out.cofactor.is_zero() && out.cofactor.evaluate(1) == 0) {
    out.cofactor = divmod_monic(out.cofactor, t_minus_one).quotient;
    ++out.multiplicity;
  }
  return out;
}

IntPoly reduce_level(const GenPoly& f, unsigned n) {
  if (n > f.precision()) {
    throw PrecisionError("level " + std::to_string(n) + " exceeds exponent precision " +
                         std::to_string(f.precision()));
  }
  const BigInt size_z = pow_ui(f.ell(), n);
  if (!size_z.fits_ulong_p() || size_z.get_ui() > kMaxDenseDegree) {
    throw Error("reduce_level: ell^n too large for a dense polynomial");
  }
  const std::uint64_t size = size_z.get_ui();
  std::vector<BigInt> coeffs(size);
  for (const auto& [e, c] : f.terms()) {
    coeffs[mpz_fdiv_ui(e.get_mpz_t(), size)] += c;
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace ltower
