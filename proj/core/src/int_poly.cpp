#include "ltower/int_poly.hpp"

#include <algorithm>
#include <sstream>

#include "ltower/errors.hpp"

namespace ltower {

IntPoly::IntPoly(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

const BigInt& IntPoly::leading() const {
  if (coeffs_.empty()) throw ZeroPolynomialError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const BigInt& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool IntPoly::is_palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

IntPoly IntPoly::operator-() const {
  std::vector<BigInt> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(v));
}

IntPoly operator*(const BigInt& c, const IntPoly& a) {
  std::vector<BigInt> v(a.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * a.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::divexact(const BigInt& c) const {
  std::vector<BigInt> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), c.get_mpz_t());
  }
  return IntPoly(std::move(v));
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k > 0) {
      if (mag != 1) os << "*";
      os << "T";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

PolyDivision divmod_monic(const IntPoly& a, const IntPoly& monic) {
  if (monic.is_zero() || monic.leading() != 1) throw Error("divmod_monic: divisor must be monic");
  const long db = monic.degree();
  if (a.degree() < db) return {IntPoly{}, a};
  std::vector<BigInt> r = a.coefficients();
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db + 1));
  const auto& b = monic.coefficients();
  for (long k = a.degree() - db; k >= 0; --k) {
    const BigInt c = r[static_cast<std::size_t>(k + db)];
    q[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (long j = 0; j <= db; ++j) {
      mpz_submul(r[static_cast<std::size_t>(k + j)].get_mpz_t(), c.get_mpz_t(),
                 b[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw ZeroPolynomialError("division by the zero polynomial");
  if (a.is_zero()) return IntPoly{};
  const long db = b.degree();
  if (a.degree() < db) return std::nullopt;
  std::vector<BigInt> r = a.coefficients();
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db + 1));
  const auto& bc = b.coefficients();
  const BigInt& lead = bc.back();
  for (long k = a.degree() - db; k >= 0; --k) {
    BigInt& top = r[static_cast<std::size_t>(k + db)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    BigInt c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    q[static_cast<std::size_t>(k)] = c;
    for (long j = 0; j <= db; ++j) {
      mpz_submul(r[static_cast<std::size_t>(k + j)].get_mpz_t(), c.get_mpz_t(),
                 bc[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  for (const BigInt& c : r) {
    if (c != 0) return std::nullopt;
  }
  return IntPoly(std::move(q));
}

IntPoly pow(const IntPoly& a, unsigned exponent) {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = a;
  while (exponent) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

namespace {

// Multiply by (T^e - 1) in place.
void times_binomial(std::vector<BigInt>& v, std::size_t e) {
  v.resize(v.size() + e);
  for (std::size_t i = v.size(); i-- > 0;) {
    BigInt shifted = i >= e ? v[i - e] : BigInt(0);
    v[i] = shifted - v[i];
  }
}

// Exact division by (T^e - 1) in place: a[i + e] = q[i] - q[i + e].
void over_binomial(std::vector<BigInt>& a, std::size_t e) {
  const std::size_t dq = a.size() - 1 - e;
  std::vector<BigInt> q(dq + 1);
  for (std::size_t i = dq + 1; i-- > 0;) {
    q[i] = a[i + e] + (i + e <= dq ? q[i + e] : BigInt(0));
  }
  a = std::move(q);
}

int mobius(std::uint64_t n) {
  int result = 1;
  for (std::uint64_t q : prime_divisors_u64(n)) {
    if ((n / q) % q == 0) return 0;
    result = -result;
  }
  return result;
}

}  // namespace

IntPoly cyclotomic(std::uint64_t d) {
  if (d == 0) throw Error("cyclotomic: order must be positive");
  const auto primes = prime_divisors_u64(d);
  if (primes.size() == 1) {
    // Phi_{q^k}(T) = sum_{j < q} T^(j q^(k-1)).
    const std::uint64_t q = primes[0];
    const std::uint64_t step = d / q;
    std::vector<BigInt> v((q - 1) * step + 1);
    for (std::uint64_t j = 0; j < q; ++j) v[j * step] = 1;
    return IntPoly(std::move(v));
  }
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t e = 1; e * e <= d; ++e) {
    if (d % e) continue;
    divisors.push_back(e);
    if (e * e != d) divisors.push_back(d / e);
  }
  std::vector<BigInt> v{BigInt(1)};
  // Work with prod (1 - T^e)^mu, which equals Phi_d for d > 1.
  for (std::uint64_t e : divisors) {
    if (mobius(d / e) == 1) {
      times_binomial(v, e);
      for (auto& c : v) c = -c;
    }
  }
  for (std::uint64_t e : divisors) {
    if (mobius(d / e) == -1) {
      for (auto& c : v) c = -c;
      over_binomial(v, e);
    }
  }
  IntPoly result(std::move(v));
  if (result.leading() < 0) result = -result;
  return result;
}

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  const long db = b.degree();
  long delta = a.degree() - db;
  std::vector<BigInt> r = a.coefficients();
  const auto& bc = b.coefficients();
  const BigInt& lead = bc.back();
  long steps = 0;
  long dr = a.degree();
  while (dr >= db) {
    const BigInt top = r[static_cast<std::size_t>(dr)];
    const std::size_t shift = static_cast<std::size_t>(dr - db);
    for (long i = 0; i < dr; ++i) r[static_cast<std::size_t>(i)] *= lead;
    for (long j = 0; j < db; ++j) {
      mpz_submul(r[shift + static_cast<std::size_t>(j)].get_mpz_t(), top.get_mpz_t(),
                 bc[static_cast<std::size_t>(j)].get_mpz_t());
    }
    r[static_cast<std::size_t>(dr)] = 0;
    ++steps;
    --dr;
    while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
  }
  r.resize(static_cast<std::size_t>(std::max(dr + 1, 0L)));
  const long missing = delta + 1 - steps;
  if (missing > 0) {
    const BigInt scale = pow(lead, static_cast<unsigned long>(missing));
    for (auto& c : r) c *= scale;
  }
  return IntPoly(std::move(r));
}

}  // namespace

BigInt resultant(const IntPoly& a_in, const IntPoly& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) throw ZeroPolynomialError("resultant of the zero polynomial");
  IntPoly a = a_in;
  IntPoly b = b_in;
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
  }
  if (b.degree() == 0) {
    return s * pow(b.leading(), static_cast<unsigned long>(a.degree()));
  }
  const BigInt ca = a.content();
  const BigInt cb = b.content();
  a = a.divexact(ca);
  b = b.divexact(cb);
  const BigInt t = pow(ca, static_cast<unsigned long>(b.degree())) *
                   pow(cb, static_cast<unsigned long>(a.degree()));
  BigInt g = 1;
  BigInt h = 1;
  while (true) {
    const long delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) return 0;
    a = std::move(b);
    b = r.divexact(g * pow(h, static_cast<unsigned long>(delta)));
    g = a.leading();
    // h <- g^delta / h^(delta - 1)
    BigInt num = pow(g, static_cast<unsigned long>(delta));
    if (delta > 1) {
      BigInt den = pow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    } else {
      h = num;
    }
    if (b.degree() == 0) break;
  }
  // h <- h^(1 - deg a) * lc(b)^deg a
  const unsigned long da = static_cast<unsigned long>(a.degree());
  BigInt num = pow(b.leading(), da);
  if (da > 1) {
    BigInt den = pow(h, da - 1);
    mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  } else {
    h = num;
  }
  return s * t * h;
}

}  // namespace ltower
