#include "ltower/fp_poly.hpp"

#include "ltower/errors.hpp"

namespace ltower {

namespace {

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return powmod_u64(a, p - 2, p); }

}  // namespace

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coefficients)
    : p_(p), c_(std::move(coefficients)) {
  for (auto& c : c_) c %= p_;
  trim();
}

FpPoly FpPoly::reduce(const IntPoly& a, std::uint64_t p) {
  std::vector<std::uint64_t> c;
  c.reserve(a.coefficients().size());
  for (const BigInt& x : a.coefficients()) c.push_back(mpz_fdiv_ui(x.get_mpz_t(), p));
  return FpPoly(p, std::move(c));
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::monic() const {
  if (c_.empty()) return *this;
  const std::uint64_t inv = inv_mod(c_.back(), p_);
  std::vector<std::uint64_t> v(c_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = mulmod_u64(c_[i], inv, p_);
  return FpPoly(p_, std::move(v));
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = add_mod(v[i], b.c_[i], a.p_);
  return FpPoly(a.p_, std::move(v));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) return FpPoly(a.p_);
  std::vector<std::uint64_t> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      v[i + j] = add_mod(v[i + j], mulmod_u64(a.c_[i], b.c_[j], a.p_), a.p_);
    }
  }
  return FpPoly(a.p_, std::move(v));
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw ZeroPolynomialError("reduction modulo the zero polynomial");
  if (a.degree() < b.degree()) return a;
  const std::uint64_t p = a.p_;
  std::vector<std::uint64_t> r = a.c_;
  const std::size_t db = b.c_.size() - 1;
  const std::uint64_t inv = inv_mod(b.c_.back(), p);
  for (std::size_t k = r.size(); k-- > db;) {
    const std::uint64_t top = r[k];
    if (top == 0) continue;
    const std::uint64_t factor = p - mulmod_u64(top, inv, p);
    const std::size_t shift = k - db;
    for (std::size_t j = 0; j <= db; ++j) {
      r[shift + j] = add_mod(r[shift + j], mulmod_u64(factor, b.c_[j], p), p);
    }
  }
  r.resize(db);
  return FpPoly(p, std::move(r));
}

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly power_of_t_mod(std::uint64_t e, const FpPoly& m) {
  const std::uint64_t p = m.modulus();
  FpPoly result = FpPoly(p, {1}) % m;
  FpPoly base = FpPoly(p, {0, 1}) % m;
  while (e) {
    if (e & 1) result = (result * base) % m;
    e >>= 1;
    if (e) base = (base * base) % m;
  }
  return result;
}

}  // namespace ltower
