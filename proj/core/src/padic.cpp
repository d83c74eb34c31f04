#include "ltower/padic.hpp"

#include "ltower/errors.hpp"

namespace ltower {

namespace {

void require_same_ell(const TruncatedPadic& a, const TruncatedPadic& b) {
  if (a.ell() != b.ell()) throw Error("p-adic arithmetic across different primes");
}

}  // namespace

TruncatedPadic::TruncatedPadic(std::uint64_t ell, unsigned precision, const BigInt& residue)
    : ell_(ell), precision_(precision) {
  if (ell < 2 || !is_prime_u64(ell)) throw Error("ell must be prime");
  if (precision == 0) throw PrecisionError("precision must be at least 1");
  BigInt m = modulus();
  mpz_fdiv_r(residue_.get_mpz_t(), residue.get_mpz_t(), m.get_mpz_t());
}

TruncatedPadic TruncatedPadic::from_digits(std::uint64_t ell, unsigned precision,
                                           std::span<const unsigned> digits) {
  if (digits.size() > precision) {
    throw PrecisionError("more digits than the declared precision");
  }
  BigInt value = 0;
  BigInt place = 1;
  for (unsigned d : digits) {
    if (d >= ell) throw Error("digit out of range for base ell");
    value += place * d;
    place *= static_cast<unsigned long>(ell);
  }
  return TruncatedPadic(ell, precision, value);
}

BigInt TruncatedPadic::modulus() const { return pow_ui(ell_, precision_); }

BigInt TruncatedPadic::reduce(unsigned n) const {
  if (n > precision_) {
    throw PrecisionError("level " + std::to_string(n) + " exceeds voltage precision " +
                         std::to_string(precision_));
  }
  BigInt m = pow_ui(ell_, n);
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), residue_.get_mpz_t(), m.get_mpz_t());
  return r;
}

TruncatedPadic TruncatedPadic::truncate(unsigned n) const {
  return TruncatedPadic(ell_, n, reduce(n));
}

BigInt TruncatedPadic::balanced() const {
  BigInt m = modulus();
  if (2 * residue_ > m) return residue_ - m;
  return residue_;
}

std::vector<unsigned> TruncatedPadic::digits() const {
  std::vector<unsigned> out;
  out.reserve(precision_);
  BigInt v = residue_;
  BigInt q;
  for (unsigned k = 0; k < precision_; ++k) {
    unsigned long d = mpz_fdiv_q_ui(q.get_mpz_t(), v.get_mpz_t(), ell_);
    out.push_back(static_cast<unsigned>(d));
    v = q;
  }
  return out;
}

TruncatedPadic TruncatedPadic::operator-() const {
  return TruncatedPadic(ell_, precision_, -residue_);
}

TruncatedPadic operator+(const TruncatedPadic& a, const TruncatedPadic& b) {
  require_same_ell(a, b);
  return TruncatedPadic(a.ell(), std::min(a.precision(), b.precision()), a.residue() + b.residue());
}

TruncatedPadic operator-(const TruncatedPadic& a, const TruncatedPadic& b) {
  require_same_ell(a, b);
  return TruncatedPadic(a.ell(), std::min(a.precision(), b.precision()), a.residue() - b.residue());
}

TruncatedPadic operator*(const TruncatedPadic& a, const TruncatedPadic& b) {
  require_same_ell(a, b);
  return TruncatedPadic(a.ell(), std::min(a.precision(), b.precision()), a.residue() * b.residue());
}

TruncatedPadic padic_sqrt(const BigInt& d, std::uint64_t ell, unsigned precision,
                          const std::optional<BigInt>& branch) {
  if (!branch) throw AmbiguousBranchError("padic_sqrt needs a branch selector");
  if (precision == 0) throw PrecisionError("precision must be at least 1");
  const BigInt ell_z = static_cast<unsigned long>(ell);

  if (ell == 2) {
    BigInt d8;
    mpz_fdiv_r_ui(d8.get_mpz_t(), d.get_mpz_t(), 8);
    if (d8 != 1) throw NonResidueError("d is not a square in Z_2 (need d = 1 mod 8)");
    BigInt x;
    mpz_fdiv_r_ui(x.get_mpz_t(), branch->get_mpz_t(), 8);
    // A root r has r^2 = d mod 16 for its residue mod 8.
    BigInt check = x * x - d;
    if (!mpz_divisible_ui_p(check.get_mpz_t(), 16)) {
      throw NonResidueError("branch is not the residue mod 8 of a square root of d");
    }
    // Invariant: x is the root mod 2^k and x^2 = d mod 2^(k+1).
    for (unsigned k = 3; k < precision; ++k) {
      BigInt m = pow_ui(2, k + 2);
      BigInt diff = x * x - d;
      if (!mpz_divisible_p(diff.get_mpz_t(), m.get_mpz_t())) x += pow_ui(2, k);
    }
    return TruncatedPadic(2, precision, x);
  }

  BigInt dm;
  mpz_fdiv_r(dm.get_mpz_t(), d.get_mpz_t(), ell_z.get_mpz_t());
  if (dm == 0) throw NonResidueError("d must be a unit modulo ell");
  if (mpz_legendre(dm.get_mpz_t(), ell_z.get_mpz_t()) != 1) {
    throw NonResidueError("d is not a quadratic residue modulo ell");
  }
  BigInt x;
  mpz_fdiv_r(x.get_mpz_t(), branch->get_mpz_t(), ell_z.get_mpz_t());
  BigInt check = x * x - d;
  if (!mpz_divisible_p(check.get_mpz_t(), ell_z.get_mpz_t())) {
    throw NonResidueError("branch is not a square root of d modulo ell");
  }
  // Newton iteration doubles the number of correct digits each step.
  unsigned known = 1;
  while (known < precision) {
    known = std::min(2 * known, precision);
    BigInt m = pow_ui(ell, known);
    BigInt inv;
    BigInt two_x = 2 * x;
    mpz_invert(inv.get_mpz_t(), two_x.get_mpz_t(), m.get_mpz_t());
    x = x - (x * x - d) * inv;
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  }
  return TruncatedPadic(ell, precision, x);
}

}  // namespace ltower
