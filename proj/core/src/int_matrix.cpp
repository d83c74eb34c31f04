#include "ltower/int_matrix.hpp"

#include <cmath>
#include <mutex>
#include <utility>

#include "ltower/errors.hpp"

namespace ltower {

namespace {

const std::vector<std::uint64_t>& crt_primes(std::size_t count) {
  static std::mutex mutex;
  static std::vector<std::uint64_t> primes;
  std::lock_guard lock(mutex);
  std::uint64_t candidate = primes.empty() ? (std::uint64_t{1} << 62) - 1 : primes.back() - 2;
  while (primes.size() < count) {
    if (is_prime_u64(candidate)) primes.push_back(candidate);
    candidate -= 2;
  }
  return primes;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) { return powmod_u64(a, p - 2, p); }

// Gaussian elimination over F_p. Only nonzero entries of the pivot row and
// pivot column are touched, so banded inputs stay cheap.
std::uint64_t determinant_mod(std::vector<std::uint64_t> a, std::size_t n, std::uint64_t p) {
  std::uint64_t det = 1;
  std::vector<std::size_t> cols;
  cols.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot * n + k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[pivot * n + j]);
      det = det == 0 ? 0 : p - det;
    }
    const std::uint64_t pv = a[k * n + k];
    det = mulmod_u64(det, pv, p);
    const std::uint64_t inv = inverse_mod(pv, p);

    cols.clear();
    for (std::size_t j = k + 1; j < n; ++j) {
      if (a[k * n + j] != 0) cols.push_back(j);
    }
    const std::uint64_t* pivot_row = &a[k * n];
    for (std::size_t i = k + 1; i < n; ++i) {
      std::uint64_t* row = &a[i * n];
      if (row[k] == 0) continue;
      const std::uint64_t factor = p - mulmod_u64(row[k], inv, p);
      for (std::size_t j : cols) {
        std::uint64_t t = row[j] + mulmod_u64(factor, pivot_row[j], p);
        row[j] = t >= p ? t - p : t;
      }
      row[k] = 0;
    }
  }
  return det;
}

}  // namespace

IntMatrix IntMatrix::minor(std::size_t k) const {
  IntMatrix out(rows_ - 1, cols_ - 1);
  for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
    if (r == k) continue;
    for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
      if (c == k) continue;
      out(rr, cc++) = (*this)(r, c);
    }
    ++rr;
  }
  return out;
}

BigInt determinant_bareiss(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error("determinant of a non-square matrix");
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(r, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t hadamard_bound_bits(const IntMatrix& m) {
  auto log2_norm = [](const std::vector<BigInt>& sq_norms) {
    double bits = 0;
    for (const BigInt& s : sq_norms) {
      if (s == 0) return 0.0;
      long e = 0;
      double mant = mpz_get_d_2exp(&e, s.get_mpz_t());
      bits += 0.5 * (std::log2(mant) + static_cast<double>(e));
    }
    return bits;
  };
  std::vector<BigInt> rows(m.rows()), cols(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      BigInt sq = m(r, c) * m(r, c);
      rows[r] += sq;
      cols[c] += sq;
    }
  }
  const double bits = std::min(log2_norm(rows), log2_norm(cols));
  return static_cast<std::size_t>(std::ceil(bits)) + 1;
}

BigInt determinant_multimodular(const IntMatrix& m, std::size_t bound_bits) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error("determinant of a non-square matrix");
  if (n == 0) return 1;

  // Each prime exceeds 2^61; the product must exceed 2^(bound_bits + 1).
  const std::size_t count = (bound_bits + 2) / 61 + 1;
  const auto& primes = crt_primes(count);

  BigInt residue = 0;
  BigInt modulus = 1;
  std::vector<std::uint64_t> reduced(n * n);
  for (std::size_t t = 0; t < count; ++t) {
    const std::uint64_t p = primes[t];
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        reduced[r * n + c] = mpz_fdiv_ui(m(r, c).get_mpz_t(), p);
      }
    }
    const std::uint64_t d = determinant_mod(reduced, n, p);
    // Garner step: residue += modulus * ((d - residue) / modulus mod p).
    const std::uint64_t current = mpz_fdiv_ui(residue.get_mpz_t(), p);
    const std::uint64_t mod_p = mpz_fdiv_ui(modulus.get_mpz_t(), p);
    const std::uint64_t diff = d >= current ? d - current : d + p - current;
    const std::uint64_t step = mulmod_u64(diff, inverse_mod(mod_p, p), p);
    residue += modulus * BigInt(static_cast<unsigned long>(step));
    modulus *= static_cast<unsigned long>(p);
  }
  if (2 * residue > modulus) residue -= modulus;
  return residue;
}

BigInt determinant(const IntMatrix& m, const DeterminantOptions& options) {
  if (m.rows() <= options.bareiss_threshold) return determinant_bareiss(m);
  const std::size_t bits = options.bound_bits ? *options.bound_bits : hadamard_bound_bits(m);
  return determinant_multimodular(m, bits);
}

}  // namespace ltower
