#include "ltower/bigint.hpp"

#include <stdexcept>

#include "ltower/errors.hpp"

namespace ltower {

long ord(const BigInt& value, const BigInt& p) {
  if (value == 0) return -1;
  if (p < 2) throw Error("ord: base must be at least 2");
  BigInt v = value;
  long k = 0;
  while (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    ++k;
  }
  return k;
}

long ord(const BigInt& value, std::uint64_t p) { return ord(value, BigInt(static_cast<unsigned long>(p))); }

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

BigInt pow_ui(std::uint64_t base, unsigned long exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

BigInt parse_bigint(const std::string& text) {
  BigInt r;
  std::string t = text;
  if (!t.empty() && t.front() == '+') t.erase(t.begin());
  if (t.empty() || mpz_set_str(r.get_mpz_t(), t.c_str(), 10) != 0) {
    throw ParseError("not a decimal integer: '" + text + "'");
  }
  return r;
}

std::uint64_t totient(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t q : prime_divisors_u64(n)) result = result / q * (q - 1);
  return result;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  __extension__ using u128 = unsigned __int128;
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exponent) {
    if (exponent & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exponent >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a proven witness set for all n < 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<std::uint64_t> prime_divisors_u64(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace ltower
