#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace ltower {

using BigInt = mpz_class;

// p-adic valuation of a nonzero integer. Returns -1 for zero.
long ord(const BigInt& value, const BigInt& p);
long ord(const BigInt& value, std::uint64_t p);

BigInt pow(const BigInt& base, unsigned long exponent);
BigInt pow_ui(std::uint64_t base, unsigned long exponent);

std::string to_string(const BigInt& value);
BigInt parse_bigint(const std::string& text);

// Euler's totient of a small positive integer.
std::uint64_t totient(std::uint64_t n);

// Deterministic primality test for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

// Distinct prime divisors of a 64-bit integer (trial division).
std::vector<std::uint64_t> prime_divisors_u64(std::uint64_t n);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);

}  // namespace ltower
