#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ltower/bigint.hpp"

namespace ltower {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  // Deletes row and column k.
  IntMatrix minor(std::size_t k) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

struct DeterminantOptions {
  // Fraction-free elimination up to this size, multi-modular above it.
  std::size_t bareiss_threshold = 40;
  // Known bound |det| < 2^bound_bits; the Hadamard bound is used otherwise.
  std::optional<std::size_t> bound_bits;
};

// Bareiss fraction-free elimination.
BigInt determinant_bareiss(IntMatrix m);

// Determinant modulo enough 62-bit primes to exceed 2^(bound_bits+1), then
// combined by the Chinese remainder theorem into the symmetric range.
BigInt determinant_multimodular(const IntMatrix& m, std::size_t bound_bits);

std::size_t hadamard_bound_bits(const IntMatrix& m);

BigInt determinant(const IntMatrix& m, const DeterminantOptions& options = {});

}  // namespace ltower
