#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "edgeideal/config.hpp"

namespace edgeideal {

/// Dense row-major integer matrix; boundary matrices are built into this.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> a_;
};

/// Rank over Q by fraction-free (Bareiss) elimination. Runs in 64-bit integers
/// and restarts in GMP integers if an intermediate minor overflows.
std::size_t rank_fraction_free(const IntMatrix& m);
/// Same elimination, always in GMP integers.
std::size_t rank_fraction_free_bignum(const IntMatrix& m);
/// Rank over GF(p), p prime below 2^31.
std::size_t rank_mod_prime(const IntMatrix& m, std::uint32_t p);

std::size_t rank_over(const IntMatrix& m, Field f);

}  // namespace edgeideal
