#include "edgeideal/exact_rank.hpp"

#include <cstdlib>
#include <optional>
#include <utility>

#include <gmpxx.h>

namespace edgeideal {
namespace {

struct Overflow {};

struct CheckedInt {
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static std::int64_t magnitude(std::int64_t a) {
    if (a == INT64_MIN) throw Overflow{};
    return a < 0 ? -a : a;
  }
};

// Fraction-free row echelon reduction. Every stored entry below the current
// pivot row is a minor of the input, so the division by the previous pivot is
// exact. Zero columns are skipped, which keeps the invariant for rectangular
// input. Pivot choice: smallest magnitude, to slow entry growth.
template <typename T, typename Ops>
std::size_t bareiss_rank(std::vector<T>& a, std::size_t rows, std::size_t cols, Ops ops) {
  auto at = [&](std::size_t i, std::size_t j) -> T& { return a[i * cols + j]; };
  T prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::optional<std::size_t> pivot;
    for (std::size_t i = r; i < rows; ++i) {
      if (at(i, c) == 0) continue;
      if (!pivot || ops.magnitude(at(i, c)) < ops.magnitude(at(*pivot, c))) pivot = i;
    }
    if (!pivot) continue;
    if (*pivot != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(at(r, j), at(*pivot, j));
    const T p = at(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const T lead = at(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        T v = ops.sub(ops.mul(p, at(i, j)), ops.mul(lead, at(r, j)));
        at(i, j) = ops.div(std::move(v), prev);
      }
      at(i, c) = 0;
    }
    prev = p;
    ++r;
  }
  return r;
}

struct Int64Ops {
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return CheckedInt::mul(a, b); }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return CheckedInt::sub(a, b); }
  std::int64_t div(std::int64_t a, std::int64_t b) const { return a / b; }
  std::int64_t magnitude(std::int64_t a) const { return CheckedInt::magnitude(a); }
};

struct MpzOps {
  mpz_class mul(const mpz_class& a, const mpz_class& b) const { return a * b; }
  mpz_class sub(const mpz_class& a, const mpz_class& b) const { return a - b; }
  mpz_class div(const mpz_class& a, const mpz_class& b) const {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  mpz_class magnitude(const mpz_class& a) const { return abs(a); }
};

}  // namespace

std::size_t rank_fraction_free_bignum(const IntMatrix& m) {
  std::vector<mpz_class> a(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i * m.cols() + j] = static_cast<long>(m(i, j));
  return bareiss_rank(a, m.rows(), m.cols(), MpzOps{});
}

std::size_t rank_fraction_free(const IntMatrix& m) {
  std::vector<std::int64_t> a(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i * m.cols() + j] = m(i, j);
  try {
    return bareiss_rank(a, m.rows(), m.cols(), Int64Ops{});
  } catch (const Overflow&) {
    return rank_fraction_free_bignum(m);
  }
}

std::size_t rank_mod_prime(const IntMatrix& m, std::uint32_t p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const std::int64_t v = m(i, j) % static_cast<std::int64_t>(p);
      a[i * cols + j] = static_cast<std::uint64_t>(v < 0 ? v + p : v);
    }
  auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return a[i * cols + j]; };
  auto inverse = [p](std::uint64_t x) {
    std::uint64_t result = 1, base = x, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(at(r, j), at(piv, j));
    const std::uint64_t inv = inverse(at(r, c));
    for (std::size_t j = c; j < cols; ++j) at(r, j) = at(r, j) * inv % p;
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint64_t f = at(i, c);
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) at(i, j) = (at(i, j) + (p - f) * at(r, j)) % p;
    }
    ++r;
  }
  return r;
}

std::size_t rank_over(const IntMatrix& m, Field f) {
  return f.is_rational() ? rank_fraction_free(m) : rank_mod_prime(m, f.characteristic());
}

}  // namespace edgeideal
