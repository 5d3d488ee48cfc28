#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mixmult {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical text form: "p/q" with q > 0 in lowest terms, or "p" when q = 1.
std::string to_string(const Rational& value);

/// Parses "p", "-p" or "p/q". Throws Error(SchemaError) on malformed text or q = 0.
Rational parse_rational(std::string_view text);

Integer ceil(const Rational& value);
Integer floor(const Rational& value);

/// Dense row-major matrix; only what the exact linear algebra here needs.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;

/// Solves A x = b exactly by Gaussian elimination. A must be square and
/// nonsingular; throws Error(InternalInvariantViolation) on a zero pivot column.
std::vector<Rational> solve_exact(RationalMatrix a, std::vector<Rational> b);

/// Leading principal minors det(A[0..k, 0..k]) for k = 1..n, via fraction-free
/// (Bareiss) elimination without pivoting. Once a minor vanishes the remaining
/// entries are reported as zero; callers only need the sign pattern up to the
/// first failure.
std::vector<Integer> leading_principal_minors(const Matrix<Integer>& a);

}  // namespace mixmult
