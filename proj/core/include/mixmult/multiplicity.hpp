#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mixmult/config.hpp"

namespace mixmult {

/// Multiplicity -(Delta^2) of the filtration {I(nD)}, with Delta the anti-nef
/// part of D. Ignores branch weights.
Rational volume(const ValidatedConfig& config, const QDivisor& divisor);

/// Branch-weighted multiplicity: sum over branches b of -w_b (Delta_b^2).
/// Equal to volume() on a single branch of weight 1.
Rational weighted_volume(const ValidatedConfig& config, const QDivisor& divisor);

/// Symmetric matrix of mixed multiplicities e(i,j) = -(Delta_i . Delta_j).
/// Diagonal entries are the multiplicities e(I(i)^[2]); off-diagonal entries
/// are e(I(i)^[1], I(j)^[1]).
struct MixedMultiplicityForm {
  std::vector<QDivisor> divisors;
  std::vector<QDivisor> deltas;
  RationalMatrix matrix;
  bool weights_applied = false;

  std::size_t rank() const noexcept { return divisors.size(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return matrix(i, j); }
};

MixedMultiplicityForm mixed_form(const ValidatedConfig& config, std::span<const QDivisor> divisors);

/// Per-branch forms summed with the branch weights.
MixedMultiplicityForm weighted_mixed(const ValidatedConfig& config, std::span<const QDivisor> divisors);

struct PolynomialTerm {
  std::vector<int> exponents;  // k_1..k_r with sum 2
  Rational coefficient;
};

/// G(n_1..n_r) = sum over |k| = 2 of e(type k) / (k_1! ... k_r!) * n^k.
class MultiplicityPolynomial {
 public:
  explicit MultiplicityPolynomial(const MixedMultiplicityForm& form);

  std::size_t variables() const noexcept { return variables_; }
  /// Terms in lexicographically descending exponent order: (2,0,..), (1,1,..), ...
  const std::vector<PolynomialTerm>& terms() const noexcept { return terms_; }
  const Rational& coefficient(std::span<const int> exponents) const;
  Rational evaluate(std::span<const std::int64_t> n) const;

 private:
  std::size_t variables_;
  std::vector<PolynomialTerm> terms_;
};

MultiplicityPolynomial mixed_polynomial(const ValidatedConfig& config, std::span<const QDivisor> divisors);

/// e(I(1) I(2)) = 2 G(1,1) = e0 + 2 e1 + e2.
Rational product_multiplicity(const ValidatedConfig& config, const QDivisor& d1, const QDivisor& d2);

}  // namespace mixmult
