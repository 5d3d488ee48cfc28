#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mixmult/monomial.hpp"

namespace mixmult {

struct FiltrationTerm {
  MonomialValuation valuation;
  std::int64_t coefficient;  // c_k >= 0
};

/// I_n = intersection over k of {nu_k >= n c_k}.
struct OracleFiltrationSpec {
  std::vector<FiltrationTerm> terms;

  /// Throws InvalidArgument unless there is a term with c_k > 0 and no c_k < 0.
  void validate() const;
};

MonomialIdeal filtration_ideal(const OracleFiltrationSpec& spec, std::int64_t n);

/// l_m = colength(I_m) for m = 1..max_m (element m-1 holds l_m).
std::vector<std::int64_t> colength_sequence(const OracleFiltrationSpec& spec, std::int64_t max_m);

struct LimitFit {
  double quadratic = 0;  // c2 in l_m ~ c2 m^2 + c1 m + c0
  double linear = 0;
  double constant = 0;
  double estimate = 0;  // 2 c2, the multiplicity normalization lim 2 l_m / m^2
  double residual = 0;  // RMS fit error over the window, relative to the mean |l_m|
};

inline constexpr std::int64_t kMinFitPoints = 8;

/// Least-squares quadratic fit of l_m over the upper half-window
/// m in (M/2, M], where lengths[m-1] = l_m. TooFewPoints when M < 8.
LimitFit limit_fit(std::span<const std::int64_t> lengths);

struct CoefficientEstimate {
  std::vector<int> exponents;
  double estimate = 0;
};

struct MixedPolynomialEstimate {
  std::vector<std::vector<std::int64_t>> grid;
  std::vector<LimitFit> fits;      // fits[g].quadratic estimates G(grid[g])
  std::vector<CoefficientEstimate> coefficients;  // lexicographically descending exponents
  double residual = 0;             // max |G(grid) - fitted polynomial(grid)|

  double value_at(std::size_t grid_index) const { return fits[grid_index].quadratic; }
};

/// Unit vectors followed by e_i + e_j (i < j): exactly enough points to
/// determine a quadratic form in r variables.
std::vector<std::vector<std::int64_t>> default_grid(std::size_t variables);

/// Estimates G(n) = lim l(R / prod_k I(k)_{m n_k}) / m^2 at each grid point
/// and solves for the coefficients of the homogeneous quadratic G.
/// Grid points are evaluated concurrently; results do not depend on order.
MixedPolynomialEstimate mixed_poly_oracle(std::span<const OracleFiltrationSpec> specs,
                                          std::span<const std::vector<std::int64_t>> grid, std::int64_t max_m);

/// tau_m = min of target over I_m, for m = 1..max_m.
std::vector<std::int64_t> tau_sequence(const OracleFiltrationSpec& spec, const MonomialValuation& target,
                                       std::int64_t max_m);

/// a-th truncation: I_{a,n} = I_n for n <= a and, for n > a, the sum of
/// I_{a,alpha} I_{a,beta} over alpha + beta = n with alpha, beta > 0.
class TruncatedFiltration {
 public:
  TruncatedFiltration(OracleFiltrationSpec spec, std::int64_t level);

  std::int64_t level() const noexcept { return level_; }
  const OracleFiltrationSpec& spec() const noexcept { return spec_; }

  /// I_{a,0..max_n}, memoized within the call.
  std::vector<MonomialIdeal> ideals(std::int64_t max_n) const;
  MonomialIdeal ideal(std::int64_t n) const { return ideals(n).back(); }
  /// l(R / I_{a,m}) for m = 1..max_m.
  std::vector<std::int64_t> colengths(std::int64_t max_m) const;

 private:
  OracleFiltrationSpec spec_;
  std::int64_t level_;
};

TruncatedFiltration truncate(const OracleFiltrationSpec& spec, std::int64_t level);

}  // namespace mixmult
