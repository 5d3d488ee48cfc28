#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mixmult/config.hpp"
#include "mixmult/monomial.hpp"
#include "mixmult/oracle.hpp"

namespace mixmult {

/// Smooth toric resolution of (x, y) realizing prescribed monomial valuations
/// as exceptional curves.
struct ToricConfig {
  ExceptionalConfig config;
  /// Ray of each curve; curve k is the divisor of the monomial valuation rays[k].
  std::vector<MonomialValuation> rays;
  /// Curve index of each requested target, in request order.
  std::vector<std::size_t> target_index;

  std::size_t index_of(const MonomialValuation& ray) const;  // InvalidArgument if absent
};

/// Refines the fan {(1,0), (0,1)} by Stern-Brocot mediants until every
/// target is a ray; interior rays become curves with E_k^2 = -c_k where
/// v_{k-1} + v_{k+1} = c_k v_k, and neighbouring curves meet once.
/// Throws NonPrimitiveTarget when some gcd(a, b) != 1.
ToricConfig toric_config(std::span<const MonomialValuation> targets);

/// Divisor sum_k (c_k / g_k) E_{p(k)} whose filtration is the spec's, where
/// g_k = gcd(a_k, b_k) and p(k) is the curve of the primitive valuation.
QDivisor divisor_of_spec(const ToricConfig& toric, const OracleFiltrationSpec& spec);

/// Primitive valuations occurring in the specs, sorted and deduplicated.
std::vector<MonomialValuation> spec_targets(std::span<const OracleFiltrationSpec> specs);

/// Gamma(X, O(-D)) for an integral effective D on a toric config: the
/// intersection of the valuation ideals {nu_k >= d_k} over all curves.
MonomialIdeal divisor_ideal(const ToricConfig& toric, const QDivisor& integral_divisor);

struct BridgeComparison {
  Rational exact;
  double oracle = 0;
  double relative_discrepancy = 0;
};

struct BridgeReport {
  ToricConfig toric;
  std::vector<QDivisor> divisors;
  /// Exact mixed form entries against oracle coefficient estimates:
  /// diagonal e(i,i) vs 2 * coeff(n_i^2), off-diagonal e(i,j) vs coeff(n_i n_j).
  std::vector<std::vector<BridgeComparison>> form;
  double max_relative_discrepancy = 0;
};

/// Runs both computation paths on the same filtrations: toric config and
/// exact mixed form on one side, lattice counting with limit fits on the other.
BridgeReport bridge_check(std::span<const OracleFiltrationSpec> specs, std::int64_t window);

}  // namespace mixmult
