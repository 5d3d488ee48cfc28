#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mixmult/config.hpp"

namespace mixmult {

/// D = Delta - B with Delta the minimal effective anti-nef Q-divisor above D.
struct ZariskiDecomposition {
  QDivisor divisor;        // D
  QDivisor delta;          // anti-nef part
  QDivisor negative_part;  // B = Delta - D, effective
  /// Curves E with (Delta . E) = 0, ascending. Contains supp(B).
  std::vector<std::size_t> null_support;
};

/// Support-growing solver: repeatedly solves (D + B . E) = 0 on the current
/// support set and adds every curve that Delta still meets positively.
/// Terminates after at most size() rounds.
ZariskiDecomposition decompose(const ValidatedConfig& config, const QDivisor& divisor);

inline constexpr std::size_t kBruteForceCurveLimit = 12;

/// Independent oracle: tries every support subset and keeps the
/// coefficientwise minimal admissible Delta. Exponential; at most
/// kBruteForceCurveLimit curves (TooManyCurves otherwise).
ZariskiDecomposition brute_force_decompose(const ValidatedConfig& config, const QDivisor& divisor);

/// Componentwise ceiling of n * Delta.
QDivisor ceil_scale(const ZariskiDecomposition& decomposition, std::int64_t n);

}  // namespace mixmult
