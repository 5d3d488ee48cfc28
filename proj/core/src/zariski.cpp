#include "mixmult/zariski.hpp"

#include <optional>

#include "mixmult/error.hpp"

namespace mixmult {
namespace {

// B supported on `support` with (D + B . E) = 0 for every E in support.
QDivisor solve_on_support(const ValidatedConfig& config, const QDivisor& divisor,
                          const std::vector<std::size_t>& support) {
  const std::size_t k = support.size();
  QDivisor b = QDivisor::zero(config.size());
  if (k == 0) return b;
  const auto d_pairings = pairings_with_curves(config, divisor);
  RationalMatrix a(k, k);
  std::vector<Rational> rhs(k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) a(r, c) = Rational(static_cast<long>(config.gram(support[r], support[c])));
    rhs[r] = -d_pairings[support[r]];
  }
  const auto x = solve_exact(std::move(a), std::move(rhs));
  for (std::size_t r = 0; r < k; ++r) b[support[r]] = x[r];
  return b;
}

ZariskiDecomposition assemble(const ValidatedConfig& config, const QDivisor& divisor, QDivisor b) {
  ZariskiDecomposition z;
  z.divisor = divisor;
  z.delta = divisor + b;
  z.negative_part = std::move(b);
  const auto p = pairings_with_curves(config, z.delta);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] == 0) z.null_support.push_back(i);
  return z;
}

}  // namespace

ZariskiDecomposition decompose(const ValidatedConfig& config, const QDivisor& divisor) {
  require_effective(config, divisor);
  const std::size_t s = config.size();
  std::vector<bool> in_support(s, false);
  std::vector<std::size_t> support;
  QDivisor b = QDivisor::zero(s);
  for (std::size_t round = 0; round <= s; ++round) {
    const auto p = pairings_with_curves(config, divisor + b);
    bool grew = false;
    for (std::size_t i = 0; i < s; ++i) {
      if (p[i] > 0) {
        // A curve already constrained to pairing zero cannot pair positively.
        if (in_support[i]) throw Error(ErrorCode::InternalInvariantViolation, "support did not grow");
        in_support[i] = true;
        grew = true;
      }
    }
    if (!grew) break;
    support.clear();
    for (std::size_t i = 0; i < s; ++i)
      if (in_support[i]) support.push_back(i);
    b = solve_on_support(config, divisor, support);
  }
  if (!b.is_effective()) {
    throw Error(ErrorCode::InternalInvariantViolation, "negative coefficient in B = " + to_string(b));
  }
  if (!is_antinef(config, divisor + b)) {
    throw Error(ErrorCode::InternalInvariantViolation, "iteration ended without an anti-nef divisor");
  }
  return assemble(config, divisor, std::move(b));
}

ZariskiDecomposition brute_force_decompose(const ValidatedConfig& config, const QDivisor& divisor) {
  require_effective(config, divisor);
  const std::size_t s = config.size();
  if (s > kBruteForceCurveLimit) {
    throw Error(ErrorCode::TooManyCurves, std::to_string(s) + " curves exceeds the subset enumeration cap of " +
                                              std::to_string(kBruteForceCurveLimit));
  }
  std::vector<QDivisor> candidates;
  for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < s; ++i)
      if (mask & (1u << i)) support.push_back(i);
    QDivisor b = solve_on_support(config, divisor, support);
    if (b.is_effective() && is_antinef(config, divisor + b)) candidates.push_back(std::move(b));
  }
  // Every effective anti-nef divisor above D dominates the minimal one, so
  // the minimum must be below all candidates.
  for (const auto& candidate : candidates) {
    bool minimal = true;
    for (const auto& other : candidates)
      if (!candidate.dominated_by(other)) {
        minimal = false;
        break;
      }
    if (minimal) return assemble(config, divisor, candidate);
  }
  throw Error(ErrorCode::InternalInvariantViolation, "no coefficientwise minimal candidate");
}

QDivisor ceil_scale(const ZariskiDecomposition& decomposition, std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "ceil_scale needs n >= 1");
  QDivisor out = QDivisor::zero(decomposition.delta.size());
  const Rational scale(static_cast<long>(n));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = Rational(ceil(scale * decomposition.delta[i]));
  return out;
}

}  // namespace mixmult
