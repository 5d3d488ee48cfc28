#include "mixmult/theorem_checks.hpp"

#include <algorithm>

#include "mixmult/error.hpp"
#include "mixmult/multiplicity.hpp"
#include "mixmult/zariski.hpp"

namespace mixmult {

bool MinkowskiReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const InequalityCheck& c) { return c.holds(); });
}

MinkowskiReport minkowski_report(const ValidatedConfig& config, const QDivisor& d1, const QDivisor& d2) {
  require_effective(config, d1);
  require_effective(config, d2);
  if (d1.is_zero() || d2.is_zero()) throw Error(ErrorCode::ZeroDivisor, "Minkowski report needs nonzero divisors");

  const QDivisor both[] = {d1, d2};
  const auto form = weighted_mixed(config, both);
  MinkowskiReport report;
  report.e0 = form(0, 0);
  report.e1 = form(0, 1);
  report.e2 = form(1, 1);
  report.product = report.e0 + 2 * report.e1 + report.e2;

  // e(i) = e(I(1)^[i], I(2)^[2-i]): e(2) = e0, e(1) = e1, e(0) = e2.
  const std::array<Rational, 3> by_first_degree = {report.e2, report.e1, report.e0};
  auto e = [&](int i) -> const Rational& { return by_first_degree[static_cast<std::size_t>(i)]; };

  const Rational& e0 = report.e0;
  const Rational& e1 = report.e1;
  const Rational& e2 = report.e2;
  report.checks.push_back({"1) e(1^[1],2^[1])^2 <= e(1^[2]) e(2^[2])", e(1) * e(1), e(2) * e(0)});
  for (int i = 0; i <= 2; ++i) {
    report.checks.push_back({"2) i=" + std::to_string(i), e(i) * e(2 - i), e0 * e2});
  }
  for (int i = 0; i <= 2; ++i) {
    Rational rhs = 1;
    for (int k = 0; k < 2 - i; ++k) rhs *= e0;
    for (int k = 0; k < i; ++k) rhs *= e2;
    report.checks.push_back({"3) i=" + std::to_string(i), e(2 - i) * e(2 - i), rhs});
  }
  // 4) in squared form; equivalent to e1^2 <= e0 e2 only for e1 >= 0.
  if (e1 < 0) throw Error(ErrorCode::InternalInvariantViolation, "negative mixed multiplicity");
  report.checks.push_back({"4) e(I(1)I(2))^(1/2) <= e0^(1/2) + e2^(1/2)", e1 * e1, e0 * e2});

  if (e1 * e1 == e0 * e2) {
    // e1 / e0 = a / b in lowest terms; then a Delta_1 = b Delta_2.
    Rational ratio = e1 / e0;
    ratio.canonicalize();
    ProportionalityCertificate cert{ratio.get_num(), ratio.get_den()};
    const QDivisor lhs = Rational(cert.a) * form.deltas[0];
    const QDivisor rhs = Rational(cert.b) * form.deltas[1];
    if (lhs != rhs) {
      throw Error(ErrorCode::InternalInvariantViolation,
                  "Minkowski equality without proportional anti-nef parts: " + to_string(lhs) + " vs " +
                      to_string(rhs));
    }
    report.equality = cert;
  }
  return report;
}

bool ReesReport::certificates_agree() const {
  return std::all_of(certificates.begin(), certificates.end(),
                     [](const ReesCertificate& c) { return c.first == c.second; });
}

ReesReport rees_check(const ValidatedConfig& config, const QDivisor& d1, const QDivisor& d2, std::int64_t depth) {
  require_effective(config, d1);
  require_effective(config, d2);
  if (!d1.dominated_by(d2)) {
    throw Error(ErrorCode::NotDominated, to_string(d1) + " is not <= " + to_string(d2));
  }
  if (depth < 1) throw Error(ErrorCode::InvalidArgument, "certificate depth must be positive");
  const auto z1 = decompose(config, d1);
  const auto z2 = decompose(config, d2);
  ReesReport report;
  report.vol1 = weighted_volume(config, d1);
  report.vol2 = weighted_volume(config, d2);
  report.volumes_equal = report.vol1 == report.vol2;
  report.delta1 = z1.delta;
  report.delta2 = z2.delta;
  report.delta_equal = z1.delta == z2.delta;
  for (std::int64_t n = 1; n <= depth; ++n) report.certificates.push_back({n, ceil_scale(z1, n), ceil_scale(z2, n)});

  if (report.vol1 > report.vol2) {
    throw Error(ErrorCode::InternalInvariantViolation, "volume decreased along D1 <= D2");
  }
  if (report.volumes_equal && !(report.delta_equal && report.certificates_agree())) {
    throw Error(ErrorCode::InternalInvariantViolation, "equal volumes with distinct anti-nef parts");
  }
  return report;
}

MinkowskiReport prime_distinctness(const ValidatedConfig& config, std::size_t i, std::size_t j) {
  if (i == j) throw Error(ErrorCode::SameIndex, "prime distinctness needs two different curves");
  if (i >= config.size() || j >= config.size()) throw Error(ErrorCode::DimensionMismatch, "curve index out of range");
  if (config.branches().size() != 1) {
    throw Error(ErrorCode::InvalidArgument, "prime distinctness applies to single-branch configs");
  }
  auto report = minkowski_report(config, QDivisor::prime(config.size(), i), QDivisor::prime(config.size(), j));
  if (!report.strict()) {
    throw Error(ErrorCode::InternalInvariantViolation, "distinct primes satisfy the Minkowski equality");
  }
  return report;
}

GammaCandidates gamma(const ValidatedConfig& config, const QDivisor& divisor) {
  return {decompose(config, divisor).delta.coefficients(), true};
}

}  // namespace mixmult
