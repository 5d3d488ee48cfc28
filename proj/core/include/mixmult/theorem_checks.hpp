#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixmult/config.hpp"

namespace mixmult {

/// One instance of a Minkowski inequality lhs <= rhs, evaluated exactly.
struct InequalityCheck {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs <= rhs; }
};

/// a * Delta_1 = b * Delta_2 with gcd(a, b) = 1.
struct ProportionalityCertificate {
  Integer a;
  Integer b;
};

struct MinkowskiReport {
  Rational e0;  // e(I(1)^[2])
  Rational e1;  // e(I(1)^[1], I(2)^[1])
  Rational e2;  // e(I(2)^[2])
  Rational product;  // e(I(1) I(2)) = e0 + 2 e1 + e2
  /// Inequalities 1) to 4) in order; 2) and 3) contribute one entry per index i.
  std::vector<InequalityCheck> checks;
  /// Present exactly when e1^2 = e0 e2.
  std::optional<ProportionalityCertificate> equality;

  bool all_hold() const;
  bool strict() const { return !equality.has_value(); }
};

/// Evaluates the dimension-two Minkowski inequalities for the filtrations of
/// D1 and D2 (branch weights applied) and classifies the equality case.
/// Inequality 4), sqrt(e0 + 2e1 + e2) <= sqrt(e0) + sqrt(e2), is evaluated in
/// its squared form 2 e1 <= 2 sqrt(e0 e2), i.e. e1^2 <= e0 e2 given e1 >= 0.
/// Throws ZeroDivisor when either divisor is zero.
MinkowskiReport minkowski_report(const ValidatedConfig& config, const QDivisor& d1, const QDivisor& d2);

struct ReesCertificate {
  std::int64_t n;
  QDivisor first;   // ceil(n Delta_1)
  QDivisor second;  // ceil(n Delta_2)
};

struct ReesReport {
  Rational vol1;
  Rational vol2;
  bool volumes_equal = false;
  bool delta_equal = false;
  QDivisor delta1;
  QDivisor delta2;
  std::vector<ReesCertificate> certificates;

  bool certificates_agree() const;
};

inline constexpr std::int64_t kDefaultCertificateDepth = 50;

/// Rees check for D1 <= D2 (NotDominated otherwise). Volumes are branch-weighted.
ReesReport rees_check(const ValidatedConfig& config, const QDivisor& d1, const QDivisor& d2,
                      std::int64_t depth = kDefaultCertificateDepth);

/// Minkowski report for the prime divisors E_i, E_j of a single-branch
/// config; distinct primes must give the strict case.
MinkowskiReport prime_distinctness(const ValidatedConfig& config, std::size_t i, std::size_t j);

/// Candidate values of gamma_{E_i}(D) = inf_m tau_m / m, read off as the
/// coefficients of Delta. `experimental` is always set: the identification
/// is checked against lattice tau-sequences, not proved.
struct GammaCandidates {
  std::vector<Rational> values;
  bool experimental = true;
};

GammaCandidates gamma(const ValidatedConfig& config, const QDivisor& divisor);

}  // namespace mixmult
