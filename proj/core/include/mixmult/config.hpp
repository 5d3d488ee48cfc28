#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixmult/rational.hpp"

namespace mixmult {

/// Weighted dual graph of the exceptional curves E_1..E_s of a resolution.
///
/// `gram(i, j)` is the intersection number (E_i . E_j). Curves are grouped
/// into branches, one per maximal ideal of the normalization, and each
/// branch carries the residue field degree used to weight its contribution
/// to multiplicities. The class stores data only; see validate_config().
class ExceptionalConfig {
 public:
  using Branch = std::vector<std::size_t>;

  ExceptionalConfig(std::vector<std::string> curve_labels, Matrix<std::int64_t> gram,
                    std::vector<Branch> branches, std::vector<std::int64_t> weights);

  /// Single branch of weight 1 holding every curve; labels default to E1..Es.
  static ExceptionalConfig single_branch(Matrix<std::int64_t> gram,
                                         std::vector<std::string> curve_labels = {});

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& curve_labels() const noexcept { return labels_; }
  const Matrix<std::int64_t>& gram() const noexcept { return gram_; }
  std::int64_t gram(std::size_t i, std::size_t j) const { return gram_(i, j); }
  const std::vector<Branch>& branches() const noexcept { return branches_; }
  const std::vector<std::int64_t>& weights() const noexcept { return weights_; }

  friend bool operator==(const ExceptionalConfig&, const ExceptionalConfig&) = default;

 private:
  std::vector<std::string> labels_;
  Matrix<std::int64_t> gram_;
  std::vector<Branch> branches_;
  std::vector<std::int64_t> weights_;
};

enum class IssueKind {
  AsymmetricMatrix,
  NotNegativeDefinite,
  PositiveDiagonal,
  NegativeOffDiagonal,
  CrossBranchIntersection,
  DisconnectedBranch,
  BadBranchPartition,
  WeightMismatch,
};

std::string_view to_string(IssueKind kind);

struct ValidationIssue {
  IssueKind kind;
  std::vector<std::size_t> indices;  // offending curve (or branch) indices
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const noexcept { return issues.empty(); }
};

ValidationReport validate_config(const ExceptionalConfig& config);

/// A config that passed validate_config(). Every intersection-theoretic
/// operation takes one of these, so the negative-definiteness hypothesis is
/// established once at construction.
class ValidatedConfig {
 public:
  /// Throws Error(InvalidConfig) listing every violated invariant, or
  /// Error(WeightMismatch) when the branch weights are the only problem.
  explicit ValidatedConfig(ExceptionalConfig config);

  const ExceptionalConfig& config() const noexcept { return config_; }
  std::size_t size() const noexcept { return config_.size(); }
  std::int64_t gram(std::size_t i, std::size_t j) const { return config_.gram(i, j); }
  const std::vector<ExceptionalConfig::Branch>& branches() const noexcept { return config_.branches(); }
  const std::vector<std::int64_t>& weights() const noexcept { return config_.weights(); }

  /// Index of the branch containing `curve`.
  std::size_t branch_of(std::size_t curve) const { return branch_of_[curve]; }

 private:
  ExceptionalConfig config_;
  std::vector<std::size_t> branch_of_;
};

/// Exact Q-divisor sum c_i E_i on a fixed config.
class QDivisor {
 public:
  QDivisor() = default;
  explicit QDivisor(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {}

  static QDivisor zero(std::size_t size) { return QDivisor(std::vector<Rational>(size, 0)); }
  /// The prime divisor E_index scaled by `multiple`.
  static QDivisor prime(std::size_t size, std::size_t index, const Rational& multiple = 1);

  std::size_t size() const noexcept { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_effective() const;
  bool is_integral() const;
  /// Componentwise this <= other. Throws DimensionMismatch on size mismatch.
  bool dominated_by(const QDivisor& other) const;

  QDivisor& operator+=(const QDivisor& other);
  QDivisor& operator-=(const QDivisor& other);
  QDivisor& operator*=(const Rational& scale);
  friend QDivisor operator+(QDivisor a, const QDivisor& b) { return a += b; }
  friend QDivisor operator-(QDivisor a, const QDivisor& b) { return a -= b; }
  friend QDivisor operator*(const Rational& s, QDivisor d) { return d *= s; }

  friend bool operator==(const QDivisor&, const QDivisor&) = default;

 private:
  std::vector<Rational> coeffs_;
};

std::string to_string(const QDivisor& divisor);

/// D1^T * gram * D2, exact.
Rational pair(const ValidatedConfig& config, const QDivisor& d1, const QDivisor& d2);

/// (D . E_i) for every curve.
std::vector<Rational> pairings_with_curves(const ValidatedConfig& config, const QDivisor& d);

bool is_antinef(const ValidatedConfig& config, const QDivisor& d);

/// Throws Error(DimensionMismatch) unless d lives on config.
void require_on(const ValidatedConfig& config, const QDivisor& d);

/// Throws Error(NotEffective) (after the dimension check) unless d >= 0.
void require_effective(const ValidatedConfig& config, const QDivisor& d);

}  // namespace mixmult
