#include "mixmult/config.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mixmult/error.hpp"

namespace mixmult {

ExceptionalConfig::ExceptionalConfig(std::vector<std::string> curve_labels, Matrix<std::int64_t> gram,
                                     std::vector<Branch> branches, std::vector<std::int64_t> weights)
    : labels_(std::move(curve_labels)),
      gram_(std::move(gram)),
      branches_(std::move(branches)),
      weights_(std::move(weights)) {
  if (gram_.rows() != labels_.size() || gram_.cols() != labels_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "gram must be " + std::to_string(labels_.size()) + "x" +
                                                  std::to_string(labels_.size()));
  }
}

ExceptionalConfig ExceptionalConfig::single_branch(Matrix<std::int64_t> gram,
                                                   std::vector<std::string> curve_labels) {
  const std::size_t s = gram.rows();
  if (curve_labels.empty()) {
    for (std::size_t i = 0; i < s; ++i) curve_labels.push_back("E" + std::to_string(i + 1));
  }
  Branch all(s);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return ExceptionalConfig(std::move(curve_labels), std::move(gram), {std::move(all)}, {1});
}

std::string_view to_string(IssueKind kind) {
  switch (kind) {
    case IssueKind::AsymmetricMatrix: return "AsymmetricMatrix";
    case IssueKind::NotNegativeDefinite: return "NotNegativeDefinite";
    case IssueKind::PositiveDiagonal: return "PositiveDiagonal";
    case IssueKind::NegativeOffDiagonal: return "NegativeOffDiagonal";
    case IssueKind::CrossBranchIntersection: return "CrossBranchIntersection";
    case IssueKind::DisconnectedBranch: return "DisconnectedBranch";
    case IssueKind::BadBranchPartition: return "BadBranchPartition";
    case IssueKind::WeightMismatch: return "WeightMismatch";
  }
  return "Unknown";
}

namespace {

std::string pair_text(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Fills `owner` with the branch index of each curve; returns false when the
// branches do not partition 0..s-1 into non-empty groups.
bool branch_owners(const ExceptionalConfig& config, std::vector<std::size_t>& owner,
                   std::vector<ValidationIssue>& issues) {
  const std::size_t s = config.size();
  constexpr auto unset = static_cast<std::size_t>(-1);
  owner.assign(s, unset);
  bool ok = true;
  if (config.branches().empty()) {
    issues.push_back({IssueKind::BadBranchPartition, {}, "no branches given"});
    return false;
  }
  for (std::size_t b = 0; b < config.branches().size(); ++b) {
    const auto& branch = config.branches()[b];
    if (branch.empty()) {
      issues.push_back({IssueKind::BadBranchPartition, {b}, "branch " + std::to_string(b) + " is empty"});
      ok = false;
    }
    for (std::size_t curve : branch) {
      if (curve >= s) {
        issues.push_back({IssueKind::BadBranchPartition, {b, curve},
                          "branch " + std::to_string(b) + " names unknown curve " + std::to_string(curve)});
        ok = false;
      } else if (owner[curve] != unset) {
        issues.push_back({IssueKind::BadBranchPartition, {curve},
                          "curve " + std::to_string(curve) + " appears in more than one branch slot"});
        ok = false;
      } else {
        owner[curve] = b;
      }
    }
  }
  for (std::size_t i = 0; i < s; ++i) {
    if (owner[i] == unset) {
      issues.push_back({IssueKind::BadBranchPartition, {i}, "curve " + std::to_string(i) + " is in no branch"});
      ok = false;
    }
  }
  return ok;
}

}  // namespace

ValidationReport validate_config(const ExceptionalConfig& config) {
  ValidationReport report;
  auto& issues = report.issues;
  const std::size_t s = config.size();
  if (s == 0) {
    issues.push_back({IssueKind::BadBranchPartition, {}, "configuration has no curves"});
    return report;
  }

  bool symmetric = true;
  for (std::size_t i = 0; i < s; ++i) {
    if (config.gram(i, i) >= 0) {
      issues.push_back({IssueKind::PositiveDiagonal, {i},
                        "self-intersection of curve " + std::to_string(i) + " is " +
                            std::to_string(config.gram(i, i)) + ", must be negative"});
    }
    for (std::size_t j = i + 1; j < s; ++j) {
      if (config.gram(i, j) != config.gram(j, i)) {
        symmetric = false;
        issues.push_back({IssueKind::AsymmetricMatrix, {i, j}, "entries " + pair_text(i, j) + " and " +
                                                                   pair_text(j, i) + " differ"});
      } else if (config.gram(i, j) < 0) {
        issues.push_back({IssueKind::NegativeOffDiagonal, {i, j},
                          "intersection " + pair_text(i, j) + " is negative"});
      }
    }
  }

  if (symmetric) {
    Matrix<Integer> g(s, s);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) g(i, j) = Integer(static_cast<long>(config.gram(i, j)));
    const auto minors = leading_principal_minors(g);
    for (std::size_t k = 0; k < s; ++k) {
      // order k+1 minor must have sign (-1)^(k+1)
      const int expected = (k % 2 == 0) ? -1 : 1;
      if (sgn(minors[k]) != expected) {
        std::vector<std::size_t> block(k + 1);
        std::iota(block.begin(), block.end(), std::size_t{0});
        issues.push_back({IssueKind::NotNegativeDefinite, std::move(block),
                          "leading principal minor of order " + std::to_string(k + 1) + " is " +
                              minors[k].get_str()});
        break;
      }
    }
  }

  std::vector<std::size_t> owner;
  if (branch_owners(config, owner, issues)) {
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = i + 1; j < s; ++j)
        if (owner[i] != owner[j] && (config.gram(i, j) != 0 || config.gram(j, i) != 0)) {
          issues.push_back({IssueKind::CrossBranchIntersection, {i, j},
                            "curves " + pair_text(i, j) + " meet across branches"});
        }
    for (std::size_t b = 0; b < config.branches().size(); ++b) {
      const auto& branch = config.branches()[b];
      std::vector<std::size_t> stack{branch.front()};
      std::vector<bool> seen(s, false);
      seen[branch.front()] = true;
      while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v : branch) {
          if (!seen[v] && config.gram(u, v) > 0) {
            seen[v] = true;
            stack.push_back(v);
          }
        }
      }
      std::vector<std::size_t> unreached;
      for (std::size_t v : branch)
        if (!seen[v]) unreached.push_back(v);
      if (!unreached.empty()) {
        issues.push_back({IssueKind::DisconnectedBranch, unreached,
                          "branch " + std::to_string(b) + " has an intersection graph that is not connected"});
      }
    }
  }

  if (config.weights().size() != config.branches().size()) {
    issues.push_back({IssueKind::WeightMismatch, {},
                      "expected " + std::to_string(config.branches().size()) + " branch weights, got " +
                          std::to_string(config.weights().size())});
  } else {
    for (std::size_t b = 0; b < config.weights().size(); ++b)
      if (config.weights()[b] <= 0) {
        issues.push_back({IssueKind::WeightMismatch, {b}, "weight of branch " + std::to_string(b) +
                                                              " must be a positive integer"});
      }
  }
  return report;
}

ValidatedConfig::ValidatedConfig(ExceptionalConfig config) : config_(std::move(config)) {
  const auto report = validate_config(config_);
  if (!report.ok()) {
    std::string message;
    for (const auto& issue : report.issues) {
      if (!message.empty()) message += "; ";
      message += std::string(to_string(issue.kind)) + ": " + issue.message;
    }
    const bool only_weights = std::all_of(report.issues.begin(), report.issues.end(),
                                          [](const auto& i) { return i.kind == IssueKind::WeightMismatch; });
    throw Error(only_weights ? ErrorCode::WeightMismatch : ErrorCode::InvalidConfig, message);
  }
  branch_of_.assign(config_.size(), 0);
  for (std::size_t b = 0; b < config_.branches().size(); ++b)
    for (std::size_t curve : config_.branches()[b]) branch_of_[curve] = b;
}

QDivisor QDivisor::prime(std::size_t size, std::size_t index, const Rational& multiple) {
  QDivisor d = zero(size);
  d.coeffs_.at(index) = multiple;
  return d;
}

bool QDivisor::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool QDivisor::is_effective() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c >= 0; });
}

bool QDivisor::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

bool QDivisor::dominated_by(const QDivisor& other) const {
  if (size() != other.size()) throw Error(ErrorCode::DimensionMismatch, "divisor lengths differ");
  for (std::size_t i = 0; i < size(); ++i)
    if (coeffs_[i] > other.coeffs_[i]) return false;
  return true;
}

QDivisor& QDivisor::operator+=(const QDivisor& other) {
  if (size() != other.size()) throw Error(ErrorCode::DimensionMismatch, "divisor lengths differ");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

QDivisor& QDivisor::operator-=(const QDivisor& other) {
  if (size() != other.size()) throw Error(ErrorCode::DimensionMismatch, "divisor lengths differ");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

QDivisor& QDivisor::operator*=(const Rational& scale) {
  for (auto& c : coeffs_) c *= scale;
  return *this;
}

std::string to_string(const QDivisor& divisor) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < divisor.size(); ++i) out << (i ? ", " : "") << to_string(divisor[i]);
  out << "]";
  return out.str();
}

void require_on(const ValidatedConfig& config, const QDivisor& d) {
  if (d.size() != config.size()) {
    throw Error(ErrorCode::DimensionMismatch, "divisor has " + std::to_string(d.size()) +
                                                  " coefficients, config has " + std::to_string(config.size()) +
                                                  " curves");
  }
}

void require_effective(const ValidatedConfig& config, const QDivisor& d) {
  require_on(config, d);
  if (!d.is_effective()) throw Error(ErrorCode::NotEffective, "divisor " + to_string(d) + " is not effective");
}

Rational pair(const ValidatedConfig& config, const QDivisor& d1, const QDivisor& d2) {
  require_on(config, d1);
  require_on(config, d2);
  Rational total = 0;
  const std::size_t s = config.size();
  for (std::size_t i = 0; i < s; ++i) {
    if (d1[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < s; ++j) {
      if (config.gram(i, j) != 0 && d2[j] != 0) row += Rational(static_cast<long>(config.gram(i, j))) * d2[j];
    }
    total += d1[i] * row;
  }
  return total;
}

std::vector<Rational> pairings_with_curves(const ValidatedConfig& config, const QDivisor& d) {
  require_on(config, d);
  const std::size_t s = config.size();
  std::vector<Rational> out(s, 0);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      if (config.gram(i, j) != 0) out[i] += Rational(static_cast<long>(config.gram(i, j))) * d[j];
  return out;
}

bool is_antinef(const ValidatedConfig& config, const QDivisor& d) {
  const auto p = pairings_with_curves(config, d);
  return std::all_of(p.begin(), p.end(), [](const Rational& v) { return v <= 0; });
}

}  // namespace mixmult
