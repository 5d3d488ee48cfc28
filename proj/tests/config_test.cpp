#include <gtest/gtest.h>

#include <random>

#include "mixmult/config.hpp"
#include "mixmult/error.hpp"
#include "test_support.hpp"

namespace mixmult {
namespace {

using testing::div;
using testing::gram_of;
using testing::q;

std::vector<IssueKind> kinds(const ValidationReport& r) {
  std::vector<IssueKind> out;
  for (const auto& i : r.issues) out.push_back(i.kind);
  return out;
}

TEST(ValidateConfig, SingleMinusOneCurveIsValid) {
  EXPECT_TRUE(validate_config(ExceptionalConfig::single_branch(gram_of({{-1}}))).ok());
}

TEST(ValidateConfig, A2IsValid) {
  EXPECT_TRUE(validate_config(ExceptionalConfig::single_branch(gram_of({{-2, 1}, {1, -2}}))).ok());
}

TEST(ValidateConfig, SingularFormIsNotNegativeDefinite) {
  const auto report = validate_config(ExceptionalConfig::single_branch(gram_of({{-2, 2}, {2, -2}})));
  ASSERT_EQ(kinds(report), std::vector<IssueKind>{IssueKind::NotNegativeDefinite});
  EXPECT_EQ(report.issues[0].indices, (std::vector<std::size_t>{0, 1}));
}

TEST(ValidateConfig, NegativeOffDiagonalNamesIndices) {
  const auto report = validate_config(ExceptionalConfig::single_branch(gram_of({{-2, -1}, {-1, -2}})));
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.issues[0].kind, IssueKind::NegativeOffDiagonal);
  EXPECT_EQ(report.issues[0].indices, (std::vector<std::size_t>{0, 1}));
}

TEST(ValidateConfig, AsymmetricAndPositiveDiagonal) {
  const auto report = validate_config(ExceptionalConfig::single_branch(gram_of({{0, 1}, {2, -2}})));
  const auto k = kinds(report);
  EXPECT_NE(std::find(k.begin(), k.end(), IssueKind::AsymmetricMatrix), k.end());
  EXPECT_NE(std::find(k.begin(), k.end(), IssueKind::PositiveDiagonal), k.end());
}

TEST(ValidateConfig, BranchStructure) {
  // Two curves meeting but declared in different branches.
  ExceptionalConfig cross({"A", "B"}, gram_of({{-2, 1}, {1, -2}}), {{0}, {1}}, {1, 1});
  EXPECT_EQ(kinds(validate_config(cross)), std::vector<IssueKind>{IssueKind::CrossBranchIntersection});

  // Two disjoint curves in one branch.
  ExceptionalConfig split({"A", "B"}, gram_of({{-1, 0}, {0, -1}}), {{0, 1}}, {1});
  const auto report = validate_config(split);
  ASSERT_EQ(kinds(report), std::vector<IssueKind>{IssueKind::DisconnectedBranch});
  EXPECT_EQ(report.issues[0].indices, std::vector<std::size_t>{1});

  ExceptionalConfig missing({"A", "B"}, gram_of({{-1, 0}, {0, -1}}), {{0}}, {1});
  EXPECT_EQ(kinds(validate_config(missing)), std::vector<IssueKind>{IssueKind::BadBranchPartition});

  ExceptionalConfig zero_weights({"A", "B"}, gram_of({{-1, 0}, {0, -1}}), {{0}, {1}}, {0, 0});
  EXPECT_EQ(kinds(validate_config(zero_weights)),
            (std::vector<IssueKind>{IssueKind::WeightMismatch, IssueKind::WeightMismatch}));
  try {
    ValidatedConfig v(zero_weights);
    FAIL() << "expected WeightMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WeightMismatch);
  }
}

TEST(ValidateConfig, ValidatedConfigThrowsOnInvalid) {
  try {
    ValidatedConfig v(ExceptionalConfig::single_branch(gram_of({{-2, 2}, {2, -2}})));
    FAIL() << "expected InvalidConfig";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidConfig);
    EXPECT_NE(std::string(e.what()).find("NotNegativeDefinite"), std::string::npos);
  }
}

TEST(ValidateConfig, DimensionMismatchOnConstruction) {
  EXPECT_THROW(ExceptionalConfig({"A"}, gram_of({{-2, 1}, {1, -2}}), {{0}}, {1}), Error);
}

TEST(ValidateConfig, LeadingMinorsAgreeWithCofactorExpansion) {
  // E8-like 3x3 block: [-2 1 0; 1 -2 1; 0 1 -2] has minors -2, 3, -4.
  Matrix<Integer> m(3, 3);
  const int v[3][3] = {{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = v[i][j];
  EXPECT_EQ(leading_principal_minors(m), (std::vector<Integer>{-2, 3, -4}));
}

TEST(Pair, Examples) {
  const auto c = testing::chain21();
  EXPECT_EQ(pair(c, QDivisor::zero(2), div({3, q(1, 2)})), 0);
  EXPECT_EQ(pair(c, div({1, 1}), div({1, 1})), -1);
  EXPECT_EQ(pair(testing::a2(), div({1, 0}), div({0, 1})), 1);
  EXPECT_THROW(pair(c, div({1}), div({1, 1})), Error);
}

TEST(IsAntinef, Examples) {
  const auto c = testing::chain21();
  EXPECT_TRUE(is_antinef(c, div({1, 1})));
  EXPECT_FALSE(is_antinef(c, div({1, 0})));
  EXPECT_TRUE(is_antinef(c, QDivisor::zero(2)));
  EXPECT_THROW(is_antinef(c, div({1, 0, 0})), Error);
}

TEST(PairProperties, SymmetricBilinearNegativeDefiniteCauchySchwarz) {
  std::mt19937_64 rng(20261015);
  for (int trial = 0; trial < 300; ++trial) {
    const ValidatedConfig c(testing::random_connected_config(rng));
    const auto x = testing::random_divisor(rng, c.size());
    const auto y = testing::random_divisor(rng, c.size());
    const auto z = testing::random_divisor(rng, c.size());
    const Rational s = testing::q(trial % 7 - 3, 1 + trial % 4);
    EXPECT_EQ(pair(c, x, y), pair(c, y, x));
    EXPECT_EQ(pair(c, s * x + z, y), s * pair(c, x, y) + pair(c, z, y));
    if (!x.is_zero()) EXPECT_LT(pair(c, x, x), 0);

    const Rational lhs = pair(c, x, y) * pair(c, x, y);
    const Rational rhs = pair(c, x, x) * pair(c, y, y);
    EXPECT_LE(lhs, rhs);
    // Equality exactly for dependent pairs.
    const auto dependent = s * x;
    EXPECT_EQ(pair(c, x, dependent) * pair(c, x, dependent), pair(c, x, x) * pair(c, dependent, dependent));
    bool proportional = x.is_zero() || y.is_zero();
    if (!proportional) {
      std::size_t k = 0;
      while (x[k] == 0) ++k;
      proportional = (y[k] / x[k]) * x == y;
    }
    EXPECT_EQ(lhs == rhs, proportional);
  }
}

TEST(QDivisorOps, Predicates) {
  const auto d = div({q(1, 2), 0, 2});
  EXPECT_TRUE(d.is_effective());
  EXPECT_FALSE(d.is_integral());
  EXPECT_TRUE((2 * d).is_integral());
  EXPECT_TRUE(d.dominated_by(div({1, 0, 2})));
  EXPECT_FALSE(d.dominated_by(div({0, 0, 2})));
  EXPECT_FALSE(div({-1, 0, 0}).is_effective());
  EXPECT_EQ(to_string(d), "[1/2, 0, 2]");
}

}  // namespace
}  // namespace mixmult
