#include "mixmult/multiplicity.hpp"

#include <algorithm>

#include "mixmult/error.hpp"
#include "mixmult/zariski.hpp"

namespace mixmult {
namespace {

QDivisor restrict_to(const ValidatedConfig& config, const QDivisor& d, std::size_t branch) {
  QDivisor out = QDivisor::zero(d.size());
  for (std::size_t curve : config.branches()[branch]) out[curve] = d[curve];
  return out;
}

}  // namespace

Rational volume(const ValidatedConfig& config, const QDivisor& divisor) {
  const auto z = decompose(config, divisor);
  return -pair(config, z.delta, z.delta);
}

Rational weighted_volume(const ValidatedConfig& config, const QDivisor& divisor) {
  require_effective(config, divisor);
  Rational total = 0;
  for (std::size_t b = 0; b < config.branches().size(); ++b) {
    total += Rational(static_cast<long>(config.weights()[b])) * volume(config, restrict_to(config, divisor, b));
  }
  return total;
}

MixedMultiplicityForm mixed_form(const ValidatedConfig& config, std::span<const QDivisor> divisors) {
  MixedMultiplicityForm form;
  const std::size_t r = divisors.size();
  form.divisors.assign(divisors.begin(), divisors.end());
  for (const auto& d : divisors) form.deltas.push_back(decompose(config, d).delta);
  form.matrix = RationalMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      form.matrix(i, j) = -pair(config, form.deltas[i], form.deltas[j]);
      form.matrix(j, i) = form.matrix(i, j);
    }
  return form;
}

MixedMultiplicityForm weighted_mixed(const ValidatedConfig& config, std::span<const QDivisor> divisors) {
  const std::size_t r = divisors.size();
  const std::size_t t = config.branches().size();
  if (config.weights().size() != t ||
      std::any_of(config.weights().begin(), config.weights().end(), [](auto w) { return w <= 0; })) {
    throw Error(ErrorCode::WeightMismatch, "one positive weight per branch is required");
  }
  for (const auto& d : divisors) require_effective(config, d);

  MixedMultiplicityForm form;
  form.divisors.assign(divisors.begin(), divisors.end());
  form.deltas.assign(r, QDivisor::zero(config.size()));
  form.matrix = RationalMatrix(r, r);
  form.weights_applied = true;
  for (std::size_t b = 0; b < t; ++b) {
    std::vector<QDivisor> parts;
    parts.reserve(r);
    for (const auto& d : divisors) parts.push_back(restrict_to(config, d, b));
    const auto local = mixed_form(config, parts);
    const Rational weight(static_cast<long>(config.weights()[b]));
    for (std::size_t i = 0; i < r; ++i) {
      form.deltas[i] += local.deltas[i];
      for (std::size_t j = 0; j < r; ++j) form.matrix(i, j) += weight * local.matrix(i, j);
    }
  }
  return form;
}

MultiplicityPolynomial::MultiplicityPolynomial(const MixedMultiplicityForm& form) : variables_(form.rank()) {
  const std::size_t r = variables_;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<int> square(r, 0);
    square[i] = 2;
    terms_.push_back({square, form(i, i) / 2});
    for (std::size_t j = i + 1; j < r; ++j) {
      std::vector<int> mixed(r, 0);
      mixed[i] = mixed[j] = 1;
      terms_.push_back({mixed, form(i, j)});
    }
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const PolynomialTerm& a, const PolynomialTerm& b) { return a.exponents > b.exponents; });
}

const Rational& MultiplicityPolynomial::coefficient(std::span<const int> exponents) const {
  for (const auto& term : terms_)
    if (std::equal(term.exponents.begin(), term.exponents.end(), exponents.begin(), exponents.end()))
      return term.coefficient;
  throw Error(ErrorCode::InvalidArgument, "no monomial with these exponents");
}

Rational MultiplicityPolynomial::evaluate(std::span<const std::int64_t> n) const {
  if (n.size() != variables_) throw Error(ErrorCode::DimensionMismatch, "wrong number of arguments");
  Rational total = 0;
  for (const auto& term : terms_) {
    Rational monomial = term.coefficient;
    for (std::size_t i = 0; i < variables_; ++i)
      for (int k = 0; k < term.exponents[i]; ++k) monomial *= Rational(static_cast<long>(n[i]));
    total += monomial;
  }
  return total;
}

MultiplicityPolynomial mixed_polynomial(const ValidatedConfig& config, std::span<const QDivisor> divisors) {
  return MultiplicityPolynomial(mixed_form(config, divisors));
}

Rational product_multiplicity(const ValidatedConfig& config, const QDivisor& d1, const QDivisor& d2) {
  const QDivisor both[] = {d1, d2};
  const auto form = mixed_form(config, both);
  return form(0, 0) + 2 * form(0, 1) + form(1, 1);
}

}  // namespace mixmult
