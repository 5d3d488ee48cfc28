#include "mixmult/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "mixmult/error.hpp"

namespace mixmult {
namespace {

// Dense least squares through the normal equations; systems here are at most
// a few unknowns with well-separated columns.
std::vector<long double> least_squares(const std::vector<std::vector<long double>>& rows,
                                       const std::vector<long double>& rhs) {
  const std::size_t k = rows.empty() ? 0 : rows.front().size();
  std::vector<std::vector<long double>> a(k, std::vector<long double>(k + 1, 0));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t p = 0; p < k; ++p) {
      for (std::size_t q = 0; q < k; ++q) a[p][q] += rows[r][p] * rows[r][q];
      a[p][k] += rows[r][p] * rhs[r];
    }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < k; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
    if (std::fabs(a[pivot][col]) < 1e-18L) throw Error(ErrorCode::TooFewPoints, "rank-deficient fit");
    std::swap(a[col], a[pivot]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col) continue;
      const long double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= k; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<long double> x(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = a[i][k] / a[i][i];
  return x;
}

std::vector<std::vector<int>> quadratic_exponents(std::size_t r) {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      std::vector<int> e(r, 0);
      ++e[i];
      ++e[j];
      out.push_back(std::move(e));
    }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(x, y, &out)) throw Error(ErrorCode::Overflow, "filtration index overflows int64");
  return out;
}

}  // namespace

void OracleFiltrationSpec::validate() const {
  bool positive = false;
  for (const auto& term : terms) {
    if (term.coefficient < 0) throw Error(ErrorCode::InvalidArgument, "negative filtration coefficient");
    positive = positive || term.coefficient > 0;
  }
  if (!positive) throw Error(ErrorCode::InvalidArgument, "filtration spec needs a positive coefficient");
}

MonomialIdeal filtration_ideal(const OracleFiltrationSpec& spec, std::int64_t n) {
  MonomialIdeal out = MonomialIdeal::unit();
  for (const auto& term : spec.terms) out = intersect(out, val_ideal(term.valuation, checked_mul(n, term.coefficient)));
  return out;
}

std::vector<std::int64_t> colength_sequence(const OracleFiltrationSpec& spec, std::int64_t max_m) {
  spec.validate();
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(std::max<std::int64_t>(max_m, 0)));
  for (std::int64_t m = 1; m <= max_m; ++m) out.push_back(colength(filtration_ideal(spec, m)));
  return out;
}

LimitFit limit_fit(std::span<const std::int64_t> lengths) {
  const auto max_m = static_cast<std::int64_t>(lengths.size());
  if (max_m < kMinFitPoints) {
    throw Error(ErrorCode::TooFewPoints, "limit fit needs at least " + std::to_string(kMinFitPoints) +
                                             " terms, got " + std::to_string(max_m));
  }
  // Fit in the scaled variable x = m / M to keep the normal equations tame.
  const auto scale = static_cast<long double>(max_m);
  std::vector<std::vector<long double>> rows;
  std::vector<long double> rhs;
  for (std::int64_t m = max_m / 2 + 1; m <= max_m; ++m) {
    const long double x = static_cast<long double>(m) / scale;
    rows.push_back({x * x, x, 1.0L});
    rhs.push_back(static_cast<long double>(lengths[static_cast<std::size_t>(m - 1)]));
  }
  const auto coef = least_squares(rows, rhs);
  LimitFit fit;
  fit.quadratic = static_cast<double>(coef[0] / (scale * scale));
  fit.linear = static_cast<double>(coef[1] / scale);
  fit.constant = static_cast<double>(coef[2]);
  fit.estimate = 2.0 * fit.quadratic;
  long double sq = 0;
  long double mean_abs = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const long double predicted = coef[0] * rows[r][0] + coef[1] * rows[r][1] + coef[2];
    sq += (predicted - rhs[r]) * (predicted - rhs[r]);
    mean_abs += std::fabs(rhs[r]);
  }
  const auto count = static_cast<long double>(rows.size());
  mean_abs /= count;
  fit.residual = static_cast<double>(std::sqrt(sq / count) / std::max(mean_abs, 1.0L));
  return fit;
}

std::vector<std::vector<std::int64_t>> default_grid(std::size_t variables) {
  std::vector<std::vector<std::int64_t>> grid;
  for (std::size_t i = 0; i < variables; ++i) {
    std::vector<std::int64_t> point(variables, 0);
    point[i] = 1;
    grid.push_back(std::move(point));
  }
  for (std::size_t i = 0; i < variables; ++i)
    for (std::size_t j = i + 1; j < variables; ++j) {
      std::vector<std::int64_t> point(variables, 0);
      point[i] = point[j] = 1;
      grid.push_back(std::move(point));
    }
  return grid;
}

MixedPolynomialEstimate mixed_poly_oracle(std::span<const OracleFiltrationSpec> specs,
                                          std::span<const std::vector<std::int64_t>> grid, std::int64_t max_m) {
  const std::size_t r = specs.size();
  if (r == 0) throw Error(ErrorCode::InvalidArgument, "no filtrations given");
  for (const auto& spec : specs) spec.validate();
  if (max_m < kMinFitPoints) throw Error(ErrorCode::TooFewPoints, "window too short for a limit fit");
  const auto exponents = quadratic_exponents(r);
  if (grid.size() < exponents.size()) {
    throw Error(ErrorCode::TooFewPoints, "grid has " + std::to_string(grid.size()) + " points, " +
                                             std::to_string(exponents.size()) + " coefficients are unknown");
  }
  for (const auto& point : grid) {
    if (point.size() != r) throw Error(ErrorCode::DimensionMismatch, "grid point has the wrong arity");
    if (std::any_of(point.begin(), point.end(), [](auto v) { return v < 0; }))
      throw Error(ErrorCode::InvalidArgument, "grid points must be nonnegative");
  }

  auto evaluate_point = [&specs, max_m](const std::vector<std::int64_t>& point) {
    std::vector<std::int64_t> lengths;
    lengths.reserve(static_cast<std::size_t>(max_m));
    for (std::int64_t m = 1; m <= max_m; ++m) {
      MonomialIdeal ideal = MonomialIdeal::unit();
      for (std::size_t k = 0; k < specs.size(); ++k) {
        if (point[k] == 0) continue;
        ideal = product(ideal, filtration_ideal(specs[k], checked_mul(m, point[k])));
      }
      lengths.push_back(colength(ideal));
    }
    return limit_fit(lengths);
  };

  std::vector<std::future<LimitFit>> pending;
  pending.reserve(grid.size());
  for (const auto& point : grid) pending.push_back(std::async(std::launch::async, evaluate_point, std::cref(point)));

  MixedPolynomialEstimate out;
  out.grid.assign(grid.begin(), grid.end());
  for (auto& f : pending) out.fits.push_back(f.get());

  std::vector<std::vector<long double>> rows;
  std::vector<long double> rhs;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    std::vector<long double> row;
    for (const auto& e : exponents) {
      long double v = 1;
      for (std::size_t i = 0; i < r; ++i)
        for (int p = 0; p < e[i]; ++p) v *= static_cast<long double>(grid[g][i]);
      row.push_back(v);
    }
    rows.push_back(std::move(row));
    rhs.push_back(out.fits[g].quadratic);
  }
  const auto coef = least_squares(rows, rhs);
  for (std::size_t c = 0; c < exponents.size(); ++c) out.coefficients.push_back({exponents[c], static_cast<double>(coef[c])});
  for (std::size_t g = 0; g < rows.size(); ++g) {
    long double predicted = 0;
    for (std::size_t c = 0; c < coef.size(); ++c) predicted += coef[c] * rows[g][c];
    out.residual = std::max(out.residual, static_cast<double>(std::fabs(predicted - rhs[g])));
  }
  return out;
}

std::vector<std::int64_t> tau_sequence(const OracleFiltrationSpec& spec, const MonomialValuation& target,
                                       std::int64_t max_m) {
  spec.validate();
  std::vector<std::int64_t> out;
  for (std::int64_t m = 1; m <= max_m; ++m) {
    const auto ideal = filtration_ideal(spec, m);
    std::int64_t best = target(ideal.generators().front());
    for (const auto& g : ideal.generators()) best = std::min(best, target(g));
    out.push_back(best);
  }
  return out;
}

TruncatedFiltration::TruncatedFiltration(OracleFiltrationSpec spec, std::int64_t level)
    : spec_(std::move(spec)), level_(level) {
  spec_.validate();
  if (level_ < 1) throw Error(ErrorCode::InvalidArgument, "truncation level must be positive");
}

std::vector<MonomialIdeal> TruncatedFiltration::ideals(std::int64_t max_n) const {
  std::vector<MonomialIdeal> memo;
  memo.reserve(static_cast<std::size_t>(std::max<std::int64_t>(max_n, 0)) + 1);
  memo.push_back(MonomialIdeal::unit());
  for (std::int64_t n = 1; n <= max_n; ++n) {
    if (n <= level_) {
      memo.push_back(filtration_ideal(spec_, n));
      continue;
    }
    // Terms I_{a,alpha} I_{a,beta} with both indices above a expand into
    // terms with one index at most a, so alpha <= a already spans the sum.
    MonomialIdeal acc;
    for (std::int64_t alpha = 1; alpha <= level_; ++alpha) {
      acc = sum(acc, product(memo[static_cast<std::size_t>(alpha)], memo[static_cast<std::size_t>(n - alpha)]));
    }
    memo.push_back(std::move(acc));
  }
  return memo;
}

std::vector<std::int64_t> TruncatedFiltration::colengths(std::int64_t max_m) const {
  const auto all = ideals(max_m);
  std::vector<std::int64_t> out;
  for (std::int64_t m = 1; m <= max_m; ++m) out.push_back(colength(all[static_cast<std::size_t>(m)]));
  return out;
}

TruncatedFiltration truncate(const OracleFiltrationSpec& spec, std::int64_t level) {
  return TruncatedFiltration(spec, level);
}

}  // namespace mixmult
