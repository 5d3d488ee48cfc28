#include "mixmult/toric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mixmult/error.hpp"
#include "mixmult/multiplicity.hpp"

namespace mixmult {
namespace {

struct Ray {
  std::int64_t a;
  std::int64_t b;
  friend bool operator==(const Ray&, const Ray&) = default;
};

// Orientation from (1,0) towards (0,1): negative when u comes before w.
std::int64_t cross(const Ray& u, const Ray& w) { return u.b * w.a - u.a * w.b; }

}  // namespace

std::size_t ToricConfig::index_of(const MonomialValuation& ray) const {
  for (std::size_t k = 0; k < rays.size(); ++k)
    if (rays[k] == ray) return k;
  throw Error(ErrorCode::InvalidArgument,
              "valuation (" + std::to_string(ray.a()) + "," + std::to_string(ray.b()) + ") is not a curve");
}

ToricConfig toric_config(std::span<const MonomialValuation> targets) {
  if (targets.empty()) throw Error(ErrorCode::InvalidArgument, "toric_config needs at least one target");
  std::vector<Ray> fan{{1, 0}, {0, 1}};
  for (const auto& t : targets) {
    if (!t.is_divisorial()) {
      throw Error(ErrorCode::NonPrimitiveTarget,
                  "target (" + std::to_string(t.a()) + "," + std::to_string(t.b()) + ") is not primitive");
    }
    const Ray target{t.a(), t.b()};
    // Stern-Brocot descent; adjacent rays always span a unimodular cone.
    Ray left{1, 0};
    Ray right{0, 1};
    while (true) {
      const Ray mid{left.a + right.a, left.b + right.b};
      if (std::find(fan.begin(), fan.end(), mid) == fan.end()) {
        const auto at = std::find(fan.begin(), fan.end(), right);
        fan.insert(at, mid);
      }
      if (mid == target) break;
      if (cross(target, mid) < 0) {
        right = mid;
      } else {
        left = mid;
      }
    }
  }
  const std::size_t s = fan.size() - 2;
  std::vector<MonomialValuation> rays;
  Matrix<std::int64_t> gram(s, s);
  std::vector<std::string> labels;
  for (std::size_t k = 1; k + 1 < fan.size(); ++k) {
    const Ray& prev = fan[k - 1];
    const Ray& cur = fan[k];
    const Ray& next = fan[k + 1];
    // prev + next = c * cur; both coordinates agree since the cones are unimodular.
    const std::int64_t c = cur.a != 0 ? (prev.a + next.a) / cur.a : (prev.b + next.b) / cur.b;
    gram(k - 1, k - 1) = -c;
    if (k + 2 < fan.size()) {
      gram(k - 1, k) = 1;
      gram(k, k - 1) = 1;
    }
    rays.emplace_back(cur.a, cur.b);
    labels.push_back("nu(" + std::to_string(cur.a) + "," + std::to_string(cur.b) + ")");
  }
  ToricConfig out{ExceptionalConfig::single_branch(std::move(gram), std::move(labels)), std::move(rays), {}};
  for (const auto& t : targets) out.target_index.push_back(out.index_of(t));
  return out;
}

std::vector<MonomialValuation> spec_targets(std::span<const OracleFiltrationSpec> specs) {
  std::vector<MonomialValuation> out;
  for (const auto& spec : specs)
    for (const auto& term : spec.terms) {
      const auto g = term.valuation.content();
      out.emplace_back(term.valuation.a() / g, term.valuation.b() / g);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

QDivisor divisor_of_spec(const ToricConfig& toric, const OracleFiltrationSpec& spec) {
  QDivisor d = QDivisor::zero(toric.rays.size());
  for (const auto& term : spec.terms) {
    const auto g = term.valuation.content();
    const std::size_t k = toric.index_of(MonomialValuation(term.valuation.a() / g, term.valuation.b() / g));
    // {g nu >= n c} = {nu >= n c / g}; repeated valuations intersect to the max.
    const Rational c(static_cast<long>(term.coefficient), static_cast<unsigned long>(g));
    if (c > d[k]) d[k] = c;
  }
  return d;
}

MonomialIdeal divisor_ideal(const ToricConfig& toric, const QDivisor& integral_divisor) {
  if (integral_divisor.size() != toric.rays.size()) throw Error(ErrorCode::DimensionMismatch, "divisor size");
  if (!integral_divisor.is_integral() || !integral_divisor.is_effective()) {
    throw Error(ErrorCode::InvalidArgument, "divisor_ideal needs an integral effective divisor");
  }
  MonomialIdeal out = MonomialIdeal::unit();
  for (std::size_t k = 0; k < toric.rays.size(); ++k) {
    const Integer& coeff = integral_divisor[k].get_num();
    if (!coeff.fits_slong_p()) throw Error(ErrorCode::Overflow, "divisor coefficient too large");
    out = intersect(out, val_ideal(toric.rays[k], coeff.get_si()));
  }
  return out;
}

BridgeReport bridge_check(std::span<const OracleFiltrationSpec> specs, std::int64_t window) {
  const auto targets = spec_targets(specs);
  BridgeReport report{toric_config(targets), {}, {}, 0};
  const ValidatedConfig config(report.toric.config);
  for (const auto& spec : specs) report.divisors.push_back(divisor_of_spec(report.toric, spec));

  const auto form = mixed_form(config, report.divisors);
  const auto grid = default_grid(specs.size());
  const auto estimate = mixed_poly_oracle(specs, grid, window);

  const std::size_t r = specs.size();
  report.form.assign(r, std::vector<BridgeComparison>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<int> exponents(r, 0);
      ++exponents[i];
      ++exponents[j];
      double coeff = 0;
      for (const auto& c : estimate.coefficients)
        if (c.exponents == exponents) coeff = c.estimate;
      BridgeComparison cmp;
      cmp.exact = form(i, j);
      cmp.oracle = i == j ? 2.0 * coeff : coeff;
      const double exact = cmp.exact.get_d();
      cmp.relative_discrepancy = exact != 0 ? std::fabs(cmp.oracle - exact) / std::fabs(exact) : std::fabs(cmp.oracle);
      report.max_relative_discrepancy = std::max(report.max_relative_discrepancy, cmp.relative_discrepancy);
      report.form[i][j] = cmp;
    }
  return report;
}

}  // namespace mixmult
