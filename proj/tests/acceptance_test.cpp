// Acceptance suite: one PASS/FAIL line per criterion; exits nonzero if any fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mixmult/config.hpp"
#include "mixmult/monomial.hpp"
#include "mixmult/multiplicity.hpp"
#include "mixmult/oracle.hpp"
#include "mixmult/theorem_checks.hpp"
#include "mixmult/toric.hpp"
#include "mixmult/zariski.hpp"
#include "test_support.hpp"

namespace {

using namespace mixmult;
using namespace mixmult::testing;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  // Records the first failure message only; later ones are counted.
  void fail(const std::string& why) {
    if (pass) first_failure = why;
    pass = false;
    ++failures;
  }
  std::string first_failure;
  int failures = 0;
};

double rel(double value, double expected) { return std::abs(value - expected) / std::abs(expected); }

OracleFiltrationSpec spec(std::initializer_list<std::array<std::int64_t, 3>> terms) {
  OracleFiltrationSpec s;
  for (const auto& t : terms) s.terms.push_back({MonomialValuation(t[0], t[1]), t[2]});
  return s;
}

std::string pct(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f%%", 100.0 * x);
  return buf;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5f", x);
  return buf;
}

// ---- 1 ----
void zariski_fixtures(Verdict& v) {
  struct Fixture {
    ValidatedConfig config;
    QDivisor d;
    QDivisor delta;
    Rational vol;
    const char* name;
  };
  const Fixture fixtures[] = {
      {a2(), div({1, 0}), div({1, q(1, 2)}), q(3, 2), "A2 E1"},
      {chain21(), div({1, 0}), div({1, 1}), q(1), "chain E1"},
      {chain21(), div({0, 1}), div({q(1, 2), 1}), q(1, 2), "chain E2"},
  };
  for (const auto& f : fixtures) {
    const auto z = decompose(f.config, f.d);
    const auto vol = volume(f.config, f.d);
    if (z.delta != f.delta) v.fail(std::string(f.name) + ": Delta = " + to_string(z.delta));
    if (vol != f.vol) v.fail(std::string(f.name) + ": Vol = " + to_string(vol));
    v.detail << f.name << " Delta=" << to_string(z.delta) << " Vol=" << to_string(vol) << "; ";
  }
}

// ---- 2 ----
void oracle_agreement(Verdict& v) {
  constexpr std::int64_t kWindow = 200;
  for (auto [a, b] : {std::pair{1, 1}, {1, 2}, {2, 3}, {3, 5}}) {
    const auto fit = limit_fit(colength_sequence(spec({{a, b, 1}}), kWindow));
    const double expected = 1.0 / (a * b);
    const double err = rel(fit.estimate, expected);
    if (err > 0.02) v.fail("nu(" + std::to_string(a) + "," + std::to_string(b) + ") off by " + pct(err));
    v.detail << "nu(" << a << "," << b << ")=" << num(fit.estimate) << " (" << pct(err) << "); ";
  }
  const auto c11 = colength(val_ideal(MonomialValuation(1, 1), 10));
  const auto c12 = colength(val_ideal(MonomialValuation(1, 2), 10));
  if (c11 != 55) v.fail("colength nu(1,1),10 = " + std::to_string(c11));
  if (c12 != 30) v.fail("colength nu(1,2),10 = " + std::to_string(c12));
  v.detail << "spot counts " << c11 << ", " << c12;
}

// ---- 3 ----
void bridge_identity(Verdict& v) {
  const MonomialValuation targets[] = {MonomialValuation(1, 1), MonomialValuation(1, 2)};
  const ToricConfig toric = toric_config(targets);
  const ValidatedConfig config(toric.config);
  const std::size_t s = config.size();
  const std::vector<QDivisor> ds{QDivisor::prime(s, toric.target_index[0]), QDivisor::prime(s, toric.target_index[1])};
  const auto form = mixed_form(config, ds);
  if (form(0, 0) != 1 || form(0, 1) != q(1, 2) || form(1, 1) != q(1, 2))
    v.fail("exact form (" + to_string(form(0, 0)) + ", " + to_string(form(0, 1)) + ", " + to_string(form(1, 1)) + ")");
  const MultiplicityPolynomial poly(form);
  const std::int64_t one_one[] = {1, 1};
  if (poly.evaluate(one_one) != q(5, 4)) v.fail("exact G(1,1) = " + to_string(poly.evaluate(one_one)));
  v.detail << "exact e=(" << to_string(form(0, 0)) << ", " << to_string(form(0, 1)) << ", " << to_string(form(1, 1))
           << "); ";

  const OracleFiltrationSpec specs[] = {spec({{1, 1, 1}}), spec({{1, 2, 1}})};
  const auto grid = default_grid(2);
  const auto est = mixed_poly_oracle(specs, grid, 150);
  struct Expect {
    std::vector<int> exponents;
    double value;
  };
  for (const Expect& e : {Expect{{2, 0}, 0.5}, Expect{{1, 1}, 0.5}, Expect{{0, 2}, 0.25}}) {
    for (const auto& c : est.coefficients) {
      if (c.exponents != e.exponents) continue;
      const double err = rel(c.estimate, e.value);
      if (err > 0.03) v.fail("oracle coefficient off by " + pct(err));
      v.detail << "b" << e.exponents[0] << e.exponents[1] << "=" << num(c.estimate) << " (" << pct(err) << "); ";
    }
  }
  for (std::size_t g = 0; g < grid.size(); ++g) {
    if (grid[g] != std::vector<std::int64_t>{1, 1}) continue;
    const double err = rel(est.value_at(g), 1.25);
    if (err > 0.03) v.fail("oracle G(1,1) off by " + pct(err));
    v.detail << "G(1,1)=" << num(est.value_at(g)) << " (" << pct(err) << ")";
  }
}

// ---- 4 ----
void rees_theorem(Verdict& v) {
  const auto config = chain21();
  const auto d1 = div({1, 0});
  const auto d2 = div({1, 1});
  const ReesReport r = rees_check(config, d1, d2, 50);
  if (!r.volumes_equal) v.fail("volumes differ");
  if (!r.delta_equal) v.fail("Delta_1 != Delta_2");
  if (r.certificates.size() != 50 || !r.certificates_agree()) v.fail("ceiling certificates disagree");

  const MonomialValuation targets[] = {MonomialValuation(1, 1), MonomialValuation(1, 2)};
  const ToricConfig toric = toric_config(targets);
  if (toric.config.gram() != config.config().gram()) v.fail("toric config is not the chain");
  const auto s1 = spec({{1, 1, 1}});
  const auto s2 = spec({{1, 1, 1}, {1, 2, 1}});
  const auto z1 = decompose(config, d1);
  int agreeing = 0;
  for (std::int64_t n = 1; n <= 50; ++n) {
    const auto i1 = filtration_ideal(s1, n);
    const auto i2 = filtration_ideal(s2, n);
    const auto ic = divisor_ideal(toric, ceil_scale(z1, n));
    if (i1 != i2 || i1 != ic) {
      v.fail("oracle ideals differ at n=" + std::to_string(n));
    } else {
      ++agreeing;
    }
  }
  v.detail << "vol1=" << to_string(r.vol1) << " vol2=" << to_string(r.vol2) << ", " << r.certificates.size()
           << " certificates agree, oracle ideals equal for " << agreeing << "/50 n";
}

bool proportional(const QDivisor& x, const QDivisor& y) {
  std::size_t k = 0;
  while (k < x.size() && x[k] == 0) ++k;
  if (k == x.size()) return y.is_zero();
  const Rational lambda = y[k] / x[k];
  return lambda * x == y;
}

// ---- 5 ----
void minkowski_suite(Verdict& v) {
  std::mt19937_64 rng(0x5eed0005);
  std::uniform_int_distribution<int> mode(0, 5);
  const Rational scales[] = {q(1), q(2), q(3), q(1, 2), q(2, 3), q(5, 3)};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(scales) - 1);
  int equalities = 0;
  int branched = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const ValidatedConfig config(trial % 2 ? random_branched_config(rng) : random_connected_config(rng));
    if (config.branches().size() > 1) ++branched;
    const auto d1 = random_effective(rng, config.size());
    QDivisor d2;
    switch (mode(rng)) {
      case 0: d2 = scales[pick(rng)] * d1; break;
      case 1: d2 = scales[pick(rng)] * decompose(config, d1).delta; break;
      default: d2 = random_effective(rng, config.size());
    }
    const MinkowskiReport r = minkowski_report(config, d1, d2);
    if (!r.all_hold()) v.fail("inequality failed at trial " + std::to_string(trial));
    const auto delta1 = decompose(config, d1).delta;
    const auto delta2 = decompose(config, d2).delta;
    const bool prop = proportional(delta1, delta2);
    const bool eq = r.e1 * r.e1 == r.e0 * r.e2;
    if (eq != prop) v.fail("equality/proportionality mismatch at trial " + std::to_string(trial));
    if (eq != r.equality.has_value()) v.fail("classifier disagrees with e1^2 = e0 e2");
    if (r.equality) {
      ++equalities;
      const auto& [a, b] = *r.equality;
      if (gcd(a, b) != 1 || a <= 0 || b <= 0) v.fail("certificate not coprime positive");
      if (Rational(a) * delta1 != Rational(b) * delta2) v.fail("a Delta_1 != b Delta_2");
      const MinkowskiReport scaled = minkowski_report(config, q(2) * d1, q(2) * d2);
      if (!scaled.equality || scaled.equality->a != a || scaled.equality->b != b) v.fail("scale inconsistency");
    }
  }
  v.detail << "500 cases (" << branched << " multi-branch), " << equalities << " equality cases";
}

// ---- 6 ----
void decomposition_equivalence(Verdict& v) {
  std::mt19937_64 rng(0x5eed0006);
  std::uniform_int_distribution<int> scale(2, 4);
  int rigid_equal = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const ValidatedConfig config(trial % 3 == 2 ? random_branched_config(rng) : random_connected_config(rng));
    const auto d = random_effective(rng, config.size(), trial % 10 != 0);
    const auto z = decompose(config, d);
    const auto bf = brute_force_decompose(config, d);
    if (z.delta != bf.delta || z.negative_part != bf.negative_part || z.null_support != bf.null_support)
      v.fail("decompose != brute force at trial " + std::to_string(trial));

    const int n = scale(rng);
    if (decompose(config, Rational(n) * d).delta != Rational(n) * z.delta) v.fail("homogeneity");
    if (volume(config, Rational(n) * d) != Rational(n * n) * volume(config, d)) v.fail("volume homogeneity");

    const auto again = decompose(config, z.delta);
    if (again.delta != z.delta || !again.negative_part.is_zero()) v.fail("idempotence");

    // Supersets: random bump, or a bump inside supp(B) which leaves Delta fixed.
    QDivisor bigger = d + random_effective(rng, config.size(), false);
    if (trial % 2) {
      bigger = d;
      for (std::size_t i = 0; i < d.size(); ++i)
        if (z.negative_part[i] > 0) bigger[i] += z.negative_part[i] / 2;
    }
    const auto zb = decompose(config, bigger);
    if (!z.delta.dominated_by(zb.delta)) v.fail("monotonicity");
    const auto v1 = volume(config, d);
    const auto v2 = volume(config, bigger);
    if (v1 > v2) v.fail("volume decreased");
    if ((v1 == v2) != (z.delta == zb.delta)) v.fail("rigidity at trial " + std::to_string(trial));
    if (v1 == v2) ++rigid_equal;
  }
  v.detail << "1000 cases, " << rigid_equal << " equal-volume pairs";
}

// ---- 7 ----
void tau_gamma(Verdict& v, Verdict& subadditive) {
  constexpr std::int64_t kMaxM = 100;
  const OracleFiltrationSpec corpus[] = {
      spec({{1, 1, 1}}),
      spec({{1, 2, 1}}),
      spec({{2, 3, 1}}),
      spec({{3, 5, 1}}),
      spec({{1, 1, 1}, {1, 2, 1}}),
      spec({{2, 3, 1}, {3, 5, 1}}),
      spec({{1, 2, 2}, {2, 1, 1}}),
  };
  int sequences = 0;
  int violations = 0;
  double worst = 0;  // max |tau_m - m gamma|
  std::string worst_case;
  for (const auto& s : corpus) {
    const OracleFiltrationSpec one[] = {s};
    const auto targets = spec_targets(one);
    const ToricConfig toric = toric_config(targets);
    const ValidatedConfig config(toric.config);
    const auto g = gamma(config, divisor_of_spec(toric, s));
    for (std::size_t k = 0; k < toric.rays.size(); ++k) {
      const auto tau = tau_sequence(s, toric.rays[k], kMaxM);
      ++sequences;
      for (std::int64_t m = 1; m <= kMaxM; ++m)
        for (std::int64_t n = 1; m * n <= kMaxM; ++n)
          if (tau[m * n - 1] > n * tau[m - 1]) subadditive.fail("tau_{mn} > n tau_m");
      const double gk = g.values[k].get_d();
      for (std::int64_t m = 1; m <= kMaxM; ++m) {
        const double gap = std::abs(static_cast<double>(tau[m - 1]) - static_cast<double>(m) * gk);
        if (gap > 1.0 + 1e-12) {
          ++violations;
          if (v.pass) {
            std::ostringstream c;
            c << "spec{";
            for (const auto& t : s.terms) c << "(" << t.valuation.a() << "," << t.valuation.b() << ")x" << t.coefficient;
            c << "} target (" << toric.rays[k].a() << "," << toric.rays[k].b() << ") m=" << m << ": tau=" << tau[m - 1]
              << " gamma=" << to_string(g.values[k]);
            v.fail(c.str());
          }
        }
        if (gap > worst) {
          worst = gap;
          std::ostringstream c;
          c << "(" << toric.rays[k].a() << "," << toric.rays[k].b() << ") m=" << m;
          worst_case = c.str();
        }
      }
    }
  }
  subadditive.detail << sequences << " sequences, all (m,n) with mn <= " << kMaxM;
  v.detail << sequences << " sequences; " << violations << " (m, target) pairs with |tau_m/m - gamma| > 1/m";
  if (!v.pass) v.detail << "; first: " << v.first_failure;
  v.detail << "; max |tau_m - m gamma| = " << num(worst) << " at " << worst_case;
}

// ---- 8 ----
void truncation(Verdict& v) {
  constexpr std::int64_t kWindow = 200;
  const auto s = spec({{1, 2, 1}});
  const double full = limit_fit(colength_sequence(s, kWindow)).estimate;
  v.detail << "untruncated " << num(full) << "; ";
  double last = 0;
  for (std::int64_t a : {1, 2, 4, 8}) {
    const double e = limit_fit(truncate(s, a).colengths(kWindow)).estimate;
    v.detail << "a=" << a << ": " << num(e) << "; ";
    if (a == 1 && rel(e, 1.0) > 0.02) v.fail("a=1 estimate " + num(e));
    last = e;
  }
  if (rel(last, 0.5) > 0.02) v.fail("a=8 estimate " + num(last) + " not within 2% of 1/2");
  if (rel(full, 0.5) > 0.02) v.fail("untruncated estimate " + num(full));
}

// ---- 9 ----
void positivity(Verdict& v) {
  std::mt19937_64 rng(0x5eed0009);
  int entries = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const ValidatedConfig config(random_connected_config(rng));
    std::vector<QDivisor> ds;
    for (int k = 0; k < 3; ++k) ds.push_back(random_effective(rng, config.size()));
    for (const auto& d : ds)
      if (volume(config, d) <= 0) v.fail("nonpositive volume " + to_string(volume(config, d)));
    const auto form = mixed_form(config, ds);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        ++entries;
        if (form(i, j) <= 0) v.fail("nonpositive mixed entry");
      }
  }
  v.detail << "500 configs, 1500 volumes, " << entries << " mixed entries";
}

}  // namespace

int main() {
  struct Row {
    const char* id;
    const char* name;
    std::function<void(Verdict&)> body;
  };
  Verdict tau_subadditive;
  const Row rows[] = {
      {"1", "Zariski fixtures", zariski_fixtures},
      {"2", "oracle agreement 1/(ab), M=200, 2%", oracle_agreement},
      {"3", "bridge identity, M=150, 3%", bridge_identity},
      {"4", "Rees theorem, n=1..50", rees_theorem},
      {"5", "Minkowski suite, 500 random", minkowski_suite},
      {"6", "decompose = brute force, 1000 random + properties", decomposition_equivalence},
      {"7", "tau/gamma consistency", nullptr},
      {"8", "truncation convergence, M=200", truncation},
      {"9", "positivity, 500 random", positivity},
  };

  int failed = 0;
  for (const auto& row : rows) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      if (row.body) {
        row.body(v);
      } else {
        tau_gamma(v, tau_subadditive);
      }
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!row.body) {
      const bool sub_ok = tau_subadditive.pass;
      std::printf("%s [7a] tau subadditivity, mn <= 100: %s\n", sub_ok ? "PASS" : "FAIL",
                  (sub_ok ? tau_subadditive.detail.str() : tau_subadditive.first_failure).c_str());
      std::printf("%s [7b] |tau_m/m - gamma| <= 1/m on toric specs: %s (%.2fs)\n", v.pass ? "PASS" : "FAIL",
                  v.detail.str().c_str(), secs);
      failed += !sub_ok + !v.pass;
      continue;
    }
    std::printf("%s [%s] %s: %s (%.2fs)\n", v.pass ? "PASS" : "FAIL", row.id, row.name,
                (v.pass ? v.detail.str() : v.first_failure + " | " + v.detail.str()).c_str(), secs);
    failed += !v.pass;
  }
  std::printf("%d criterion line(s) failed\n", failed);
  return failed == 0 ? 0 : 1;
}
