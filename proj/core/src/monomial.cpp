#include "mixmult/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "mixmult/error.hpp"

namespace mixmult {

MonomialValuation::MonomialValuation(std::int64_t a, std::int64_t b) : a_(a), b_(b) {
  if (a < 1 || b < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "monomial valuation needs a, b >= 1, got (" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
}

std::int64_t MonomialValuation::content() const noexcept { return std::gcd(a_, b_); }

std::int64_t MonomialValuation::operator()(const Exponent& e) const {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a_, e.i, &x) || __builtin_mul_overflow(b_, e.j, &y) ||
      __builtin_add_overflow(x, y, &out)) {
    throw Error(ErrorCode::Overflow, "valuation of monomial overflows int64");
  }
  return out;
}

MonomialIdeal::MonomialIdeal(std::vector<Exponent> generators) {
  for (const auto& g : generators) {
    if (g.i < 0 || g.j < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  }
  std::sort(generators.begin(), generators.end());
  for (const auto& g : generators) {
    // Sorted by (i, j): g is minimal iff its j is below every earlier j.
    if (gens_.empty() || g.j < gens_.back().j) gens_.push_back(g);
  }
}

bool MonomialIdeal::contains(const Exponent& e) const {
  // Generators with g.i <= e.i form a prefix; the last of them has the smallest j.
  auto it = std::upper_bound(gens_.begin(), gens_.end(), e.i,
                             [](std::int64_t i, const Exponent& g) { return i < g.i; });
  if (it == gens_.begin()) return false;
  return std::prev(it)->j <= e.j;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [this](const Exponent& g) { return contains(g); });
}

bool MonomialIdeal::is_primary() const {
  return !gens_.empty() && gens_.front().i == 0 && gens_.back().j == 0;
}

MonomialIdeal val_ideal(const MonomialValuation& nu, std::int64_t n) {
  if (n <= 0) return MonomialIdeal::unit();
  std::vector<Exponent> gens;
  const std::int64_t j_max = (n + nu.b() - 1) / nu.b();
  gens.reserve(static_cast<std::size_t>(j_max) + 1);
  for (std::int64_t j = 0; j <= j_max; ++j) {
    const std::int64_t rest = n - nu.b() * j;
    const std::int64_t i = rest <= 0 ? 0 : (rest + nu.a() - 1) / nu.a();
    gens.push_back({i, j});
  }
  return MonomialIdeal(std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  std::vector<Exponent> gens;
  gens.reserve(lhs.generators().size() * rhs.generators().size());
  for (const auto& g : lhs.generators())
    for (const auto& h : rhs.generators()) gens.push_back({std::max(g.i, h.i), std::max(g.j, h.j)});
  return MonomialIdeal(std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  std::vector<Exponent> gens;
  gens.reserve(lhs.generators().size() * rhs.generators().size());
  for (const auto& g : lhs.generators())
    for (const auto& h : rhs.generators()) gens.push_back({g.i + h.i, g.j + h.j});
  return MonomialIdeal(std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  std::vector<Exponent> gens = lhs.generators();
  gens.insert(gens.end(), rhs.generators().begin(), rhs.generators().end());
  return MonomialIdeal(std::move(gens));
}

std::int64_t colength(const MonomialIdeal& ideal) {
  if (!ideal.is_primary()) throw Error(ErrorCode::InfiniteColength, "ideal is not (x,y)-primary");
  const auto& gens = ideal.generators();
  // Row j has width min{g.i : g.j <= j}. Rows are taken in blocks of equal
  // width between consecutive staircase steps; rows j >= gens.front().j are empty.
  std::int64_t total = 0;
  for (std::size_t k = gens.size() - 1; k > 0; --k) {
    const std::int64_t rows = gens[k - 1].j - gens[k].j;
    std::int64_t block = 0;
    if (__builtin_mul_overflow(rows, gens[k].i, &block) || __builtin_add_overflow(total, block, &total)) {
      throw Error(ErrorCode::Overflow, "colength exceeds int64");
    }
  }
  return total;
}

}  // namespace mixmult
