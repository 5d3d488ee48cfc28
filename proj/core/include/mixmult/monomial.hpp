#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace mixmult {

/// Exponent (i, j) of the monomial x^i y^j.
struct Exponent {
  std::int64_t i = 0;
  std::int64_t j = 0;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Monomial valuation nu(x^i y^j) = a i + b j on k[x, y] localized at (x, y).
/// Divisorial exactly when gcd(a, b) = 1; other pairs are g * nu_{a/g, b/g}.
class MonomialValuation {
 public:
  /// Throws Error(InvalidArgument) unless a, b >= 1.
  MonomialValuation(std::int64_t a, std::int64_t b);

  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }
  std::int64_t content() const noexcept;  // gcd(a, b)
  bool is_divisorial() const noexcept { return content() == 1; }
  std::int64_t operator()(const Exponent& e) const;

  friend auto operator<=>(const MonomialValuation&, const MonomialValuation&) = default;

 private:
  std::int64_t a_;
  std::int64_t b_;
};

/// Monomial ideal in two variables kept as its minimal generators (the
/// staircase corners), sorted by increasing i and hence strictly decreasing j.
/// The empty generator set is the zero ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Any generating set; non-minimal or duplicate generators are dropped.
  explicit MonomialIdeal(std::vector<Exponent> generators);

  static MonomialIdeal unit() { return MonomialIdeal({Exponent{0, 0}}); }

  const std::vector<Exponent>& generators() const noexcept { return gens_; }
  bool contains(const Exponent& e) const;
  /// Ideal containment: every generator of `other` lies in *this.
  bool contains(const MonomialIdeal& other) const;
  /// Finite colength: pure powers of both x and y are present.
  bool is_primary() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::vector<Exponent> gens_;
};

/// {f : nu(f) >= n}: generated by all x^i y^j with a i + b j >= n.
MonomialIdeal val_ideal(const MonomialValuation& nu, std::int64_t n);

MonomialIdeal intersect(const MonomialIdeal& lhs, const MonomialIdeal& rhs);
MonomialIdeal product(const MonomialIdeal& lhs, const MonomialIdeal& rhs);
MonomialIdeal sum(const MonomialIdeal& lhs, const MonomialIdeal& rhs);

/// Number of standard monomials (lattice points under the staircase).
/// Throws InfiniteColength for non-primary ideals and Overflow past int64.
std::int64_t colength(const MonomialIdeal& ideal);

}  // namespace mixmult
