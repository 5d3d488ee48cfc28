#include "mixmult/rational.hpp"

#include <cctype>
#include <utility>

#include "mixmult/error.hpp"

namespace mixmult {

std::string to_string(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  return canonical.get_str();
}

namespace {

bool is_integer_text(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  if (text.empty()) return false;
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorCode::SchemaError, "malformed rational '" + std::string(text) + "'");
  }
  auto strip_plus = [](std::string_view s) { return std::string(s.front() == '+' ? s.substr(1) : s); };
  Integer p(strip_plus(num), 10);
  Integer q(strip_plus(den), 10);
  if (q == 0) throw Error(ErrorCode::SchemaError, "zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Integer ceil(const Rational& value) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Integer floor(const Rational& value) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

std::vector<Rational> solve_exact(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "solve_exact expects a square system");
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::InternalInvariantViolation, "singular system");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(col, c), a(pivot, c));
      std::swap(b[col], b[pivot]);
    }
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a(row, col) == 0) continue;
      const Rational factor = a(row, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(row, c) -= factor * a(col, c);
      b[row] -= factor * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= a(i, c) * x[c];
    x[i] = acc / a(i, i);
  }
  return x;
}

std::vector<Integer> leading_principal_minors(const Matrix<Integer>& a) {
  const std::size_t n = a.rows();
  std::vector<Integer> minors(n, 0);
  if (n == 0) return minors;
  Matrix<Integer> m = a;
  Integer previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    // After step k-1 the pivot m(k,k) equals the k+1 order leading minor.
    minors[k] = m(k, k);
    if (m(k, k) == 0) return minors;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = m(k, k);
  }
  return minors;
}

}  // namespace mixmult
