#pragma once

// Random inputs and slow reference implementations shared by the tests.

#include "hrr2/forms.hpp"
#include "hrr2/matrix.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace hrr2::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
  }

  bool coin() { return (engine_() & 1u) != 0; }

  // p/q with |p| <= bound * q, q in [1, max_den]
  Rational rational(long bound = 5, long max_den = 4) {
    const long q = integer(1, max_den);
    return rat(integer(-bound * q, bound * q), q);
  }

  Rational positive(long bound = 5, long max_den = 4) {
    const long q = integer(1, max_den);
    return rat(integer(1, bound * q), q);
  }

  BivariateForm form(int degree, long bound = 3, long max_den = 3) {
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    do {
      for (auto& v : c) v = rational(bound, max_den);
    } while (std::all_of(c.begin(), c.end(), [](const Rational& v) { return sgn(v) == 0; }));
    return BivariateForm(c);
  }

  OperatorPoly op(int degree) {
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c) v = rational();
    return OperatorPoly(c);
  }

  RatMatrix matrix(std::size_t rows, std::size_t cols, long bound = 5, long max_den = 3) {
    RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational(bound, max_den);
    return m;
  }

 private:
  std::mt19937_64 engine_;
};

// Determinant by first-row cofactor expansion.
inline Rational cofactor_det(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    RatMatrix sub(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == c) continue;
        sub(r - 1, cc++) = m(r, k);
      }
    }
    const Rational term = m(0, c) * cofactor_det(sub);
    total += (c % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

// x^a y^b o F by differentiating the monomial expansion term by term.
inline std::vector<Rational> differentiate_monomials(const std::vector<Rational>& monomial, int a, int b) {
  const int d = static_cast<int>(monomial.size()) - 1;
  if (a + b > d) return {Rational(0)};
  std::vector<Rational> out(static_cast<std::size_t>(d - a - b) + 1);
  for (int k = 0; k <= d; ++k) {
    if (k < a || d - k < b) continue;
    Rational coef = monomial[static_cast<std::size_t>(k)];
    for (int j = 0; j < a; ++j) coef *= k - j;
    for (int j = 0; j < b; ++j) coef *= d - k - j;
    out[static_cast<std::size_t>(k - a)] += coef;
  }
  return out;
}

inline std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Every minor positive / non-negative, by cofactor expansion.
inline bool oracle_all_minors(const RatMatrix& m, bool strict) {
  const std::size_t lim = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= lim; ++k) {
    for (const auto& rows : index_subsets(m.rows(), k)) {
      for (const auto& cols : index_subsets(m.cols(), k)) {
        const int s = sgn(cofactor_det(m.submatrix(rows, cols)));
        if (strict ? s <= 0 : s < 0) return false;
      }
    }
  }
  return true;
}

}  // namespace hrr2::testing
