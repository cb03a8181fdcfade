#include "hrr2/errors.hpp"
#include "hrr2/linalg.hpp"
#include "hrr2/rational.hpp"
#include "hrr2/unipoly.hpp"

#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace hrr2;
using hrr2::testing::Rng;
using hrr2::testing::cofactor_det;

namespace {

RatMatrix ones(std::size_t r, std::size_t c) { return RatMatrix(r, c, Rational(1)); }

// Characteristic polynomial coefficients c_0..c_n of det(tI - A).
std::vector<Rational> faddeev_leverrier(const RatMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RatMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix next = a * m;
    for (std::size_t j = 0; j < n; ++j) next(j, j) += c[n - k + 1];
    m = next;
    const RatMatrix am = a * m;
    Rational trace = 0;
    for (std::size_t j = 0; j < n; ++j) trace += am(j, j);
    c[n - k] = -trace / Rational(static_cast<long>(k));
  }
  return c;
}

UniPoly from_roots(const std::vector<Rational>& roots) {
  UniPoly p(std::vector<Rational>{1});
  for (const auto& r : roots) p = p * UniPoly({-r, Rational(1)});
  return p;
}

}  // namespace

TEST_CASE("rationals parse and print canonically") {
  CHECK(to_string(parse_rational("3/2")) == "3/2");
  CHECK(to_string(parse_rational("-4/6")) == "-2/3");
  CHECK(to_string(parse_rational("5")) == "5");
  CHECK(to_string(parse_rational("4/2")) == "2");
  CHECK(to_string(parse_rational("-0")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("1.5"), DomainError);
  CHECK_THROWS_AS(parse_rational(""), DomainError);
  CHECK_THROWS_AS(parse_rational("+3"), DomainError);
  CHECK_THROWS_AS(parse_rational("3/"), DomainError);
  CHECK_THROWS_AS(rat(1, 0), DomainError);
  CHECK(rat(2, -4) == Rational(-1, 2));
  CHECK(factorial(5) == 120);
  CHECK(binomial(6, 2) == 15);
  CHECK(falling_factorial(6, 2) == 30);
  CHECK(falling_factorial(6, 0) == 1);
}

TEST_CASE("det_exact examples") {
  CHECK(det_exact(RatMatrix{{2, 3}, {3, 2}}) == -5);
  CHECK(det_exact(identity_matrix(3)) == 1);
  CHECK(det_exact(RatMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(det_exact(RatMatrix(0, 0)) == 1);
  CHECK(det_exact(RatMatrix{{rat(1, 2), rat(1, 3)}, {rat(1, 4), rat(1, 5)}}) == rat(1, 60));
  CHECK_THROWS_AS(det_exact(ones(2, 3)), DimensionError);
}

TEST_CASE("det_exact matches cofactor expansion on random matrices") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 4));
    RatMatrix m = rng.matrix(n, n);
    if (rng.coin() && n > 1) {
      // force a dependent row
      for (std::size_t c = 0; c < n; ++c) m(n - 1, c) = m(0, c) * 2 - m(1 % n, c);
    }
    CHECK(det_exact(m) == cofactor_det(m));
  }
}

TEST_CASE("minor_det examples and errors") {
  const std::vector<std::size_t> r01{0, 1}, c02{0, 2}, c01{0, 1}, r0{0}, c1{1};
  CHECK(minor_det(ones(2, 3), r01, c02) == 0);
  CHECK(minor_det(RatMatrix{{rat(3, 2), 1}, {1, rat(3, 2)}}, r01, c01) == rat(5, 4));
  const RatMatrix m{{1, 7}, {2, 3}};
  CHECK(minor_det(m, r0, c1) == 7);
  CHECK_THROWS_AS(minor_det(m, r01, c1), DimensionError);
  const std::vector<std::size_t> bad{0, 2}, unsorted{1, 0};
  CHECK_THROWS_AS(minor_det(m, bad, c01), IndexError);
  CHECK_THROWS_AS(minor_det(m, unsorted, c01), IndexError);
}

TEST_CASE("rank_exact examples") {
  CHECK(rank_exact(ones(2, 4)) == 1);
  CHECK(rank_exact(RatMatrix{{0, rat(1, 3), 0}, {0, 0, rat(1, 3)}}) == 2);
  CHECK(rank_exact(RatMatrix(3, 2)) == 0);
  CHECK(rank_exact(RatMatrix(0, 0)) == 0);
}

TEST_CASE("rank is transpose invariant and kernel vectors are annihilated") {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rows = static_cast<std::size_t>(rng.integer(1, 5));
    const auto cols = static_cast<std::size_t>(rng.integer(1, 5));
    RatMatrix m = rng.matrix(rows, cols, 2, 2);
    if (rng.coin()) {
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * 3;
    }
    const std::size_t rank = rank_exact(m);
    CHECK(rank == rank_exact(m.transpose()));
    CHECK(rank == pivot_columns(m).size());
    const auto kernel = kernel_basis(m);
    CHECK(kernel.size() == cols - rank);
    for (const auto& v : kernel) {
      for (const auto& entry : m * v) CHECK(sgn(entry) == 0);
    }
    const RatMatrix r = rref(m);
    CHECK(rank_exact(r) == rank);
    CHECK(rref(r) == r);
  }
}

TEST_CASE("kernel_basis normalization") {
  const auto k = kernel_basis(RatMatrix{{5, 5}});
  REQUIRE(k.size() == 1);
  // free variable is the second column, set to 1
  CHECK(k[0] == RatVector{-1, 1});
  CHECK(kernel_basis(identity_matrix(3)).empty());
  const auto z = kernel_basis(RatMatrix(2, 2));
  REQUIRE(z.size() == 2);
  CHECK(z[0] == RatVector{1, 0});
  CHECK(z[1] == RatVector{0, 1});
}

TEST_CASE("positive-axis root counting examples") {
  CHECK(count_roots_positive_axis(UniPoly({2, -3, 1})).count == 2);
  const auto neg = count_roots_positive_axis(UniPoly({1, 2, 1}));
  CHECK(neg.count == 0);
  CHECK_FALSE(neg.root_at_zero);
  const auto cube = count_roots_positive_axis(UniPoly({0, 0, 0, 1}));
  CHECK(cube.count == 0);
  CHECK(cube.root_at_zero);
  CHECK_THROWS_AS(count_roots_positive_axis(UniPoly()), DomainError);
  CHECK(count_roots_positive_axis(UniPoly({5})).count == 0);
}

TEST_CASE("Sturm count matches polynomials with known rational roots") {
  Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Rational> roots;
    const long n = rng.integer(0, 6);
    for (long k = 0; k < n; ++k) {
      if (!roots.empty() && rng.integer(0, 3) == 0) {
        roots.push_back(roots[static_cast<std::size_t>(rng.integer(0, static_cast<long>(roots.size()) - 1))]);
      } else {
        roots.push_back(rng.rational(4, 3));
      }
    }
    UniPoly p = from_roots(roots);
    if (rng.coin()) p = p * UniPoly({1, 1, 1});  // no real roots
    p = rng.positive() * p;
    std::set<Rational> positive;
    bool zero = false;
    for (const auto& r : roots) {
      if (sgn(r) > 0) positive.insert(r);
      if (sgn(r) == 0) zero = true;
    }
    const auto got = count_roots_positive_axis(p);
    CHECK(got.count == positive.size());
    CHECK(got.root_at_zero == zero);
  }
}

TEST_CASE("univariate arithmetic") {
  const UniPoly a({-1, 0, 1});  // t^2 - 1
  const UniPoly b({1, 1});      // t + 1
  const auto [q, r] = divmod(a, b);
  CHECK(q == UniPoly({-1, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(a, b) == b);
  CHECK(square_free_part(b * b * UniPoly({0, 2})) == UniPoly({0, 1, 1}));
  CHECK_THROWS_AS(divmod(a, UniPoly()), DomainError);
  CHECK(a(Rational(3)) == 8);
  CHECK(a.derivative() == UniPoly({0, 2}));
  CHECK(UniPoly({1, 0, 0}).degree() == 0);
  CHECK(UniPoly().degree() == -1);
}

TEST_CASE("is_positive_definite examples") {
  CHECK(is_positive_definite(RatMatrix{{2, 0}, {0, 2}}));
  CHECK_FALSE(is_positive_definite(RatMatrix{{-2, -3}, {-3, -2}}));
  CHECK(is_positive_definite(RatMatrix(0, 0)));
  CHECK_THROWS_AS(is_positive_definite(RatMatrix{{1, 2}, {3, 4}}), DomainError);
  CHECK(is_symmetric(RatMatrix{{1, 2}, {2, 4}}));
}

TEST_CASE("Sylvester agrees with characteristic polynomial sign pattern") {
  Rng rng(14);
  int positive = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 4));
    RatMatrix b = rng.matrix(n, n, 3, 2);
    // B^T B + shift spreads the cases across definite and indefinite
    RatMatrix s = b.transpose() * b;
    const Rational shift = rng.rational(6, 2);
    for (std::size_t j = 0; j < n; ++j) s(j, j) -= shift;
    const auto c = faddeev_leverrier(s);
    bool alternating = true;
    for (std::size_t k = 0; k <= n; ++k) {
      const int want = ((n - k) % 2 == 0) ? 1 : -1;
      if (sgn(c[k]) != want) alternating = false;
    }
    CHECK(is_positive_definite(s) == alternating);
    positive += alternating;
  }
  CHECK(positive > 20);
  CHECK(positive < 280);
}
