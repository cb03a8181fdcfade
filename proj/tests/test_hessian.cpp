#include "hrr2/apolarity.hpp"
#include "hrr2/errors.hpp"
#include "hrr2/hessian.hpp"
#include "hrr2/linalg.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace hrr2;
using hrr2::testing::Rng;

namespace {

BivariateForm monomials(std::vector<Rational> a) { return BivariateForm::from_monomial_coeffs(a); }
BivariateForm sample_quadratic() { return monomials({1, 3, 1}); }
BivariateForm constant(long v) { return BivariateForm({Rational(v)}); }

// c * prod (X - r_j Y) * (X^2 + XY + Y^2)^k, with a known sign pattern on the quadrant.
struct KnownSign {
  BivariateForm form;
  bool open = false;
  bool closed = false;
};

KnownSign known_sign_form(Rng& rng) {
  const Rational c = rng.coin() ? rng.positive() : Rational(-rng.positive());
  BivariateForm f({c});
  bool any_positive_root = false, any_zero_root = false;
  const long roots = rng.integer(0, 4);
  for (long k = 0; k < roots; ++k) {
    const Rational r = rng.integer(0, 4) == 0 ? Rational(0) : rng.rational(3, 3);
    any_positive_root = any_positive_root || sgn(r) > 0;
    any_zero_root = any_zero_root || sgn(r) == 0;
    f = f * monomials({-r, 1});
  }
  const long k = rng.integer(0, 2);
  for (long j = 0; j < k; ++j) f = f * monomials({1, 1, 1});
  KnownSign out;
  out.form = f;
  out.open = sgn(c) > 0 && !any_positive_root;
  out.closed = out.open && !any_zero_root;
  return out;
}

}  // namespace

TEST_CASE("hessian_matrix examples") {
  const FormMatrix h = hessian_matrix(sample_quadratic(), 1);
  CHECK(h(0, 0) == constant(2));
  CHECK(h(0, 1) == constant(3));
  CHECK(h(1, 1) == constant(2));
  const FormMatrix g = hessian_matrix(monomials({0, 0, 1, 0}), 1);
  CHECK(g(0, 0) == monomials({0, 0}));
  CHECK(g(0, 1) == monomials({0, 2}));
  CHECK(g(1, 0) == monomials({0, 2}));
  CHECK(g(1, 1) == monomials({2, 0}));
  const FormMatrix z = hessian_matrix(sample_quadratic(), 0);
  CHECK(z.rows() == 1);
  CHECK(z(0, 0) == sample_quadratic());
  CHECK_THROWS_AS(hessian_matrix(sample_quadratic(), 2), IndexError);
}

TEST_CASE("hessian_polynomial examples") {
  CHECK(hessian_polynomial(sample_quadratic(), 1).poly == constant(5));
  CHECK(hessian_polynomial(monomials({0, 0, 1, 0}), 1).poly == monomials({0, 0, 4}));
  CHECK(hessian_polynomial(monomials({1, 0, 1}), 1).poly == constant(-4));
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const BivariateForm f = rng.form(static_cast<int>(rng.integer(0, 8)));
    CHECK(hessian_polynomial(f, 0).poly == f);
  }
}

TEST_CASE("form_determinant matches evaluation of the matrix") {
  Rng rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = static_cast<int>(rng.integer(2, 8));
    const BivariateForm f = rng.form(d);
    const int i = static_cast<int>(rng.integer(0, d / 2));
    const FormMatrix h = hessian_matrix(f, i);
    const BivariateForm det = form_determinant(h);
    CHECK(det.degree() == (i + 1) * (d - 2 * i));
    const Rational x = rng.rational(), y = rng.rational();
    RatMatrix at(h.rows(), h.cols());
    for (std::size_t r = 0; r < h.rows(); ++r)
      for (std::size_t c = 0; c < h.cols(); ++c) at(r, c) = h(r, c).evaluate(x, y);
    CHECK(det.evaluate(x, y) == hrr2::testing::cofactor_det(at));
  }
}

TEST_CASE("Hessians vanish at and beyond the Sperner number") {
  Rng rng(43);
  for (int trial = 0; trial < 80; ++trial) {
    const int d = static_cast<int>(rng.integer(2, 8));
    BivariateForm f = BivariateForm::zero(d);
    const long terms = rng.integer(1, d / 2);
    for (long k = 0; k < terms; ++k) {
      const Rational a = rng.rational(2, 2), b = rng.rational(2, 2);
      std::vector<Rational> c;
      for (int j = 0; j <= d; ++j) {
        Rational v = 1;
        for (int m = 0; m < j; ++m) v *= a;
        for (int m = j; m < d; ++m) v *= b;
        c.push_back(v);
      }
      f = f + BivariateForm(c);
    }
    if (f.is_zero()) continue;
    const int s = sperner_number(f);
    for (int i = s; i <= d / 2; ++i) CHECK(hessian_polynomial(f, i).poly.is_zero());
    for (int i = 0; i < std::min(s, d / 2 + 1); ++i) CHECK_FALSE(hessian_polynomial(f, i).poly.is_zero());
  }
}

TEST_CASE("positive_on_quadrant examples") {
  const BivariateForm four_x2 = monomials({0, 0, 4});
  CHECK(positive_on_quadrant(four_x2, false));
  CHECK_FALSE(positive_on_quadrant(four_x2, true));
  const BivariateForm cube = monomials({1, 3, 3, 1});
  CHECK(positive_on_quadrant(cube, false));
  CHECK(positive_on_quadrant(cube, true));
  CHECK_FALSE(positive_on_quadrant(constant(-4), false));
  CHECK_FALSE(positive_on_quadrant(constant(-4), true));
  CHECK(positive_on_quadrant(constant(5), true));
  CHECK_FALSE(positive_on_quadrant(BivariateForm::zero(3), false));
  // (X - Y)^2 touches zero on the diagonal
  CHECK_FALSE(positive_on_quadrant(monomials({1, -2, 1}), false));
}

TEST_CASE("positive_on_quadrant matches forms with known roots") {
  Rng rng(44);
  int open = 0, closed = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const KnownSign k = known_sign_form(rng);
    CHECK(positive_on_quadrant(k.form, false) == k.open);
    CHECK(positive_on_quadrant(k.form, true) == k.closed);
    open += k.open;
    closed += k.closed;
  }
  CHECK(open > 40);
  CHECK(closed > 20);
}

TEST_CASE("decide_ordinary_hrr_cone examples") {
  CHECK(decide_ordinary_hrr_cone(sample_quadratic(), 1, true));
  const BivariateForm x2y = monomials({0, 0, 1, 0});
  CHECK(decide_ordinary_hrr_cone(x2y, 1, false));
  CHECK_FALSE(decide_ordinary_hrr_cone(x2y, 1, true));
  CHECK_FALSE(decide_ordinary_hrr_cone(monomials({1, 0, 1}), 1, true));
  CHECK_FALSE(decide_ordinary_hrr_cone(monomials({1, 0, 1}), 1, false));
  CHECK_THROWS_AS(decide_ordinary_hrr_cone(BivariateForm::zero(2), 1, true), DomainError);
}

TEST_CASE("subset_to_partition examples") {
  auto p = subset_to_partition({1, 2, 3}, 3, 5);
  CHECK(p.lambda == std::vector<int>{0, 0, 0});
  CHECK(p.size == 0);
  p = subset_to_partition({2, 4}, 2, 4);
  CHECK(p.lambda == std::vector<int>{2, 1});
  CHECK(p.lambda_conj == std::vector<int>{2, 1});
  p = subset_to_partition({4, 5, 6}, 3, 6);
  CHECK(p.lambda == std::vector<int>{3, 3, 3});
  CHECK(p.size == 9);
  CHECK_THROWS_AS(subset_to_partition({2, 2}, 2, 4), DomainError);
  CHECK_THROWS_AS(subset_to_partition({1, 5}, 2, 4), DomainError);
  CHECK_THROWS_AS(subset_to_partition({1}, 2, 4), DomainError);
  CHECK_THROWS_AS(subset_to_partition({0, 1}, 2, 4), DomainError);
}

TEST_CASE("partitions of all subsets fit the rectangle and conjugate sizes agree") {
  for (int n = 1; n <= 8; ++n) {
    for (int m = 1; m <= n; ++m) {
      const auto subsets = colex_subsets(n, m);
      CHECK(subsets.size() == binomial(static_cast<unsigned>(n), static_cast<unsigned>(m)).get_ui());
      for (const auto& j : subsets) {
        const PartitionData p = subset_to_partition(j, m, n);
        int conj_size = 0;
        for (int v : p.lambda_conj) conj_size += v;
        CHECK(conj_size == p.size);
        CHECK(conjugate(p.lambda_conj, m) == p.lambda);
        for (int v : p.lambda) {
          CHECK(v >= 0);
          CHECK(v <= n - m);
        }
      }
    }
  }
}

TEST_CASE("colex order") {
  const auto s = colex_subsets(4, 2);
  const std::vector<std::vector<int>> want{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}};
  CHECK(s == want);
  CHECK(colex_subsets(3, 0).size() == 1);
}

TEST_CASE("ssyt_count examples") {
  CHECK(ssyt_count({}, 3) == 1);
  CHECK(ssyt_count({2, 1}, 2) == 2);
  for (int k = 1; k <= 6; ++k) CHECK(ssyt_count({1}, k) == k);
  CHECK(ssyt_count_bruteforce({}, 3) == 1);
  CHECK(ssyt_count_bruteforce({2, 1}, 2) == 2);
  for (int k = 1; k <= 6; ++k) CHECK(ssyt_count_bruteforce({1}, k) == static_cast<std::uint64_t>(k));
  // three rows cannot be column-strict with two symbols
  CHECK(ssyt_count({1, 1, 1}, 2) == 0);
  CHECK(ssyt_count_bruteforce({1, 1, 1}, 2) == 0);
  CHECK_THROWS_AS(ssyt_count_bruteforce({5, 5, 5, 2}, 4), ResourceError);
}

TEST_CASE("ssyt product formula matches enumeration inside a 4x4 box") {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= b; ++c)
        for (int e = 0; e <= c; ++e)
          for (int bound = 0; bound <= 5; ++bound) {
            std::vector<int> shape;
            for (int v : {a, b, c, e})
              if (v > 0) shape.push_back(v);
            CHECK(ssyt_count(shape, bound) == Integer(static_cast<unsigned long>(ssyt_count_bruteforce(shape, bound))));
          }
}

TEST_CASE("plucker expansion examples") {
  const PluckerExpansion e = plucker_terms(sample_quadratic(), 1);
  CHECK(e.factor == 4);
  REQUIRE(e.terms.size() == 1);
  CHECK(e.terms[0].partition.subset == std::vector<int>{1, 2});
  CHECK(e.terms[0].n_prime == 1);
  CHECK(e.terms[0].minor == rat(5, 4));
  CHECK(e.poly == constant(5));

  const BivariateForm sq = monomials({1, 2, 1});
  CHECK(plucker_expansion(sq, 0) == sq);
  CHECK(plucker_expansion(monomials({0, 0, 1, 0}), 1) == monomials({0, 0, 4}));
  CHECK_THROWS_AS(plucker_terms(sample_quadratic(), 2), IndexError);
}

TEST_CASE("plucker expansion equals the Hessian polynomial on random forms") {
  Rng rng(45);
  for (int trial = 0; trial < 120; ++trial) {
    const int d = static_cast<int>(rng.integer(0, 8));
    const BivariateForm f = rng.form(d, 2, 2);
    for (int i = 0; i <= d / 2; ++i) {
      const PluckerExpansion e = plucker_terms(f, i);
      CHECK(e.poly == hessian_polynomial(f, i).poly);
      const int top = (i + 1) * (d - 2 * i);
      for (const auto& t : e.terms) {
        CHECK(t.x_exponent >= 0);
        CHECK(t.x_exponent <= top);
        CHECK(t.x_exponent + t.y_exponent == top);
      }
      // only the last subset reaches the top X power
      if (!e.terms.empty()) {
        const auto& last = e.terms.back();
        CHECK(last.x_exponent == top);
        CHECK(e.poly.monomial_coeffs().back() == Rational(e.factor * last.n_prime) * last.minor);
      }
    }
  }
}

TEST_CASE("path matrix identity") {
  CHECK(path_matrix_identity_check(sample_quadratic(), 1, 4));
  Rng rng(46);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = static_cast<int>(rng.integer(0, 8));
    const BivariateForm f = rng.form(d);
    for (int i = 0; i <= d / 2; ++i) CHECK(path_matrix_identity_check(f, i, d + i + 1 + static_cast<int>(rng.integer(0, 2))));
  }
  std::vector<Rational> c(7, Rational(1));
  CHECK(path_matrix_identity_check(BivariateForm(c), 2, 9));
  CHECK_THROWS_AS(path_matrix_identity_check(sample_quadratic(), 1, 3), ResourceError);
}

TEST_CASE("Hessian entries evaluated at a point are Lefschetz pairings") {
  // (a x + b y)^e o G = e! G(a, b) for G of degree e
  Rng rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = static_cast<int>(rng.integer(2, 8));
    const BivariateForm f = rng.form(d);
    const int i = static_cast<int>(rng.integer(0, d / 2));
    const FormMatrix h = hessian_matrix(f, i);
    const Rational a = rng.rational(), b = rng.rational();
    const OperatorPoly l = pow(LinearForm{a, b}.as_operator(), d - 2 * i);
    const Rational e_fact(factorial(static_cast<unsigned>(d - 2 * i)));
    for (int p = 0; p <= i; ++p)
      for (int q = 0; q <= i; ++q) {
        const OperatorPoly m = OperatorPoly::monomial(p + q, 2 * i - p - q);
        const auto& entry = h(static_cast<std::size_t>(p), static_cast<std::size_t>(q));
        CHECK(pairing(l * m, f) == e_fact * entry.evaluate(a, b));
      }
  }
}
