#include "hrr2/forms.hpp"

#include "hrr2/errors.hpp"

#include <algorithm>

namespace hrr2 {

namespace {

using Coeffs = std::vector<Rational>;

// Homogeneous polynomials in two variables as coefficient vectors indexed by
// the exponent of the first variable.
Coeffs convolve(const Coeffs& a, const Coeffs& b) {
  Coeffs out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Coeffs power(const Coeffs& a, int e) {
  Coeffs out{Rational(1)};
  for (int k = 0; k < e; ++k) out = convolve(out, a);
  return out;
}

// sum_k a_k u^k v^(d-k) where u, v are linear: u = (u0, u1), v = (v0, v1).
Coeffs compose_linear(const Coeffs& a, const Coeffs& u, const Coeffs& v) {
  const int d = static_cast<int>(a.size()) - 1;
  Coeffs out(a.size());
  std::vector<Coeffs> u_pow{Coeffs{1}};
  std::vector<Coeffs> v_pow{Coeffs{1}};
  for (int k = 1; k <= d; ++k) {
    u_pow.push_back(convolve(u_pow.back(), u));
    v_pow.push_back(convolve(v_pow.back(), v));
  }
  for (int k = 0; k <= d; ++k) {
    if (sgn(a[static_cast<std::size_t>(k)]) == 0) continue;
    const Coeffs term = convolve(u_pow[static_cast<std::size_t>(k)], v_pow[static_cast<std::size_t>(d - k)]);
    for (std::size_t j = 0; j < term.size(); ++j) out[j] += a[static_cast<std::size_t>(k)] * term[j];
  }
  return out;
}

}  // namespace

BivariateForm::BivariateForm(std::vector<Rational> normalized) : coeffs_(std::move(normalized)) {
  if (coeffs_.empty()) throw DimensionError("form needs at least one coefficient");
}

BivariateForm BivariateForm::zero(int degree) {
  if (degree < 0) throw DimensionError("negative form degree");
  return BivariateForm(std::vector<Rational>(static_cast<std::size_t>(degree) + 1));
}

BivariateForm BivariateForm::from_monomial_coeffs(std::span<const Rational> monomial) {
  if (monomial.empty()) throw DimensionError("form needs at least one coefficient");
  const auto d = static_cast<unsigned>(monomial.size() - 1);
  std::vector<Rational> c(monomial.size());
  for (unsigned k = 0; k <= d; ++k) c[k] = monomial[k] / Rational(binomial(d, k));
  return BivariateForm(std::move(c));
}

std::vector<Rational> BivariateForm::monomial_coeffs() const {
  const auto d = static_cast<unsigned>(degree());
  std::vector<Rational> a(coeffs_.size());
  for (unsigned k = 0; k <= d; ++k) a[k] = coeffs_[k] * Rational(binomial(d, k));
  return a;
}

bool BivariateForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Rational BivariateForm::evaluate(const Rational& x, const Rational& y) const {
  const std::vector<Rational> a = monomial_coeffs();
  const auto d = a.size() - 1;
  Rational acc = 0;
  for (std::size_t k = 0; k <= d; ++k) {
    Rational term = a[k];
    for (std::size_t j = 0; j < k; ++j) term *= x;
    for (std::size_t j = k; j < d; ++j) term *= y;
    acc += term;
  }
  return acc;
}

BivariateForm operator+(const BivariateForm& a, const BivariateForm& b) {
  if (a.degree() != b.degree()) throw DimensionError("sum of forms of different degree");
  std::vector<Rational> c = a.normalized();
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += b.normalized()[k];
  return BivariateForm(std::move(c));
}

BivariateForm operator-(const BivariateForm& a, const BivariateForm& b) {
  return a + Rational(-1) * b;
}

BivariateForm operator*(const Rational& s, const BivariateForm& a) {
  std::vector<Rational> c = a.normalized();
  for (auto& x : c) x *= s;
  return BivariateForm(std::move(c));
}

BivariateForm operator*(const BivariateForm& a, const BivariateForm& b) {
  return BivariateForm::from_monomial_coeffs(convolve(a.monomial_coeffs(), b.monomial_coeffs()));
}

OperatorPoly::OperatorPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DimensionError("operator needs at least one coefficient");
}

OperatorPoly OperatorPoly::monomial(int x_exp, int y_exp) {
  if (x_exp < 0 || y_exp < 0) throw DomainError("negative exponent");
  std::vector<Rational> c(static_cast<std::size_t>(x_exp + y_exp) + 1);
  c[static_cast<std::size_t>(x_exp)] = 1;
  return OperatorPoly(std::move(c));
}

bool OperatorPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

OperatorPoly operator+(const OperatorPoly& a, const OperatorPoly& b) {
  if (a.degree() != b.degree()) throw DimensionError("sum of operators of different degree");
  std::vector<Rational> c = a.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += b.coeffs()[k];
  return OperatorPoly(std::move(c));
}

OperatorPoly operator*(const Rational& s, const OperatorPoly& a) {
  std::vector<Rational> c = a.coeffs();
  for (auto& x : c) x *= s;
  return OperatorPoly(std::move(c));
}

OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b) {
  return OperatorPoly(convolve(a.coeffs(), b.coeffs()));
}

OperatorPoly pow(const OperatorPoly& a, int e) {
  if (e < 0) throw DomainError("negative operator power");
  return OperatorPoly(power(a.coeffs(), e));
}

// x^p y^(e-p) o F has normalized coefficients d!/(d-e)! (c_p, ..., c_{p+d-e}).
BivariateForm apply_operator(const OperatorPoly& f, const BivariateForm& form) {
  const int d = form.degree();
  const int e = f.degree();
  if (e > d) return BivariateForm();
  const Rational scale(falling_factorial(static_cast<unsigned>(d), static_cast<unsigned>(e)));
  std::vector<Rational> g(static_cast<std::size_t>(d - e) + 1);
  for (int p = 0; p <= e; ++p) {
    const Rational& fp = f.coeffs()[static_cast<std::size_t>(p)];
    if (sgn(fp) == 0) continue;
    for (int k = 0; k <= d - e; ++k) g[static_cast<std::size_t>(k)] += fp * form.coeff(p + k);
  }
  for (auto& x : g) x *= scale;
  return BivariateForm(std::move(g));
}

Rational pairing(const OperatorPoly& f, const BivariateForm& form) {
  if (f.degree() != form.degree()) throw DimensionError("pairing needs equal degrees");
  return apply_operator(f, form).coeff(0);
}

BivariateForm linear_substitute(const BivariateForm& form, const Rational& p, const Rational& q,
                                const Rational& r, const Rational& s) {
  // X -> pX + rY, Y -> qX + sY
  const Coeffs image = compose_linear(form.monomial_coeffs(), Coeffs{r, p}, Coeffs{s, q});
  return BivariateForm::from_monomial_coeffs(image);
}

OperatorPoly substitute_operator(const OperatorPoly& f, const Rational& p, const Rational& q,
                                 const Rational& r, const Rational& s) {
  // x -> px + qy, y -> rx + sy
  return OperatorPoly(compose_linear(f.coeffs(), Coeffs{q, p}, Coeffs{s, r}));
}

BivariateForm shift_S(const BivariateForm& form, const Rational& t) {
  return linear_substitute(form, 1, 0, t, 1);
}

BivariateForm shift_R(const BivariateForm& form, const Rational& t) {
  return linear_substitute(form, 1, t, t, 1);
}

bool adjoint_pairing_check(const OperatorPoly& f, const BivariateForm& form, const Rational& p,
                           const Rational& q, const Rational& r, const Rational& s) {
  if (f.degree() != form.degree()) throw DimensionError("adjoint check needs deg f == deg F");
  if (sgn(p * s - q * r) == 0) throw DomainError("singular substitution");
  const Rational lhs = pairing(substitute_operator(f, p, q, r, s), form);
  // phi*(X) = pX + rY, phi*(Y) = qX + sY
  const Rational rhs = pairing(f, linear_substitute(form, p, q, r, s));
  return lhs == rhs;
}

}  // namespace hrr2
