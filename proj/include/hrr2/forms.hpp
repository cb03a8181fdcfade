#pragma once

// Bivariate homogeneous forms F(X, Y) in the binomially normalized basis
//   F = sum_k binom(d, k) c_k X^k Y^(d-k),
// and differential operators f(x, y) acting by x = d/dX, y = d/dY.

#include "hrr2/rational.hpp"

#include <span>
#include <vector>

namespace hrr2 {

class BivariateForm {
 public:
  /// The zero constant.
  BivariateForm() : coeffs_(1) {}
  /// Normalized coefficients (c_0, ..., c_d); throws DimensionError if empty.
  explicit BivariateForm(std::vector<Rational> normalized);

  static BivariateForm zero(int degree);
  /// a_k is the coefficient of X^k Y^(d-k).
  static BivariateForm from_monomial_coeffs(std::span<const Rational> monomial);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& normalized() const { return coeffs_; }
  const Rational& coeff(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  std::vector<Rational> monomial_coeffs() const;
  bool is_zero() const;

  Rational evaluate(const Rational& x, const Rational& y) const;

  friend bool operator==(const BivariateForm&, const BivariateForm&) = default;

 private:
  std::vector<Rational> coeffs_;
};

BivariateForm operator+(const BivariateForm& a, const BivariateForm& b);
BivariateForm operator-(const BivariateForm& a, const BivariateForm& b);
BivariateForm operator*(const Rational& s, const BivariateForm& a);
BivariateForm operator*(const BivariateForm& a, const BivariateForm& b);

// Homogeneous element of R = Q[x, y]; coeffs()[p] multiplies x^p y^(e-p).
class OperatorPoly {
 public:
  OperatorPoly() : coeffs_{Rational(1)} {}
  explicit OperatorPoly(std::vector<Rational> coeffs);

  static OperatorPoly monomial(int x_exp, int y_exp);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  friend bool operator==(const OperatorPoly&, const OperatorPoly&) = default;

 private:
  std::vector<Rational> coeffs_;
};

OperatorPoly operator+(const OperatorPoly& a, const OperatorPoly& b);
OperatorPoly operator*(const Rational& s, const OperatorPoly& a);
OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b);
OperatorPoly pow(const OperatorPoly& a, int e);

// a x + b y
struct LinearForm {
  Rational a;
  Rational b;

  bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
  OperatorPoly as_operator() const { return OperatorPoly({b, a}); }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// f o F. A degree-d operator on a degree-d form yields a degree-0 form; an
/// operator of larger degree annihilates F and yields the zero constant.
BivariateForm apply_operator(const OperatorPoly& f, const BivariateForm& form);

/// Scalar f o F for deg f == deg F; throws DimensionError otherwise.
Rational pairing(const OperatorPoly& f, const BivariateForm& form);

/// G(X, Y) = F(pX + rY, qX + sY).
BivariateForm linear_substitute(const BivariateForm& form, const Rational& p, const Rational& q,
                                const Rational& r, const Rational& s);

/// phi(f) with phi(x) = px + qy, phi(y) = rx + sy.
OperatorPoly substitute_operator(const OperatorPoly& f, const Rational& p, const Rational& q,
                                 const Rational& r, const Rational& s);

/// S_t(F) = F(X + tY, Y)
BivariateForm shift_S(const BivariateForm& form, const Rational& t);

/// R_t(F) = F(X + tY, tX + Y)
BivariateForm shift_R(const BivariateForm& form, const Rational& t);

/// phi(f) o F == f o phi*(F) as scalars. Throws DimensionError if
/// deg f != deg F and DomainError if ps - qr == 0.
bool adjoint_pairing_check(const OperatorPoly& f, const BivariateForm& form, const Rational& p,
                           const Rational& q, const Rational& r, const Rational& s);

}  // namespace hrr2
