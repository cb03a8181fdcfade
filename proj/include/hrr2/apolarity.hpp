#pragma once

// The graded algebra A_F = Q[x, y] / Ann(F) through exact linear algebra on
// the normalized Toeplitz (catalecticant) matrices of F.
//
// An element of R_i = Q[x, y]_i is zero in A_F exactly when it annihilates F,
// so elements of A_i are represented faithfully by their images alpha o F.
// Monomials x^p y^(i-p) are identified by their x-exponent p.

#include "hrr2/forms.hpp"
#include "hrr2/matrix.hpp"

#include <vector>

namespace hrr2 {

struct ToeplitzOfForm {
  int i = 0;
  int d = 0;
  RatMatrix matrix;  // (i+1) x (d-i+1), entry (r, q) = c_{i-r+q}
};

/// phi^i_d(F). Throws IndexError unless 0 <= i <= d.
ToeplitzOfForm toeplitz(const BivariateForm& form, int i);

struct HilbertData {
  std::vector<int> h;  // h_0 .. h_d
  int sperner = 0;
};

/// Throws DomainError for the zero form. Verifies the palindromic
/// (1, 2, ..., s, ..., s, ..., 2, 1) shape and throws std::logic_error if the
/// ranks disagree with it.
HilbertData hilbert_function(const BivariateForm& form);

int sperner_number(const BivariateForm& form);

/// dim A_i; zero for i > d.
int algebra_dimension(const BivariateForm& form, int i);

enum class MonomialOrder {
  XFirst,  // x^i, x^(i-1) y, ..., y^i
  YFirst,  // y^i, x y^(i-1), ..., x^i
};

/// First min(i+1, s) monomials (in `order`) whose classes in A_i are
/// independent, as x-exponents. Empty for i > d.
std::vector<int> monomial_basis(const BivariateForm& form, int i,
                                MonomialOrder order = MonomialOrder::XFirst);

/// Coordinates of alpha o F (normalized coefficients) for alpha in R_i.
std::vector<Rational> image_in_dual(const OperatorPoly& alpha, const BivariateForm& form);

struct Annihilator {
  int degree = 0;
  OperatorPoly generator;  // a nonzero element of Ann(F) in that degree
};

/// Lowest degree in which Ann(F) is nonzero, with a generator taken from the
/// kernel of the degree-e catalecticant. Throws DomainError for F == 0.
Annihilator min_annihilator_degree(const BivariateForm& form);

struct GramMatrix {
  int degree = 0;
  std::vector<int> basis;  // x-exponents of the monomial basis of A_i
  RatMatrix matrix;
};

/// (-1)^i (l^(d-2i) m_p m_q) o F on monomial_basis(F, i).
/// Throws IndexError unless 0 <= i <= floor(d/2).
GramMatrix lefschetz_gram(const BivariateForm& form, const LinearForm& ell, int i,
                          MonomialOrder order = MonomialOrder::XFirst);

/// (-1)^i (l_1 ... l_(d-2i) m_p m_q) o F. `tuple` holds l_0 .. l_d; throws
/// DimensionError for a wrong length.
GramMatrix mixed_lefschetz_gram(const BivariateForm& form, const std::vector<LinearForm>& tuple, int i,
                                MonomialOrder order = MonomialOrder::XFirst);

/// Kernel of x L: A_i -> A_(d-i+1) in coordinates of monomial_basis(F, i),
/// with L = l^(d-2i+1). Empty for i > floor(d/2).
std::vector<RatVector> primitive_basis(const BivariateForm& form, const LinearForm& ell, int i,
                                       MonomialOrder order = MonomialOrder::XFirst);

/// Same with L = l_0 l_1 ... l_(d-2i).
std::vector<RatVector> mixed_primitive_basis(const BivariateForm& form, const std::vector<LinearForm>& tuple,
                                             int i, MonomialOrder order = MonomialOrder::XFirst);

struct HrrDegree {
  int j = 0;
  GramMatrix gram;
  std::vector<RatVector> primitive;
  RatMatrix restricted;      // P^T G P
  bool nondegenerate = true;  // det G != 0; only part of the mixed criterion
  bool positive = true;       // restricted form positive definite
  bool holds = true;
};

struct HrrReport {
  bool holds = true;
  std::vector<HrrDegree> degrees;
};

/// Ordinary HRR up to degree i for (A_F, l). Throws DomainError for l == 0
/// or F == 0.
HrrReport ordinary_hrr(const BivariateForm& form, const LinearForm& ell, int i,
                       MonomialOrder order = MonomialOrder::XFirst);
bool check_ordinary_hrr(const BivariateForm& form, const LinearForm& ell, int i,
                        MonomialOrder order = MonomialOrder::XFirst);

/// Mixed HRR up to degree i: each mixed Gram matrix is non-degenerate on A_j
/// and positive definite on the mixed primitive subspace.
HrrReport mixed_hrr(const BivariateForm& form, const std::vector<LinearForm>& tuple, int i,
                    MonomialOrder order = MonomialOrder::XFirst);
bool check_mixed_hrr(const BivariateForm& form, const std::vector<LinearForm>& tuple, int i,
                     MonomialOrder order = MonomialOrder::XFirst);

}  // namespace hrr2
