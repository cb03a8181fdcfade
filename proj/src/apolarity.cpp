#include "hrr2/apolarity.hpp"

#include "hrr2/errors.hpp"
#include "hrr2/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hrr2 {

namespace {

void require_nonzero(const BivariateForm& form) {
  if (form.is_zero()) throw DomainError("the zero form has no Sperner number");
}

void require_half_range(const BivariateForm& form, int i) {
  if (i < 0 || i > form.degree() / 2) {
    throw IndexError("degree index " + std::to_string(i) + " outside [0, floor(d/2)]");
  }
}

std::vector<int> ordered_monomials(int i, MonomialOrder order) {
  std::vector<int> out;
  for (int k = 0; k <= i; ++k) out.push_back(order == MonomialOrder::XFirst ? i - k : k);
  return out;
}

// Columns are the dual images of `ops`; all share one degree.
RatMatrix dual_image_matrix(const std::vector<OperatorPoly>& ops, const BivariateForm& form) {
  const int e = ops.empty() ? 0 : ops.front().degree();
  const int len = e > form.degree() ? 0 : form.degree() - e + 1;
  RatMatrix m(static_cast<std::size_t>(len), ops.size());
  for (std::size_t c = 0; c < ops.size(); ++c) {
    if (len == 0) break;
    const std::vector<Rational> img = image_in_dual(ops[c], form);
    for (int r = 0; r < len; ++r) m(static_cast<std::size_t>(r), c) = img[static_cast<std::size_t>(r)];
  }
  return m;
}

OperatorPoly basis_monomial(int degree, int x_exp) { return OperatorPoly::monomial(x_exp, degree - x_exp); }

OperatorPoly product_of(const std::vector<LinearForm>& tuple, std::size_t first, std::size_t last) {
  OperatorPoly out;
  for (std::size_t k = first; k < last; ++k) out = out * tuple[k].as_operator();
  return out;
}

GramMatrix gram_for(const BivariateForm& form, const OperatorPoly& weight, int i, MonomialOrder order) {
  GramMatrix g;
  g.degree = i;
  g.basis = monomial_basis(form, i, order);
  const std::size_t n = g.basis.size();
  g.matrix = RatMatrix(n, n);
  const Rational sign = (i % 2 == 0) ? 1 : -1;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const OperatorPoly op = weight * basis_monomial(i, g.basis[a]) * basis_monomial(i, g.basis[b]);
      g.matrix(a, b) = sign * pairing(op, form);
      g.matrix(b, a) = g.matrix(a, b);
    }
  }
  return g;
}

std::vector<RatVector> kernel_of_multiplication(const BivariateForm& form, const OperatorPoly& multiplier,
                                                int i, MonomialOrder order) {
  const std::vector<int> basis = monomial_basis(form, i, order);
  std::vector<OperatorPoly> images;
  for (int p : basis) images.push_back(multiplier * basis_monomial(i, p));
  return kernel_basis(dual_image_matrix(images, form));
}

RatMatrix restrict_form(const RatMatrix& g, const std::vector<RatVector>& vs) {
  RatMatrix out(vs.size(), vs.size());
  for (std::size_t a = 0; a < vs.size(); ++a) {
    const RatVector gv = g * vs[a];
    for (std::size_t b = 0; b < vs.size(); ++b) {
      Rational acc = 0;
      for (std::size_t k = 0; k < gv.size(); ++k) acc += vs[b][k] * gv[k];
      out(b, a) = acc;
    }
  }
  return out;
}

void validate_tuple(const BivariateForm& form, const std::vector<LinearForm>& tuple) {
  if (tuple.size() != static_cast<std::size_t>(form.degree()) + 1) {
    throw DimensionError("mixed tuple needs d + 1 = " + std::to_string(form.degree() + 1) + " linear forms");
  }
}

}  // namespace

ToeplitzOfForm toeplitz(const BivariateForm& form, int i) {
  const int d = form.degree();
  if (i < 0 || i > d) throw IndexError("Toeplitz index " + std::to_string(i) + " outside [0, d]");
  ToeplitzOfForm t{i, d, RatMatrix(static_cast<std::size_t>(i) + 1, static_cast<std::size_t>(d - i) + 1)};
  for (int r = 0; r <= i; ++r)
    for (int q = 0; q <= d - i; ++q)
      t.matrix(static_cast<std::size_t>(r), static_cast<std::size_t>(q)) = form.coeff(i - r + q);
  return t;
}

int algebra_dimension(const BivariateForm& form, int i) {
  const int d = form.degree();
  if (i < 0 || i > d) return 0;
  return static_cast<int>(rank_exact(toeplitz(form, std::min(i, d - i)).matrix));
}

HilbertData hilbert_function(const BivariateForm& form) {
  require_nonzero(form);
  const int d = form.degree();
  HilbertData out;
  for (int i = 0; i <= d; ++i) out.h.push_back(algebra_dimension(form, i));
  out.sperner = *std::max_element(out.h.begin(), out.h.end());
  for (int i = 0; i <= d; ++i) {
    const int expected = std::min({i + 1, out.sperner, d - i + 1});
    if (out.h[static_cast<std::size_t>(i)] != expected) {
      throw std::logic_error("Hilbert function is not of the form (1, 2, ..., s, ..., s, ..., 2, 1)");
    }
  }
  return out;
}

int sperner_number(const BivariateForm& form) {
  require_nonzero(form);
  return algebra_dimension(form, form.degree() / 2);
}

std::vector<Rational> image_in_dual(const OperatorPoly& alpha, const BivariateForm& form) {
  if (alpha.degree() > form.degree()) return {};
  return apply_operator(alpha, form).normalized();
}

std::vector<int> monomial_basis(const BivariateForm& form, int i, MonomialOrder order) {
  if (i < 0 || i > form.degree()) return {};
  const std::vector<int> candidates = ordered_monomials(i, order);
  std::vector<OperatorPoly> ops;
  for (int p : candidates) ops.push_back(basis_monomial(i, p));
  std::vector<int> basis;
  for (std::size_t c : pivot_columns(dual_image_matrix(ops, form))) basis.push_back(candidates[c]);
  return basis;
}

Annihilator min_annihilator_degree(const BivariateForm& form) {
  require_nonzero(form);
  for (int e = 1; e <= form.degree() + 1; ++e) {
    std::vector<OperatorPoly> ops;
    for (int p = 0; p <= e; ++p) ops.push_back(basis_monomial(e, p));
    const RatMatrix cat = dual_image_matrix(ops, form);
    const std::vector<RatVector> ker = kernel_basis(cat);
    if (ker.empty()) continue;
    Annihilator out{e, OperatorPoly(ker.front())};
    if (e != sperner_number(form)) {
      throw std::logic_error("annihilator degree differs from the Sperner number");
    }
    return out;
  }
  throw std::logic_error("no annihilator found up to degree d + 1");
}

GramMatrix lefschetz_gram(const BivariateForm& form, const LinearForm& ell, int i, MonomialOrder order) {
  require_half_range(form, i);
  return gram_for(form, pow(ell.as_operator(), form.degree() - 2 * i), i, order);
}

GramMatrix mixed_lefschetz_gram(const BivariateForm& form, const std::vector<LinearForm>& tuple, int i,
                                MonomialOrder order) {
  validate_tuple(form, tuple);
  require_half_range(form, i);
  const auto e = static_cast<std::size_t>(form.degree() - 2 * i);
  return gram_for(form, product_of(tuple, 1, 1 + e), i, order);
}

std::vector<RatVector> primitive_basis(const BivariateForm& form, const LinearForm& ell, int i,
                                       MonomialOrder order) {
  if (i < 0) throw IndexError("negative degree index");
  if (i > form.degree() / 2) return {};
  return kernel_of_multiplication(form, pow(ell.as_operator(), form.degree() - 2 * i + 1), i, order);
}

std::vector<RatVector> mixed_primitive_basis(const BivariateForm& form, const std::vector<LinearForm>& tuple,
                                             int i, MonomialOrder order) {
  validate_tuple(form, tuple);
  if (i < 0) throw IndexError("negative degree index");
  if (i > form.degree() / 2) return {};
  const auto e = static_cast<std::size_t>(form.degree() - 2 * i);
  return kernel_of_multiplication(form, product_of(tuple, 0, 1 + e), i, order);
}

HrrReport ordinary_hrr(const BivariateForm& form, const LinearForm& ell, int i, MonomialOrder order) {
  require_nonzero(form);
  if (ell.is_zero()) throw DomainError("HRR needs a nonzero linear form");
  if (i < 0) throw IndexError("negative degree index");
  HrrReport report;
  for (int j = 0; j <= std::min(i, form.degree() / 2); ++j) {
    HrrDegree deg;
    deg.j = j;
    deg.gram = lefschetz_gram(form, ell, j, order);
    deg.primitive = primitive_basis(form, ell, j, order);
    deg.restricted = restrict_form(deg.gram.matrix, deg.primitive);
    deg.nondegenerate = sgn(det_exact(deg.gram.matrix)) != 0;
    deg.positive = is_positive_definite(deg.restricted);
    deg.holds = deg.positive;
    report.holds = report.holds && deg.holds;
    report.degrees.push_back(std::move(deg));
  }
  return report;
}

bool check_ordinary_hrr(const BivariateForm& form, const LinearForm& ell, int i, MonomialOrder order) {
  return ordinary_hrr(form, ell, i, order).holds;
}

HrrReport mixed_hrr(const BivariateForm& form, const std::vector<LinearForm>& tuple, int i,
                    MonomialOrder order) {
  require_nonzero(form);
  validate_tuple(form, tuple);
  for (const auto& l : tuple)
    if (l.is_zero()) throw DomainError("mixed HRR needs nonzero linear forms");
  if (i < 0) throw IndexError("negative degree index");
  HrrReport report;
  for (int j = 0; j <= std::min(i, form.degree() / 2); ++j) {
    HrrDegree deg;
    deg.j = j;
    deg.gram = mixed_lefschetz_gram(form, tuple, j, order);
    deg.primitive = mixed_primitive_basis(form, tuple, j, order);
    deg.restricted = restrict_form(deg.gram.matrix, deg.primitive);
    deg.nondegenerate = sgn(det_exact(deg.gram.matrix)) != 0;
    deg.positive = is_positive_definite(deg.restricted);
    deg.holds = deg.nondegenerate && deg.positive;
    report.holds = report.holds && deg.holds;
    report.degrees.push_back(std::move(deg));
  }
  return report;
}

bool check_mixed_hrr(const BivariateForm& form, const std::vector<LinearForm>& tuple, int i,
                     MonomialOrder order) {
  return mixed_hrr(form, tuple, i, order).holds;
}

}  // namespace hrr2
