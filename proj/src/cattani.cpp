#include "hrr2/cattani.hpp"

#include "hrr2/apolarity.hpp"
#include "hrr2/errors.hpp"
#include "hrr2/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace hrr2 {

namespace {

void require_nonzero(const BivariateForm& form) {
  if (form.is_zero()) throw DomainError("the zero form has no Sperner number");
}

RatMatrix max_toeplitz(const BivariateForm& form) { return toeplitz(form, form.degree() / 2).matrix; }

bool all_coeffs(const BivariateForm& h, bool strict) {
  const std::vector<Rational> a = h.monomial_coeffs();
  return std::all_of(a.begin(), a.end(), [strict](const Rational& q) { return strict ? sgn(q) > 0 : sgn(q) >= 0; });
}

}  // namespace

TPReport classify_max_toeplitz(const BivariateForm& form) {
  require_nonzero(form);
  return all_minors_nonneg(max_toeplitz(form));
}

bool decide_hessian_side(const BivariateForm& form, bool closed) {
  require_nonzero(form);
  const int s = sperner_number(form);
  for (int i = 0; i < s; ++i) {
    if (!positive_on_quadrant(hessian_polynomial(form, i).poly, closed)) return false;
  }
  return true;
}

bool decide_toeplitz_side(const BivariateForm& form, bool closed) {
  const TPReport report = classify_max_toeplitz(form);
  const int s = sperner_number(form);
  if (closed) return report.is_tnn && report.tp_order >= s;
  return report.is_tnn && report.rank == s;
}

EquivalenceReport verify_equivalence(const BivariateForm& form) {
  require_nonzero(form);
  EquivalenceReport rep;
  rep.form = form;
  rep.sperner = sperner_number(form);
  rep.hessian_side_closed = true;
  rep.hessian_side_open = true;
  for (int i = 0; i < rep.sperner; ++i) {
    HessianStatus st;
    st.i = i;
    st.poly = hessian_polynomial(form, i).poly;
    st.positive_closed = positive_on_quadrant(st.poly, true);
    st.positive_open = positive_on_quadrant(st.poly, false);
    rep.hessian_side_closed = rep.hessian_side_closed && st.positive_closed;
    rep.hessian_side_open = rep.hessian_side_open && st.positive_open;
    rep.per_i_hessian_status.push_back(std::move(st));
  }
  rep.max_toeplitz = classify_max_toeplitz(form);
  rep.toeplitz_side_closed = rep.max_toeplitz.is_tnn && rep.max_toeplitz.tp_order >= rep.sperner;
  rep.toeplitz_side_open = rep.max_toeplitz.is_tnn && rep.max_toeplitz.rank == rep.sperner;
  rep.tp_witness = rep.max_toeplitz.witness;
  rep.agree = rep.hessian_side_closed == rep.toeplitz_side_closed && rep.hessian_side_open == rep.toeplitz_side_open;

  const TPReport small = all_minors_nonneg(toeplitz(form, rep.sperner - 1).matrix);
  rep.small_toeplitz_tp = small.is_tp;
  rep.small_toeplitz_tnn = small.is_tnn;
  rep.max_toeplitz_consistent =
      rep.small_toeplitz_tp == rep.toeplitz_side_closed && rep.small_toeplitz_tnn == rep.toeplitz_side_open;
  return rep;
}

ContiguousMinorCheck contiguous_minor_details(const BivariateForm& form) {
  if (!decide_hessian_side(form, true)) {
    throw PreconditionError("contiguous minor check needs H_i > 0 on the closed quadrant for i < s");
  }
  const int d = form.degree();
  const int s = sperner_number(form);
  const int i = s - 1;
  const RatMatrix phi = toeplitz(form, i).matrix;
  std::vector<std::size_t> rows(static_cast<std::size_t>(s));
  std::iota(rows.begin(), rows.end(), std::size_t{0});

  ContiguousMinorCheck out;
  out.all_nonzero = true;
  out.constants_match = true;
  for (int r = 0; r <= d - 2 * i; ++r) {
    std::vector<std::size_t> cols(static_cast<std::size_t>(s));
    std::iota(cols.begin(), cols.end(), static_cast<std::size_t>(r));
    const Rational minor = minor_det(phi, rows, cols);
    const BivariateForm derived = apply_operator(OperatorPoly::monomial(r, 0), form);
    const Rational value = hessian_polynomial(derived, i).poly.evaluate(0, 1);
    out.minors.push_back(minor);
    out.hessian_values.push_back(value);
    if (sgn(minor) == 0) {
      out.all_nonzero = false;
      if (sgn(value) != 0) out.constants_match = false;
      continue;
    }
    const Rational constant = value / minor;
    Integer expected;
    const Integer base = falling_factorial(static_cast<unsigned>(d), static_cast<unsigned>(r + 2 * i));
    mpz_pow_ui(expected.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(s));
    if (constant != Rational(expected)) out.constants_match = false;
    out.constants.push_back(constant);
  }
  return out;
}

bool contiguous_minor_nonvanishing_check(const BivariateForm& form) {
  const ContiguousMinorCheck c = contiguous_minor_details(form);
  return c.all_nonzero && c.constants_match;
}

PathReport shift_path_experiment(const BivariateForm& form, const std::vector<Rational>& t_grid) {
  if (!decide_hessian_side(form, true)) {
    throw PreconditionError("shift path experiment needs H_i > 0 on the closed quadrant for i < s");
  }
  const int s = sperner_number(form);
  PathReport out;
  for (const Rational& t : t_grid) {
    out.t_samples.push_back(t);
    out.in_Os_flags.push_back(in_open_set_Os(max_toeplitz(shift_S(form, t)), s));
  }
  Rational t = 1;
  for (unsigned k = 0; k <= kShiftSearchCapExponent; ++k, t *= 2) {
    if (all_minors_nonneg(toeplitz(shift_S(form, t), s - 1).matrix).is_tp) {
      out.tp_at_large_t = true;
      out.t_found = t;
      return out;
    }
  }
  out.cap_hit = true;
  return out;
}

bool perturbation_check(const BivariateForm& form, const Rational& t) {
  if (sgn(t) <= 0 || t >= 1) throw DomainError("perturbation parameter must lie in (0, 1)");
  if (!decide_toeplitz_side(form, false)) {
    throw PreconditionError("perturbation check needs phi^(floor(d/2)) TNN of rank s");
  }
  const int s = sperner_number(form);
  return all_minors_nonneg(toeplitz(shift_R(form, t), s - 1).matrix).is_tp;
}

bool coefficient_positivity_check(const BivariateForm& form) {
  require_nonzero(form);
  const bool closed = decide_hessian_side(form, true);
  const bool open = decide_hessian_side(form, false);
  if (!closed && !open) return true;
  const int s = sperner_number(form);
  for (int i = 0; i < s; ++i) {
    const BivariateForm h = hessian_polynomial(form, i).poly;
    if (closed && !all_coeffs(h, true)) return false;
    if (open && !all_coeffs(h, false)) return false;
  }
  return true;
}

FormFamily parse_family(std::string_view name) {
  if (name == "a" || name == "positive-products") return FormFamily::PositiveProducts;
  if (name == "b" || name == "uniform") return FormFamily::Uniform;
  if (name == "c" || name == "sparse-uniform") return FormFamily::SparseUniform;
  if (name == "d" || name == "power-sums") return FormFamily::PowerSums;
  throw DomainError("unknown form family '" + std::string(name) + "'");
}

std::string_view family_name(FormFamily family) {
  switch (family) {
    case FormFamily::PositiveProducts: return "positive-products";
    case FormFamily::Uniform: return "uniform";
    case FormFamily::SparseUniform: return "sparse-uniform";
    case FormFamily::PowerSums: return "power-sums";
  }
  return "unknown";
}

namespace {

// std::uniform_int_distribution is implementation-defined; this mapping is not.
class Draw {
 public:
  Draw(FormFamily family, int degree, std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                      static_cast<std::uint32_t>(family), static_cast<std::uint32_t>(degree)};
    engine_.seed(seq);
  }

  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
  }

  Rational ratio(long lo, long hi, long max_den) { return rat(integer(lo, hi), integer(1, max_den)); }

 private:
  std::mt19937_64 engine_;
};

std::vector<Rational> uniform_coeffs(Draw& draw, int degree) {
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) {
    const long den = draw.integer(1, 4);
    x = rat(draw.integer(-2 * den, 2 * den), den);
  }
  return c;
}

bool all_zero(const std::vector<Rational>& c) {
  return std::all_of(c.begin(), c.end(), [](const Rational& q) { return sgn(q) == 0; });
}

}  // namespace

BivariateForm generate_form(FormFamily family, int degree, std::uint64_t seed, std::uint64_t index) {
  if (degree < 0 || degree > kMaxGeneratedDegree) throw DomainError("generated degree must lie in [0, 10]");
  Draw draw(family, degree, seed, index);
  switch (family) {
    case FormFamily::PositiveProducts: {
      BivariateForm out({Rational(1)});
      for (int j = 0; j < degree; ++j) {
        const Rational a = draw.ratio(1, 6, 3);
        const Rational b = draw.ratio(1, 6, 3);
        out = out * BivariateForm({b, a});
      }
      return out;
    }
    case FormFamily::Uniform: {
      std::vector<Rational> c;
      do {
        c = uniform_coeffs(draw, degree);
      } while (all_zero(c));
      return BivariateForm(std::move(c));
    }
    case FormFamily::SparseUniform: {
      std::vector<Rational> c;
      do {
        c = uniform_coeffs(draw, degree);
        for (auto& x : c)
          if (draw.integer(0, 1) == 0) x = 0;
      } while (all_zero(c));
      return BivariateForm(std::move(c));
    }
    case FormFamily::PowerSums: {
      const auto summands = 1 + static_cast<int>(index % static_cast<std::uint64_t>(degree / 2 + 1));
      std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
      for (int j = 0; j < summands; ++j) {
        const Rational weight = draw.ratio(1, 4, 2);
        Rational a;
        Rational b;
        do {
          a = draw.ratio(0, 4, 2);
          b = draw.ratio(0, 4, 2);
        } while (sgn(a) == 0 && sgn(b) == 0);
        // (aX + bY)^d has normalized coefficients a^k b^(d-k).
        for (int k = 0; k <= degree; ++k) {
          Rational term = weight;
          for (int u = 0; u < k; ++u) term *= a;
          for (int u = k; u < degree; ++u) term *= b;
          c[static_cast<std::size_t>(k)] += term;
        }
      }
      return BivariateForm(std::move(c));
    }
  }
  throw DomainError("unknown form family");
}

std::vector<BivariateForm> generate_forms(FormFamily family, int degree, std::size_t count, std::uint64_t seed) {
  std::vector<BivariateForm> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(generate_form(family, degree, seed, k));
  return out;
}

}  // namespace hrr2
