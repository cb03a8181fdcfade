#pragma once

// Exact decision of both sides of the Hessian / Toeplitz equivalence for
// bivariate forms, replays of the shift-path and perturbation arguments, and
// the random form families used to exercise them.

#include "hrr2/forms.hpp"
#include "hrr2/hessian.hpp"
#include "hrr2/totalpos.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hrr2 {

/// TPReport for phi^(floor(d/2))_d(F). Throws DomainError for F == 0.
TPReport classify_max_toeplitz(const BivariateForm& form);

/// H_i positive on the chosen quadrant for every 0 <= i <= s-1.
bool decide_hessian_side(const BivariateForm& form, bool closed);

/// Closed: phi^(floor(d/2)) TNN and TP_s. Open: TNN of rank s.
bool decide_toeplitz_side(const BivariateForm& form, bool closed);

struct HessianStatus {
  int i = 0;
  BivariateForm poly;
  bool positive_closed = false;
  bool positive_open = false;
};

struct EquivalenceReport {
  BivariateForm form;
  int sperner = 0;
  bool hessian_side_closed = false;
  bool hessian_side_open = false;
  bool toeplitz_side_closed = false;
  bool toeplitz_side_open = false;
  bool agree = false;
  // phi^(s-1) TP <=> phi^(floor(d/2)) TNN and TP_s, and
  // phi^(s-1) TNN <=> phi^(floor(d/2)) TNN of rank s.
  bool small_toeplitz_tp = false;
  bool small_toeplitz_tnn = false;
  bool max_toeplitz_consistent = false;
  std::vector<HessianStatus> per_i_hessian_status;
  TPReport max_toeplitz;
  std::optional<MinorWitness> tp_witness;
};

EquivalenceReport verify_equivalence(const BivariateForm& form);

struct ContiguousMinorCheck {
  bool all_nonzero = false;
  bool constants_match = false;  // every recovered constant equals the closed form
  std::vector<Rational> minors;     // r-th contiguous s x s minor of phi^(s-1)
  std::vector<Rational> hessian_values;  // H^(x^r o F)_(s-1)(0, 1)
  std::vector<Rational> constants;       // ratios, when the minor is nonzero
};

/// Throws PreconditionError unless the closed Hessian side holds. Checks that
/// each contiguous maximal minor of phi^(s-1)_d(F) is nonzero and that
/// H^(x^r o F)_(s-1)(0, 1) = C_r * minor_r with C_r = (d!/(d-r-2(s-1))!)^s.
ContiguousMinorCheck contiguous_minor_details(const BivariateForm& form);
bool contiguous_minor_nonvanishing_check(const BivariateForm& form);

struct PathReport {
  std::vector<Rational> t_samples;
  std::vector<bool> in_Os_flags;
  bool tp_at_large_t = false;
  std::optional<Rational> t_found;  // first t in {1, 2, 4, ...} with phi^(s-1)(S_t F) TP
  bool cap_hit = false;
};

inline constexpr unsigned kShiftSearchCapExponent = 20;

/// Throws PreconditionError unless the closed Hessian side holds.
PathReport shift_path_experiment(const BivariateForm& form, const std::vector<Rational>& t_grid);

/// phi^(s-1)_d(R_t(F)) totally positive. Throws DomainError unless 0 < t < 1
/// and PreconditionError unless the open Toeplitz side holds.
bool perturbation_check(const BivariateForm& form, const Rational& t);

/// Closed Hessian side => all coefficients of H_i strictly positive; open
/// side => non-negative (i <= s-1). Vacuously true otherwise.
bool coefficient_positivity_check(const BivariateForm& form);

enum class FormFamily {
  PositiveProducts,  // (a) products of a_j X + b_j Y with a_j, b_j > 0
  Uniform,           // (b) normalized coefficients uniform in [-2, 2]
  SparseUniform,     // (c) (b) with random entries zeroed
  PowerSums,         // (d) sums of d-th powers of non-negative linear forms
};

/// Accepts "a".."d" or the enum names in lower case; throws DomainError.
FormFamily parse_family(std::string_view name);
std::string_view family_name(FormFamily family);

inline constexpr int kMaxGeneratedDegree = 10;

/// Form `index` of the family depends only on (family, degree, seed, index).
/// PowerSums uses 1 + index mod (floor(d/2) + 1) summands.
BivariateForm generate_form(FormFamily family, int degree, std::uint64_t seed, std::uint64_t index);

/// Throws DomainError for degree > 10 or negative.
std::vector<BivariateForm> generate_forms(FormFamily family, int degree, std::size_t count, std::uint64_t seed);

}  // namespace hrr2
