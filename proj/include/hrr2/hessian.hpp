#pragma once

// Higher Hessians of a bivariate form, their signed determinants, exact
// positivity on the closed/open positive quadrant, and the Plucker expansion
// of the Hessian polynomial over maximal minors of phi^i_d(F).

#include "hrr2/forms.hpp"
#include "hrr2/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hrr2 {

using FormMatrix = Matrix<BivariateForm>;

/// (i+1) x (i+1) matrix with entries x^(p+q) y^(2i-p-q) o F.
/// Throws IndexError unless 0 <= i <= floor(d/2).
FormMatrix hessian_matrix(const BivariateForm& form, int i);

/// Determinant of a square matrix of forms (all entries of one degree e);
/// the result has degree n * e.
BivariateForm form_determinant(const FormMatrix& m);

struct HessianPoly {
  int i = 0;
  BivariateForm poly;  // degree (i+1)(d-2i)
};

/// H_i = (-1)^floor((i+1)/2) det Hess_i(F); H_0 = F.
HessianPoly hessian_polynomial(const BivariateForm& form, int i);

/// Closed: H > 0 on the closed quadrant minus the origin. Open: H > 0 on the
/// open quadrant. Zero forms are never positive.
bool positive_on_quadrant(const BivariateForm& h, bool closed);

/// H_j positive on the chosen quadrant for 0 <= j <= min(i, s-1).
bool decide_ordinary_hrr_cone(const BivariateForm& form, int i, bool closed);

struct PartitionData {
  std::vector<int> subset;       // J, 1-based, strictly increasing
  int m = 0;                     // |J|
  int n = 0;                     // J is a subset of [n]
  std::vector<int> lambda;       // lambda_k = j_(m-k+1) - (m-k+1), length m
  std::vector<int> lambda_conj;  // length n - m
  int size = 0;                  // |lambda|
};

/// Throws DomainError for malformed J.
PartitionData subset_to_partition(const std::vector<int>& subset, int m, int n);

/// Conjugate partition with `parts` entries.
std::vector<int> conjugate(const std::vector<int>& partition, int parts);

/// Semistandard tableaux of `shape` (weakly decreasing row lengths) with
/// entries in [entry_bound], by the product formula
///   prod_{i<j<=N} (mu_i - mu_j + j - i) / (j - i).
/// Zero when the shape has more than entry_bound nonzero rows. Throws
/// std::logic_error if the product is not an integer.
Integer ssyt_count(const std::vector<int>& shape, int entry_bound);

/// Exhaustive enumeration; throws ResourceError above 16 cells.
std::uint64_t ssyt_count_bruteforce(const std::vector<int>& shape, int entry_bound);

inline constexpr int kSsytBruteforceCellCap = 16;

struct PluckerTerm {
  PartitionData partition;
  Integer n_prime;
  Rational minor;          // Delta_J(phi^i_d(F))
  int x_exponent = 0;      // |lambda(J)|
  int y_exponent = 0;      // D_i - |lambda(J)|
  Rational contribution;   // factor * N'_J * Delta_J
};

struct PluckerExpansion {
  int i = 0;
  Integer factor;  // (d! / (d-2i)!)^(i+1)
  std::vector<PluckerTerm> terms;  // J in colex order
  BivariateForm poly;
};

/// All (i+1)-subsets of [n] (1-based) in colex order.
std::vector<std::vector<int>> colex_subsets(int n, int k);

/// Throws IndexError unless 0 <= i <= floor(d/2). For i >= s every maximal
/// minor vanishes and the expansion is the zero form.
PluckerExpansion plucker_terms(const BivariateForm& form, int i);
BivariateForm plucker_expansion(const BivariateForm& form, int i);

/// Builds T x T truncations of the upper triangular Toeplitz matrix
/// (c_{q-p}) and the weighted path matrix
///   W_{p,q} = binom(d-2i, p-q) X^(p-q) Y^(d-2i-p+q),
/// and checks P_i Hess_i(F) == d!/(d-2i)! (phi W)_{I,J} with I = {0..i},
/// J = {i..2i}. Throws ResourceError when T < d + i + 1 (the product would
/// be cut short).
bool path_matrix_identity_check(const BivariateForm& form, int i, int truncation);

}  // namespace hrr2
