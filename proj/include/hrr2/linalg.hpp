#pragma once

// Exact linear algebra over the rationals. Determinants and ranks run
// fraction-free (Bareiss) on row-scaled integer copies of the input.

#include "hrr2/matrix.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace hrr2 {

/// Throws DimensionError for non-square input. det of the 0x0 matrix is 1.
Rational det_exact(const RatMatrix& m);

/// Determinant of m restricted to rows `rows` and columns `cols` (0-based,
/// strictly increasing). Throws DimensionError when |rows| != |cols| and
/// IndexError for out-of-range or unsorted indices.
Rational minor_det(const RatMatrix& m, std::span<const std::size_t> rows,
                   std::span<const std::size_t> cols);

std::size_t rank_exact(const RatMatrix& m);

/// Pivot columns of the row echelon form, scanning columns left to right.
/// These are the lexicographically-first set of independent columns.
std::vector<std::size_t> pivot_columns(const RatMatrix& m);

/// Reduced row echelon form.
RatMatrix rref(const RatMatrix& m);

/// Right null space basis. One vector per free column (ascending); the free
/// variable is set to 1, the other free variables to 0.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

bool is_symmetric(const RatMatrix& m);

/// Sylvester's criterion. Throws DomainError on asymmetric input.
bool is_positive_definite(const RatMatrix& s);

}  // namespace hrr2
