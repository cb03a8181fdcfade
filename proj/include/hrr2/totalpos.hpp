#pragma once

// Total positivity tests on rational matrices. Exhaustive minor enumeration is
// the source of truth below the cap; contiguous (solid) minor tests follow
// Fekete's criterion.

#include "hrr2/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hrr2 {

struct MinorWitness {
  std::vector<std::size_t> rows;  // 0-based
  std::vector<std::size_t> cols;
  Rational value;
};

struct TPReport {
  bool is_tnn = false;
  bool is_tp = false;
  int tp_order = 0;  // largest k such that every minor of size <= k is positive
  int rank = 0;
  // First failing minor in (size, colex rows, colex cols) order: the first
  // negative minor if not TNN, otherwise the first zero minor if not TP.
  std::optional<MinorWitness> witness;
};

inline constexpr std::size_t kExhaustiveMinorCap = 7;

/// Every minor of A, computed by Laplace expansion over the previous size.
struct MinorTable {
  std::size_t rows = 0;
  std::size_t cols = 0;
  struct Entry {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    Rational value;
  };
  std::vector<std::vector<Entry>> by_size;  // by_size[k-1], colex rows then colex cols
};

/// Throws ResourceError when min(rows, cols) > kExhaustiveMinorCap.
MinorTable all_minors(const RatMatrix& a);

/// Exhaustive TNN / TP / TP_k classification with witness.
TPReport all_minors_nonneg(const RatMatrix& a);

/// Every contiguous minor of size <= k is positive. Throws IndexError unless
/// 1 <= k <= min(rows, cols).
bool is_tp_contiguous(const RatMatrix& a, int k);

/// Top-right and bottom-left k x k corner minors nonzero for all k <= s.
bool corner_minors_nonzero(const RatMatrix& a, int s);

/// Every contiguous s x s minor nonzero.
bool contiguous_s_minors_nonzero(const RatMatrix& a, int s);

bool is_toeplitz(const RatMatrix& a);

/// rank(A) == s, corner minors up to size s nonzero, contiguous s x s minors
/// nonzero. Throws DomainError for non-Toeplitz input or s < 1.
bool in_open_set_Os(const RatMatrix& a, int s);

}  // namespace hrr2
