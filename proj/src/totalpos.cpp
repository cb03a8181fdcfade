#include "hrr2/totalpos.hpp"

#include "hrr2/errors.hpp"
#include "hrr2/hessian.hpp"
#include "hrr2/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace hrr2 {

namespace {

std::vector<std::size_t> zero_based(const std::vector<int>& subset) {
  std::vector<std::size_t> out;
  for (int j : subset) out.push_back(static_cast<std::size_t>(j - 1));
  return out;
}

std::uint32_t mask_of(const std::vector<std::size_t>& idx) {
  std::uint32_t m = 0;
  for (std::size_t k : idx) m |= 1u << k;
  return m;
}

std::vector<std::size_t> range(std::size_t first, std::size_t count) {
  std::vector<std::size_t> out(count);
  std::iota(out.begin(), out.end(), first);
  return out;
}

void check_order(const RatMatrix& a, int k, const char* what) {
  const auto limit = static_cast<int>(std::min(a.rows(), a.cols()));
  if (k < 1 || k > limit) {
    throw IndexError(std::string(what) + " order " + std::to_string(k) + " outside [1, " +
                     std::to_string(limit) + "]");
  }
}

}  // namespace

MinorTable all_minors(const RatMatrix& a) {
  const std::size_t limit = std::min(a.rows(), a.cols());
  if (limit > kExhaustiveMinorCap) {
    throw ResourceError("exhaustive minor enumeration limited to min(rows, cols) <= 7; use contiguous criteria");
  }
  MinorTable table;
  table.rows = a.rows();
  table.cols = a.cols();
  // Laplace expansion along the first row of each row subset, reusing the
  // (k-1)-minors keyed by (row mask, col mask).
  std::map<std::pair<std::uint32_t, std::uint32_t>, Rational> prev;
  for (std::size_t k = 1; k <= limit; ++k) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, Rational> cur;
    std::vector<MinorTable::Entry> level;
    const auto row_sets = colex_subsets(static_cast<int>(a.rows()), static_cast<int>(k));
    const auto col_sets = colex_subsets(static_cast<int>(a.cols()), static_cast<int>(k));
    for (const auto& rs : row_sets) {
      const std::vector<std::size_t> rows = zero_based(rs);
      const std::uint32_t rmask = mask_of(rows);
      const std::uint32_t rest_rows = rmask & ~(1u << rows.front());
      for (const auto& cs : col_sets) {
        const std::vector<std::size_t> cols = zero_based(cs);
        Rational value;
        if (k == 1) {
          value = a(rows[0], cols[0]);
        } else {
          const std::uint32_t cmask = mask_of(cols);
          for (std::size_t t = 0; t < k; ++t) {
            const Rational& entry = a(rows.front(), cols[t]);
            if (sgn(entry) == 0) continue;
            const Rational& sub = prev.at({rest_rows, cmask & ~(1u << cols[t])});
            if (t % 2 == 0) {
              value += entry * sub;
            } else {
              value -= entry * sub;
            }
          }
        }
        cur.emplace(std::make_pair(rmask, mask_of(cols)), value);
        level.push_back({rows, cols, value});
      }
    }
    table.by_size.push_back(std::move(level));
    prev = std::move(cur);
  }
  return table;
}

TPReport all_minors_nonneg(const RatMatrix& a) {
  const MinorTable table = all_minors(a);
  TPReport report;
  report.rank = static_cast<int>(rank_exact(a));
  std::optional<MinorWitness> first_negative;
  std::optional<MinorWitness> first_nonpositive;
  bool positive_so_far = true;
  for (std::size_t k = 0; k < table.by_size.size(); ++k) {
    for (const auto& e : table.by_size[k]) {
      const int s = sgn(e.value);
      if (s < 0 && !first_negative) first_negative = MinorWitness{e.rows, e.cols, e.value};
      if (s <= 0) {
        if (!first_nonpositive) first_nonpositive = MinorWitness{e.rows, e.cols, e.value};
        positive_so_far = false;
      }
    }
    if (positive_so_far) report.tp_order = static_cast<int>(k + 1);
  }
  report.is_tnn = !first_negative.has_value();
  report.is_tp = !first_nonpositive.has_value();
  if (!report.is_tnn) {
    report.witness = first_negative;
  } else if (!report.is_tp) {
    report.witness = first_nonpositive;
  }
  return report;
}

bool is_tp_contiguous(const RatMatrix& a, int k) {
  check_order(a, k, "TP");
  for (std::size_t size = 1; size <= static_cast<std::size_t>(k); ++size) {
    for (std::size_t r = 0; r + size <= a.rows(); ++r) {
      for (std::size_t c = 0; c + size <= a.cols(); ++c) {
        if (sgn(minor_det(a, range(r, size), range(c, size))) <= 0) return false;
      }
    }
  }
  return true;
}

bool corner_minors_nonzero(const RatMatrix& a, int s) {
  check_order(a, s, "corner");
  for (std::size_t k = 1; k <= static_cast<std::size_t>(s); ++k) {
    const Rational top_right = minor_det(a, range(0, k), range(a.cols() - k, k));
    const Rational bottom_left = minor_det(a, range(a.rows() - k, k), range(0, k));
    if (sgn(top_right) == 0 || sgn(bottom_left) == 0) return false;
  }
  return true;
}

bool contiguous_s_minors_nonzero(const RatMatrix& a, int s) {
  check_order(a, s, "contiguous");
  const auto size = static_cast<std::size_t>(s);
  for (std::size_t r = 0; r + size <= a.rows(); ++r)
    for (std::size_t c = 0; c + size <= a.cols(); ++c)
      if (sgn(minor_det(a, range(r, size), range(c, size))) == 0) return false;
  return true;
}

bool is_toeplitz(const RatMatrix& a) {
  for (std::size_t r = 1; r < a.rows(); ++r)
    for (std::size_t c = 1; c < a.cols(); ++c)
      if (a(r, c) != a(r - 1, c - 1)) return false;
  return true;
}

bool in_open_set_Os(const RatMatrix& a, int s) {
  if (!is_toeplitz(a)) throw DomainError("O_s membership is defined for Toeplitz matrices");
  if (s < 1) throw DomainError("O_s needs s >= 1");
  if (static_cast<std::size_t>(s) > std::min(a.rows(), a.cols())) return false;
  if (rank_exact(a) != static_cast<std::size_t>(s)) return false;
  return corner_minors_nonzero(a, s) && contiguous_s_minors_nonzero(a, s);
}

}  // namespace hrr2
