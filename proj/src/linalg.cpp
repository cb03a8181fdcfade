#include "hrr2/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace hrr2 {

RatMatrix identity_matrix(std::size_t n) {
  RatMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) out(k, k) = 1;
  return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(r, k)) == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += a(r, k) * b(k, c);
    }
  }
  return out;
}

RatVector operator*(const RatMatrix& a, const RatVector& v) {
  if (a.cols() != v.size()) throw DimensionError("matrix-vector shape mismatch");
  RatVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[r] += a(r, c) * v[c];
  return out;
}

namespace {

// Integer copy of a rational matrix with each row scaled by the lcm of its
// denominators. `scale` is the product of the row multipliers.
struct IntegerCopy {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> a;
  Integer scale = 1;

  Integer& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
};

IntegerCopy integer_copy(const RatMatrix& m) {
  IntegerCopy out;
  out.rows = m.rows();
  out.cols = m.cols();
  out.a.resize(out.rows * out.cols);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) l = lcm(l, m(r, c).get_den());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out.at(r, c) = m(r, c).get_num() * (l / m(r, c).get_den());
    }
    out.scale *= l;
  }
  return out;
}

struct EchelonResult {
  std::vector<std::size_t> pivots;
  Integer last_pivot = 1;
  int swap_sign = 1;
};

// Fraction-free row echelon form in place. Every division is exact.
EchelonResult bareiss(IntegerCopy& m) {
  EchelonResult res;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m.at(p, c) == 0) ++p;
    if (p == m.rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
      res.swap_sign = -res.swap_sign;
    }
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      for (std::size_t j = c + 1; j < m.cols; ++j) {
        Integer v = m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = std::move(v);
      }
      m.at(i, c) = 0;
    }
    prev = m.at(r, c);
    res.pivots.push_back(c);
    ++r;
  }
  res.last_pivot = prev;
  return res;
}

void check_index_set(std::span<const std::size_t> idx, std::size_t bound, const char* what) {
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= bound) throw IndexError(std::string(what) + " index out of range");
    if (k > 0 && idx[k] <= idx[k - 1]) throw IndexError(std::string(what) + " indices not strictly increasing");
  }
}

}  // namespace

Rational det_exact(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  IntegerCopy copy = integer_copy(m);
  const EchelonResult e = bareiss(copy);
  if (e.pivots.size() < m.rows()) return 0;
  Rational det(e.last_pivot * e.swap_sign, copy.scale);
  det.canonicalize();
  return det;
}

Rational minor_det(const RatMatrix& m, std::span<const std::size_t> rows,
                   std::span<const std::size_t> cols) {
  if (rows.size() != cols.size()) throw DimensionError("minor with |I| != |J|");
  check_index_set(rows, m.rows(), "row");
  check_index_set(cols, m.cols(), "column");
  return det_exact(m.submatrix(rows, cols));
}

std::vector<std::size_t> pivot_columns(const RatMatrix& m) {
  IntegerCopy copy = integer_copy(m);
  return bareiss(copy).pivots;
}

std::size_t rank_exact(const RatMatrix& m) { return pivot_columns(m).size(); }

RatMatrix rref(const RatMatrix& m) {
  RatMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return a;
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const RatMatrix reduced = rref(m);
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < reduced.rows(); ++r) {
    for (std::size_t c = 0; c < reduced.cols(); ++c) {
      if (sgn(reduced(r, c)) != 0) {
        pivots.push_back(c);
        break;
      }
    }
  }
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -reduced(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_symmetric(const RatMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = r + 1; c < m.cols(); ++c)
      if (m(r, c) != m(c, r)) return false;
  return true;
}

bool is_positive_definite(const RatMatrix& s) {
  if (!is_symmetric(s)) throw DomainError("positive definiteness of an asymmetric matrix");
  std::vector<std::size_t> lead;
  for (std::size_t k = 0; k < s.rows(); ++k) {
    lead.push_back(k);
    if (sgn(det_exact(s.submatrix(lead, lead))) <= 0) return false;
  }
  return true;
}

}  // namespace hrr2
