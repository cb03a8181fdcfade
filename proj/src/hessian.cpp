#include "hrr2/hessian.hpp"

#include "hrr2/apolarity.hpp"
#include "hrr2/errors.hpp"
#include "hrr2/linalg.hpp"
#include "hrr2/unipoly.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace hrr2 {

namespace {

using Coeffs = std::vector<Rational>;

void require_half_range(const BivariateForm& form, int i) {
  if (i < 0 || i > form.degree() / 2) {
    throw IndexError("Hessian index " + std::to_string(i) + " outside [0, floor(d/2)]");
  }
}

Coeffs multiply(const Coeffs& a, const Coeffs& b) {
  Coeffs out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

FormMatrix hessian_matrix(const BivariateForm& form, int i) {
  require_half_range(form, i);
  const int d = form.degree();
  const int e = d - 2 * i;
  const Rational scale(falling_factorial(static_cast<unsigned>(d), static_cast<unsigned>(2 * i)));
  const auto n = static_cast<std::size_t>(i) + 1;
  FormMatrix h(n, n);
  for (int p = 0; p <= i; ++p) {
    for (int q = 0; q <= i; ++q) {
      std::vector<Rational> c(static_cast<std::size_t>(e) + 1);
      for (int k = 0; k <= e; ++k) c[static_cast<std::size_t>(k)] = scale * form.coeff(p + q + k);
      h(static_cast<std::size_t>(p), static_cast<std::size_t>(q)) = BivariateForm(std::move(c));
    }
  }
  return h;
}

BivariateForm form_determinant(const FormMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square form matrix");
  const std::size_t n = m.rows();
  if (n == 0) return BivariateForm({Rational(1)});
  if (n > 20) throw ResourceError("form determinant limited to 20 x 20");
  const int e = m(0, 0).degree();
  std::vector<Coeffs> entries(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (m(r, c).degree() != e) throw DimensionError("form matrix entries of mixed degree");
      entries[r * n + c] = m(r, c).monomial_coeffs();
    }
  }
  // Laplace expansion along rows, memoized on the set of unused columns.
  std::unordered_map<std::uint32_t, Coeffs> memo;
  std::function<Coeffs(std::uint32_t)> minor = [&](std::uint32_t cols) -> Coeffs {
    const auto remaining = static_cast<std::size_t>(std::popcount(cols));
    if (remaining == 0) return Coeffs{Rational(1)};
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    const std::size_t row = n - remaining;
    Coeffs acc(remaining * static_cast<std::size_t>(e) + 1);
    int position = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(cols & (1u << c))) continue;
      const Coeffs& entry = entries[row * n + c];
      const bool nonzero = std::any_of(entry.begin(), entry.end(), [](const Rational& q) { return sgn(q) != 0; });
      if (nonzero) {
        const Coeffs term = multiply(entry, minor(cols & ~(1u << c)));
        for (std::size_t k = 0; k < acc.size(); ++k) {
          if (position % 2 == 0) {
            acc[k] += term[k];
          } else {
            acc[k] -= term[k];
          }
        }
      }
      ++position;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return BivariateForm::from_monomial_coeffs(minor((1u << n) - 1u));
}

HessianPoly hessian_polynomial(const BivariateForm& form, int i) {
  require_half_range(form, i);
  if (i == 0) return {0, form};
  BivariateForm det = form_determinant(hessian_matrix(form, i));
  if (((i + 1) / 2) % 2 == 1) det = Rational(-1) * det;
  return {i, std::move(det)};
}

bool positive_on_quadrant(const BivariateForm& h, bool closed) {
  if (h.is_zero()) return false;
  const std::vector<Rational> a = h.monomial_coeffs();
  if (a.size() == 1) return sgn(a[0]) > 0;
  // h(t) = H(t, 1); H(1, 0) = a_D and H(0, 1) = a_0.
  const UniPoly dehom(a);
  const PositiveAxisRoots roots = count_roots_positive_axis(dehom);
  if (roots.count != 0) return false;
  if (closed) return sgn(a.back()) > 0 && sgn(a.front()) > 0;
  return sgn(dehom(Rational(1))) > 0;
}

bool decide_ordinary_hrr_cone(const BivariateForm& form, int i, bool closed) {
  if (form.is_zero()) throw DomainError("the zero form has no Sperner number");
  const int s = sperner_number(form);
  for (int j = 0; j <= std::min(i, s - 1); ++j) {
    if (!positive_on_quadrant(hessian_polynomial(form, j).poly, closed)) return false;
  }
  return true;
}

std::vector<int> conjugate(const std::vector<int>& partition, int parts) {
  std::vector<int> out(static_cast<std::size_t>(std::max(parts, 0)));
  for (int k = 1; k <= parts; ++k) {
    out[static_cast<std::size_t>(k - 1)] =
        static_cast<int>(std::count_if(partition.begin(), partition.end(), [k](int v) { return v >= k; }));
  }
  return out;
}

PartitionData subset_to_partition(const std::vector<int>& subset, int m, int n) {
  if (m < 0 || n < m || static_cast<int>(subset.size()) != m) throw DomainError("subset size must equal m <= n");
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (subset[k] < 1 || subset[k] > n) throw DomainError("subset entry outside [n]");
    if (k > 0 && subset[k] <= subset[k - 1]) throw DomainError("subset must be strictly increasing");
  }
  PartitionData out;
  out.subset = subset;
  out.m = m;
  out.n = n;
  for (int k = 1; k <= m; ++k) out.lambda.push_back(subset[static_cast<std::size_t>(m - k)] - (m - k + 1));
  out.lambda_conj = conjugate(out.lambda, n - m);
  out.size = std::accumulate(out.lambda.begin(), out.lambda.end(), 0);
  return out;
}

namespace {

void validate_shape(const std::vector<int>& shape) {
  for (std::size_t k = 0; k < shape.size(); ++k) {
    if (shape[k] < 0) throw DomainError("negative part in shape");
    if (k > 0 && shape[k] > shape[k - 1]) throw DomainError("shape must be weakly decreasing");
  }
}

}  // namespace

Integer ssyt_count(const std::vector<int>& shape, int entry_bound) {
  validate_shape(shape);
  if (entry_bound < 0) throw DomainError("negative entry bound");
  const auto rows = std::count_if(shape.begin(), shape.end(), [](int v) { return v > 0; });
  if (rows > entry_bound) return 0;
  std::vector<int> mu(static_cast<std::size_t>(entry_bound), 0);
  std::copy_n(shape.begin(), std::min<std::size_t>(shape.size(), mu.size()), mu.begin());
  Rational product = 1;
  for (int i = 1; i <= entry_bound; ++i) {
    for (int j = i + 1; j <= entry_bound; ++j) {
      product *= Rational(mu[static_cast<std::size_t>(i - 1)] - mu[static_cast<std::size_t>(j - 1)] + j - i, j - i);
    }
  }
  product.canonicalize();
  if (product.get_den() != 1) throw std::logic_error("SSYT product formula produced a non-integer");
  return product.get_num();
}

std::uint64_t ssyt_count_bruteforce(const std::vector<int>& shape, int entry_bound) {
  validate_shape(shape);
  const int cells = std::accumulate(shape.begin(), shape.end(), 0);
  if (cells > kSsytBruteforceCellCap) throw ResourceError("SSYT enumeration limited to 16 cells");
  std::vector<std::vector<int>> tab;
  for (int len : shape) tab.emplace_back(static_cast<std::size_t>(len), 0);
  std::uint64_t count = 0;
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == tab.size()) {
      ++count;
      return;
    }
    if (c == tab[r].size()) {
      fill(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, tab[r][c - 1]);
    if (r > 0) lo = std::max(lo, tab[r - 1][c] + 1);
    for (int v = lo; v <= entry_bound; ++v) {
      tab[r][c] = v;
      fill(r, c + 1);
    }
  };
  fill(0, 0);
  return count;
}

std::vector<std::vector<int>> colex_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.push_back(cur);
    int j = 0;
    while (j < k && cur[static_cast<std::size_t>(j)] + 1 == (j + 1 < k ? cur[static_cast<std::size_t>(j + 1)] : n + 1)) ++j;
    if (j == k) break;
    ++cur[static_cast<std::size_t>(j)];
    for (int t = 0; t < j; ++t) cur[static_cast<std::size_t>(t)] = t + 1;
  }
  return out;
}

PluckerExpansion plucker_terms(const BivariateForm& form, int i) {
  require_half_range(form, i);
  const int d = form.degree();
  const int m = i + 1;
  const int n = d - i + 1;
  const int total = m * (d - 2 * i);
  const RatMatrix phi = toeplitz(form, i).matrix;

  PluckerExpansion out;
  out.i = i;
  Integer base = falling_factorial(static_cast<unsigned>(d), static_cast<unsigned>(2 * i));
  mpz_pow_ui(out.factor.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(m));

  std::vector<std::size_t> rows(static_cast<std::size_t>(m));
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  std::vector<Rational> monomial(static_cast<std::size_t>(total) + 1);
  for (const auto& subset : colex_subsets(n, m)) {
    PluckerTerm term;
    term.partition = subset_to_partition(subset, m, n);
    term.n_prime = ssyt_count(term.partition.lambda_conj, n - m);
    std::vector<std::size_t> cols;
    for (int j : subset) cols.push_back(static_cast<std::size_t>(j - 1));
    term.minor = minor_det(phi, rows, cols);
    term.x_exponent = term.partition.size;
    term.y_exponent = total - term.partition.size;
    term.contribution = Rational(out.factor * term.n_prime) * term.minor;
    monomial[static_cast<std::size_t>(term.x_exponent)] += term.contribution;
    out.terms.push_back(std::move(term));
  }
  out.poly = BivariateForm::from_monomial_coeffs(monomial);
  return out;
}

BivariateForm plucker_expansion(const BivariateForm& form, int i) { return plucker_terms(form, i).poly; }

bool path_matrix_identity_check(const BivariateForm& form, int i, int truncation) {
  require_half_range(form, i);
  const int d = form.degree();
  const int e = d - 2 * i;
  if (truncation < d + i + 1) {
    throw ResourceError("truncation " + std::to_string(truncation) + " below d + i + 1 = " +
                        std::to_string(d + i + 1));
  }
  const auto t = static_cast<std::size_t>(truncation);
  RatMatrix phi(t, t);
  for (std::size_t p = 0; p < t; ++p)
    for (std::size_t q = p; q < t && q - p <= static_cast<std::size_t>(d); ++q)
      phi(p, q) = form.coeff(static_cast<int>(q - p));

  FormMatrix w(t, t, BivariateForm::zero(e));
  for (std::size_t p = 0; p < t; ++p) {
    for (std::size_t q = 0; q <= p; ++q) {
      const std::size_t k = p - q;
      if (k > static_cast<std::size_t>(e)) continue;
      std::vector<Rational> mono(static_cast<std::size_t>(e) + 1);
      mono[k] = Rational(binomial(static_cast<unsigned>(e), static_cast<unsigned>(k)));
      w(p, q) = BivariateForm::from_monomial_coeffs(mono);
    }
  }

  const FormMatrix hess = hessian_matrix(form, i);
  const Rational scale(falling_factorial(static_cast<unsigned>(d), static_cast<unsigned>(2 * i)));
  for (int a = 0; a <= i; ++a) {
    for (int b = 0; b <= i; ++b) {
      const std::size_t col = static_cast<std::size_t>(i + b);
      BivariateForm acc = BivariateForm::zero(e);
      for (std::size_t k = 0; k < t; ++k) {
        const Rational& coeff = phi(static_cast<std::size_t>(a), k);
        if (sgn(coeff) != 0) acc = acc + coeff * w(k, col);
      }
      const BivariateForm& lhs = hess(static_cast<std::size_t>(i - a), static_cast<std::size_t>(b));
      if (!(lhs == scale * acc)) return false;
    }
  }
  return true;
}

}  // namespace hrr2
