#pragma once

#include "hrr2/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace hrr2 {

// Univariate polynomial with rational coefficients, ascending degree.
// The zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t k) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& t) const;
  UniPoly derivative() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws DomainError on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd (zero when both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// p / gcd(p, p'), made monic.
UniPoly square_free_part(const UniPoly& p);

struct PositiveAxisRoots {
  std::size_t count = 0;      // distinct roots in (0, inf)
  bool root_at_zero = false;  // p(0) == 0
};

/// Sturm-sequence count of distinct real roots in (0, inf).
/// Throws DomainError for the zero polynomial.
PositiveAxisRoots count_roots_positive_axis(const UniPoly& p);

}  // namespace hrr2
