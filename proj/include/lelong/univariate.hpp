#pragma once

#include <vector>

#include "lelong/rational.hpp"

namespace lelong {

/// Dense univariate polynomial, coefficient i multiplies x^i. Trailing zero
/// coefficients are trimmed so degree() is exact; the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  Polynomial derivative() const;

  friend Polynomial operator-(const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of a / b (b nonzero).
std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor.
Polynomial gcd(Polynomial a, Polynomial b);

/// All distinct rational roots in increasing order. Exact: real roots are
/// isolated with a Sturm sequence and each isolating interval is narrowed
/// until it can hold at most one fraction of admissible denominator.
std::vector<Rational> rational_roots(const Polynomial& p);

/// The fraction with the smallest denominator in the closed interval [lo, hi].
Rational simplest_between(Rational lo, Rational hi);

}  // namespace lelong
