#pragma once

#include "steklov/exact.hpp"

namespace steklov::wigner {

/// (j1 j2 j3; m1 m2 m3) with integer arguments.
struct ThreeJQuery {
  int j1 = 0, j2 = 0, j3 = 0;
  int m1 = 0, m2 = 0, m3 = 0;
};

/// sign * sqrt(radicand); radicand == 0 iff sign == 0.
struct ExactSignedSqrt {
  int sign = 0;
  exact::Rational radicand;

  double value() const;
  /// Exact square (sign dropped).
  const exact::Rational& squared() const { return radicand; }
  ExactSignedSqrt operator*(const ExactSignedSqrt& rhs) const;
  friend bool operator==(const ExactSignedSqrt&, const ExactSignedSqrt&) = default;
};

/// Magnetic bounds, zero m-sum, triangle inequality and the all-zero parity rule.
bool selection_check(const ThreeJQuery& q);

/// Exact 3j symbol by the single-sum Racah formula. Zero when the selection
/// rules fail. Results are memoized.
ExactSignedSqrt wigner3j(const ThreeJQuery& q);

/// wigner3j(q).value()
double wigner3j_value(const ThreeJQuery& q);

}  // namespace steklov::wigner
