#pragma once

// Scalar special functions used by the harmonic evaluators and the
// closed-form triple-product integrals.

namespace steklov::special {

/// ln Gamma(x) for x > 0. Throws DomainError otherwise.
double log_gamma(double x);

/// Rising factorial (alpha)_n = alpha (alpha+1) ... (alpha+n-1).
/// Direct product for n <= 64, log-gamma ratio beyond (alpha > 0 only).
double pochhammer(double alpha, int n);

/// Gegenbauer polynomial C_n^(alpha)(z) by the forward three-term recurrence.
/// Requires alpha > -1/2, alpha != 0, |z| <= 1.
double gegenbauer(int n, double alpha, double z);

/// d/dz C_n^(alpha)(z) = 2 alpha C_{n-1}^(alpha+1)(z).
double gegenbauer_derivative(int n, double alpha, double z);

/// C_n^(alpha)(1) = (2 alpha)_n / n!.
double gegenbauer_at_one(int n, double alpha);

/// Associated Legendre function P_n^m(z), 0 <= m, including the
/// Condon-Shortley phase (-1)^m. Returns 0 for m > n.
double assoc_legendre(int n, int m, double z);

/// d/dtheta P_n^m(cos theta), from the mixed-order recurrence
///   m = 0 : P_n^1
///   m > 0 : (P_n^{m+1} - (n+m)(n-m+1) P_n^{m-1}) / 2
double assoc_legendre_theta_derivative(int n, int m, double theta);

/// Surface area of the unit sphere S^d in R^{d+1}.
double sphere_area(int d);

/// ln n!
double log_factorial(int n);

}  // namespace steklov::special
