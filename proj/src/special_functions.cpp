#include "steklov/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "steklov/errors.hpp"

namespace steklov::special {

namespace {

void check_gegenbauer_args(int n, double alpha, double z) {
  if (n < 0) throw DomainError("gegenbauer: negative degree " + std::to_string(n));
  if (!(alpha > -0.5) || alpha == 0.0)
    throw DomainError("gegenbauer: parameter must satisfy alpha > -1/2, alpha != 0");
  if (!(std::abs(z) <= 1.0)) throw DomainError("gegenbauer: argument outside [-1, 1]");
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive");
  return std::lgamma(x);
}

double log_factorial(int n) {
  if (n < 0) throw DomainError("log_factorial: negative argument");
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double pochhammer(double alpha, int n) {
  if (n < 0) throw DomainError("pochhammer: negative count");
  if (n <= 64 || alpha <= 0.0) {
    double prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= alpha + i;
    return prod;
  }
  return std::exp(std::lgamma(alpha + n) - std::lgamma(alpha));
}

double gegenbauer(int n, double alpha, double z) {
  check_gegenbauer_args(n, alpha, z);
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * alpha * z;
  for (int i = 2; i <= n; ++i) {
    const double next = (2.0 * (i + alpha - 1.0) * z * cur - (i + 2.0 * alpha - 2.0) * prev) / i;
    prev = cur;
    cur = next;
  }
  return cur;
}

double gegenbauer_derivative(int n, double alpha, double z) {
  check_gegenbauer_args(n, alpha, z);
  if (n == 0) return 0.0;
  return 2.0 * alpha * gegenbauer(n - 1, alpha + 1.0, z);
}

double gegenbauer_at_one(int n, double alpha) {
  if (n < 0) throw DomainError("gegenbauer_at_one: negative degree");
  return pochhammer(2.0 * alpha, n) / std::exp(log_factorial(n));
}

double assoc_legendre(int n, int m, double z) {
  if (n < 0 || m < 0) throw DomainError("assoc_legendre: negative degree or order");
  if (!(std::abs(z) <= 1.0)) throw DomainError("assoc_legendre: argument outside [-1, 1]");
  if (m > n) return 0.0;

  // P_m^m = (-1)^m (2m-1)!! (1-z^2)^{m/2}
  double pmm = 1.0;
  if (m > 0) {
    const double somx2 = std::sqrt((1.0 - z) * (1.0 + z));
    double fact = 1.0;
    for (int i = 1; i <= m; ++i) {
      pmm *= -fact * somx2;
      fact += 2.0;
    }
  }
  if (n == m) return pmm;
  double pmmp1 = z * (2 * m + 1) * pmm;
  if (n == m + 1) return pmmp1;
  double pll = 0.0;
  for (int ll = m + 2; ll <= n; ++ll) {
    pll = (z * (2 * ll - 1) * pmmp1 - (ll + m - 1) * pmm) / (ll - m);
    pmm = pmmp1;
    pmmp1 = pll;
  }
  return pll;
}

double assoc_legendre_theta_derivative(int n, int m, double theta) {
  if (n < 0 || m < 0) throw DomainError("assoc_legendre_theta_derivative: negative index");
  if (m > n) return 0.0;
  const double z = std::cos(theta);
  if (m == 0) return assoc_legendre(n, 1, z);
  const double up = assoc_legendre(n, m + 1, z);
  const double down = assoc_legendre(n, m - 1, z);
  return 0.5 * (up - static_cast<double>(n + m) * (n - m + 1) * down);
}

double sphere_area(int d) {
  if (d < 1) throw DomainError("sphere_area: dimension must be >= 1");
  const double half = 0.5 * (d + 1);
  return 2.0 * std::exp(half * std::log(std::numbers::pi) - std::lgamma(half));
}

}  // namespace steklov::special
