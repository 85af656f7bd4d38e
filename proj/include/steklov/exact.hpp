#pragma once

// Exact rational helpers shared by the 3j evaluator and the closed-form
// triple-product integrals.

#include <boost/multiprecision/cpp_int.hpp>

namespace steklov::exact {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// n! from a process-wide cache (thread safe).
BigInt factorial(int n);

/// r * sqrt(pi)^sqrt_pi_power
struct PiRational {
  Rational r;
  int sqrt_pi_power = 0;
};

/// True when Gamma(twice_x / 2) is a pole (x a non-positive integer).
bool gamma_is_pole(int twice_x);

/// Gamma(twice_x / 2) exactly, for integer or half-integer x that is not a pole.
PiRational gamma_half_integer(int twice_x);

/// (a)_n for a = twice_a / 2.
Rational pochhammer_half_integer(int twice_a, int n);

double to_double(const Rational& r);

}  // namespace steklov::exact
