#include "steklov/exact.hpp"

#include <cmath>
#include <mutex>
#include <vector>

#include "steklov/errors.hpp"

namespace steklov::exact {

namespace {
std::mutex g_fact_mutex;
std::vector<BigInt> g_fact{BigInt(1)};
}  // namespace

BigInt factorial(int n) {
  if (n < 0) throw DomainError("factorial: negative argument");
  std::lock_guard<std::mutex> lock(g_fact_mutex);
  while (static_cast<int>(g_fact.size()) <= n) g_fact.push_back(g_fact.back() * BigInt(g_fact.size()));
  return g_fact[static_cast<std::size_t>(n)];
}

bool gamma_is_pole(int twice_x) { return twice_x <= 0 && twice_x % 2 == 0; }

PiRational gamma_half_integer(int twice_x) {
  if (gamma_is_pole(twice_x)) throw DomainError("gamma_half_integer: pole");
  if (twice_x % 2 == 0) return {Rational(factorial(twice_x / 2 - 1)), 0};
  // x = n + 1/2
  if (twice_x > 0) {
    const int n = (twice_x - 1) / 2;
    BigInt den = factorial(n);
    den <<= 2 * n;
    return {Rational(factorial(2 * n), den), 1};
  }
  // x = 1/2 - n, n >= 1: Gamma = (-4)^n n! / (2n)! sqrt(pi)
  const int n = (1 - twice_x) / 2;
  BigInt num = factorial(n);
  num <<= 2 * n;
  if (n % 2 != 0) num = -num;
  return {Rational(num, factorial(2 * n)), 1};
}

Rational pochhammer_half_integer(int twice_a, int n) {
  Rational out(1);
  for (int i = 0; i < n; ++i) out *= Rational(twice_a + 2 * i, 2);
  return out;
}

double to_double(const Rational& r) {
  // Scaled integer division keeps full precision when numerator and
  // denominator individually overflow a double.
  using boost::multiprecision::msb;
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (num == 0) return 0.0;
  const bool negative = num < 0;
  if (negative) num = -num;
  const long shift = static_cast<long>(msb(num)) - static_cast<long>(msb(den)) - 62;
  if (shift > 0)
    den <<= shift;
  else
    num <<= -shift;
  const BigInt q = num / den;
  const double v = std::ldexp(q.convert_to<double>(), static_cast<int>(shift));
  return negative ? -v : v;
}

}  // namespace steklov::exact
