#include "steklov/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <unordered_map>

#include "steklov/errors.hpp"

namespace steklov::wigner {

using exact::BigInt;
using exact::factorial;
using exact::Rational;

double ExactSignedSqrt::value() const {
  if (sign == 0) return 0.0;
  return sign * std::sqrt(exact::to_double(radicand));
}

ExactSignedSqrt ExactSignedSqrt::operator*(const ExactSignedSqrt& rhs) const {
  if (sign == 0 || rhs.sign == 0) return {};
  return {sign * rhs.sign, radicand * rhs.radicand};
}

bool selection_check(const ThreeJQuery& q) {
  if (q.j1 < 0 || q.j2 < 0 || q.j3 < 0) return false;
  if (std::abs(q.m1) > q.j1 || std::abs(q.m2) > q.j2 || std::abs(q.m3) > q.j3) return false;
  if (q.m1 + q.m2 + q.m3 != 0) return false;
  if (q.j3 < std::abs(q.j1 - q.j2) || q.j3 > q.j1 + q.j2) return false;
  if (q.m1 == 0 && q.m2 == 0 && q.m3 == 0 && (q.j1 + q.j2 + q.j3) % 2 != 0) return false;
  return true;
}

namespace {

ExactSignedSqrt racah(const ThreeJQuery& q) {
  const int j1 = q.j1, j2 = q.j2, j3 = q.j3, m1 = q.m1, m2 = q.m2, m3 = q.m3;
  const int tmin = std::max({0, j2 - j3 - m1, j1 - j3 + m2});
  const int tmax = std::min({j1 + j2 - j3, j1 - m1, j2 + m2});
  Rational sum(0);
  for (int t = tmin; t <= tmax; ++t) {
    BigInt den = factorial(t) * factorial(j3 - j2 + t + m1) * factorial(j3 - j1 + t - m2) *
                 factorial(j1 + j2 - j3 - t) * factorial(j1 - t - m1) * factorial(j2 - t + m2);
    sum += Rational(BigInt(t % 2 != 0 ? -1 : 1), den);
  }
  if (sum == 0) return {};
  const Rational delta(factorial(j1 + j2 - j3) * factorial(j1 - j2 + j3) * factorial(-j1 + j2 + j3),
                       factorial(j1 + j2 + j3 + 1));
  const BigInt prod = factorial(j1 + m1) * factorial(j1 - m1) * factorial(j2 + m2) * factorial(j2 - m2) *
                      factorial(j3 + m3) * factorial(j3 - m3);
  int sign = sum > 0 ? 1 : -1;
  const int phase = j1 - j2 - m3;
  if (((phase % 2) + 2) % 2 != 0) sign = -sign;
  return {sign, sum * sum * delta * Rational(prod)};
}

std::uint64_t pack(const ThreeJQuery& q) {
  auto field = [](int v) { return static_cast<std::uint64_t>(v + 512) & 0x3FF; };
  return field(q.j1) | field(q.j2) << 10 | field(q.j3) << 20 | field(q.m1) << 30 | field(q.m2) << 40 |
         field(q.m3) << 50;
}

std::mutex g_cache_mutex;
std::unordered_map<std::uint64_t, ExactSignedSqrt> g_cache;

}  // namespace

ExactSignedSqrt wigner3j(const ThreeJQuery& q) {
  if (!selection_check(q)) return {};
  if (q.j1 > 500 || q.j2 > 500 || q.j3 > 500) throw DomainError("wigner3j: angular momentum too large");
  const std::uint64_t key = pack(q);
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
  }
  ExactSignedSqrt v = racah(q);
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_cache.emplace(key, v);
  return v;
}

double wigner3j_value(const ThreeJQuery& q) { return wigner3j(q).value(); }

}  // namespace steklov::wigner
