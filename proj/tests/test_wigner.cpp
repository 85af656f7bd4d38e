#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "steklov/errors.hpp"
#include "steklov/exact.hpp"
#include "steklov/wigner.hpp"

using namespace steklov;
using wigner::ThreeJQuery;
using exact::Rational;

namespace {

struct Reference {
  ThreeJQuery q;
  int sign;
  Rational squared;
  double value;
};

// sympy.physics.wigner.wigner_3j
const Reference kReference[] = {
    {{1, 1, 2, 0, 0, 0}, 1, Rational(2, 15), 0.36514837167011074230},
    {{2, 2, 2, 0, 0, 0}, -1, Rational(2, 35), -0.23904572186687872799},
    {{1, 1, 1, 1, -1, 0}, 1, Rational(1, 6), 0.40824829046386301637},
    {{3, 2, 1, 1, -1, 0}, 1, Rational(8, 105), 0.27602622373694168712},
    {{2, 1, 1, -1, 0, 1}, -1, Rational(1, 10), -0.31622776601683793320},
    {{4, 3, 2, 2, -3, 1}, 1, Rational(3, 140), 0.14638501094227997690},
    {{10, 6, 8, 0, 0, 0}, 1, Rational(2772, 482885), 0.075766069053600440506},
    {{7, 5, 4, -3, 1, 2}, -1, Rational(13, 3740), -0.058957067675360223495},
};

ThreeJQuery permute(const ThreeJQuery& q, int which) {
  switch (which) {
    case 0: return {q.j2, q.j3, q.j1, q.m2, q.m3, q.m1};
    case 1: return {q.j3, q.j1, q.j2, q.m3, q.m1, q.m2};
    case 2: return {q.j2, q.j1, q.j3, q.m2, q.m1, q.m3};
    case 3: return {q.j1, q.j3, q.j2, q.m1, q.m3, q.m2};
    default: return {q.j3, q.j2, q.j1, q.m3, q.m2, q.m1};
  }
}

}  // namespace

TEST_CASE("reference values") {
  for (const auto& r : kReference) {
    const auto w = wigner::wigner3j(r.q);
    CHECK(w.sign == r.sign);
    CHECK(w.squared() == r.squared);
    CHECK(std::abs(w.value() - r.value) < 1e-15);
  }
}

TEST_CASE("selection rules") {
  CHECK_FALSE(wigner::selection_check({1, 1, 3, 0, 0, 0}));
  CHECK_FALSE(wigner::selection_check({1, 1, 1, 0, 0, 0}));
  CHECK_FALSE(wigner::selection_check({2, 2, 2, 1, 1, 0}));
  CHECK_FALSE(wigner::selection_check({2, 2, 2, 3, -3, 0}));
  CHECK(wigner::selection_check({2, 2, 2, 1, -1, 0}));
  CHECK(wigner::wigner3j({1, 1, 1, 0, 0, 0}).sign == 0);
  CHECK(wigner::wigner3j_value({1, 1, 3, 0, 0, 0}) == 0.0);
  CHECK_THROWS_AS(wigner::wigner3j({501, 501, 2, 0, 0, 0}), DomainError);
}

TEST_CASE("symmetries on random arguments") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> jd(0, 12);
  int tested = 0;
  while (tested < 300) {
    ThreeJQuery q{jd(rng), jd(rng), jd(rng), 0, 0, 0};
    if (q.j3 < std::abs(q.j1 - q.j2) || q.j3 > q.j1 + q.j2) continue;
    q.m1 = std::uniform_int_distribution<int>(-q.j1, q.j1)(rng);
    q.m2 = std::uniform_int_distribution<int>(-q.j2, q.j2)(rng);
    q.m3 = -q.m1 - q.m2;
    if (std::abs(q.m3) > q.j3) continue;
    ++tested;
    const auto w = wigner::wigner3j(q);
    const int odd = ((q.j1 + q.j2 + q.j3) % 2) ? -1 : 1;
    CHECK(wigner::wigner3j(permute(q, 0)) == w);
    CHECK(wigner::wigner3j(permute(q, 1)) == w);
    for (int p = 2; p <= 4; ++p) {
      const auto v = wigner::wigner3j(permute(q, p));
      CHECK(v.radicand == w.radicand);
      CHECK(v.sign == odd * w.sign);
    }
    const auto flipped = wigner::wigner3j({q.j1, q.j2, q.j3, -q.m1, -q.m2, -q.m3});
    CHECK(flipped.radicand == w.radicand);
    CHECK(flipped.sign == odd * w.sign);
  }
}

TEST_CASE("orthogonality in j3") {
  for (int j1 = 0; j1 <= 6; ++j1)
    for (int j2 = 0; j2 <= 6; ++j2)
      for (int j3 = std::abs(j1 - j2); j3 <= j1 + j2; ++j3)
        for (int m3 = -j3; m3 <= j3; ++m3) {
          Rational sum = 0;
          for (int m1 = -j1; m1 <= j1; ++m1) {
            const int m2 = -m3 - m1;
            if (std::abs(m2) > j2) continue;
            sum += wigner::wigner3j({j1, j2, j3, m1, m2, m3}).squared();
          }
          CHECK(sum * (2 * j3 + 1) == 1);
        }
}

TEST_CASE("exact helpers") {
  CHECK(exact::factorial(0) == 1);
  CHECK(exact::factorial(20) == exact::BigInt("2432902008176640000"));
  CHECK(exact::gamma_is_pole(0));
  CHECK(exact::gamma_is_pole(-4));
  CHECK_FALSE(exact::gamma_is_pole(-3));
  const auto g = exact::gamma_half_integer(5);  // Gamma(5/2) = 3 sqrt(pi) / 4
  CHECK(g.r == Rational(3, 4));
  CHECK(g.sqrt_pi_power == 1);
  const auto gm = exact::gamma_half_integer(-1);  // Gamma(-1/2) = -2 sqrt(pi)
  CHECK(gm.r == Rational(-2));
  CHECK(exact::gamma_half_integer(8).r == 6);
  CHECK(exact::pochhammer_half_integer(3, 2) == Rational(15, 4));
  CHECK(exact::to_double(Rational(1, 3)) == 1.0 / 3.0);
  const Rational big(exact::factorial(60), exact::factorial(58) * 7);
  CHECK(exact::to_double(big) == doctest::Approx(60.0 * 59.0 / 7.0).epsilon(1e-15));
  CHECK(exact::to_double(Rational(-5, 2)) == -2.5);
}
