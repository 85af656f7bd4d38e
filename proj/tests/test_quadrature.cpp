#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>

#include "steklov/errors.hpp"
#include "steklov/quadrature.hpp"
#include "steklov/special_functions.hpp"
#include "steklov/verify.hpp"

using namespace steklov;
using quadrature::SphereGrid;

TEST_CASE("one-dimensional Gauss rules") {
  const auto gl = quadrature::gauss_legendre(5);
  double s = 0.0;
  for (double w : gl.weights) s += w;
  CHECK(s == doctest::Approx(2.0).epsilon(1e-14));
  // exact through degree 9
  double m8 = 0.0;
  for (std::size_t i = 0; i < 5; ++i) m8 += gl.weights[i] * std::pow(gl.nodes[i], 8);
  CHECK(m8 == doctest::Approx(2.0 / 9.0).epsilon(1e-14));

  // weight (1 - z^2): moments 4/3 and 4/15
  const auto gg = quadrature::gauss_gegenbauer(4, 1.5);
  double m0 = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    m0 += gg.weights[i];
    m2 += gg.weights[i] * gg.nodes[i] * gg.nodes[i];
  }
  CHECK(m0 == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK(m2 == doctest::Approx(4.0 / 15.0).epsilon(1e-14));
}

TEST_CASE("grid reproduces the sphere area") {
  for (int d = 3; d <= 6; ++d) {
    const SphereGrid grid(d, 8);
    double s = 0.0;
    for (double w : grid.weights()) {
      CHECK(w > 0.0);
      s += w;
    }
    CHECK(std::abs(s - special::sphere_area(d)) < 1e-12 * special::sphere_area(d));
  }
  const SphereGrid g3(3, 8);
  CHECK(std::abs(quadrature::integrate_surface(g3, [](const AngularPoint&) { return 1.0; }) -
                 2 * std::numbers::pi * std::numbers::pi) < 1e-12);
}

TEST_CASE("grid orthonormality") {
  const SphereGrid grid(4, 6);
  const auto basis = harmonics::enumerate_indices(4, 3);
  double worst = 0.0;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Complex v = quadrature::integrate_surface_complex(grid, [&](const AngularPoint& pt) {
        return harmonics::eval_complex(basis[a], pt) * std::conj(harmonics::eval_complex(basis[b], pt));
      });
      worst = std::max(worst, std::abs(v - (a == b ? 1.0 : 0.0)));
    }
  CHECK(worst < 1e-12);

  const SphereGrid g3(3, 4);
  for (const auto& idx : harmonics::enumerate_indices(3, 2)) {
    const double v = quadrature::integrate_surface(g3, [&](const AngularPoint& pt) { return std::norm(harmonics::eval_complex(idx, pt)); });
    CHECK(std::abs(v - 1.0) < 1e-12);
  }
  for (const auto& idx : harmonics::enumerate_indices(3, 1)) {
    const Complex v = quadrature::integrate_surface_complex(g3, [&](const AngularPoint& pt) { return harmonics::eval_complex(idx, pt); });
    CHECK(std::abs(v) < 1e-12);
  }
}

TEST_CASE("integration is linear") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const SphereGrid grid(3, 6);
  const HarmonicIndex f{3, 2, {1, 2}}, g{3, 3, {-1, 3}};
  for (int s = 0; s < 10; ++s) {
    const double a = u(rng), b = u(rng);
    const double lhs = quadrature::integrate_surface(grid, [&](const AngularPoint& pt) {
      return a * harmonics::eval_real(f, pt) * harmonics::eval_real(f, pt) + b * harmonics::eval_real(g, pt);
    });
    const double rf = quadrature::integrate_surface(grid, [&](const AngularPoint& pt) { return harmonics::eval_real(f, pt) * harmonics::eval_real(f, pt); });
    const double rg = quadrature::integrate_surface(grid, [&](const AngularPoint& pt) { return harmonics::eval_real(g, pt); });
    CHECK(std::abs(lhs - (a * rf + b * rg)) < 1e-13);
  }
}

TEST_CASE("pairwise sum") {
  std::vector<double> v(1001, 0.1);
  CHECK(quadrature::pairwise_sum(v) == doctest::Approx(100.1).epsilon(1e-15));
  CHECK(quadrature::pairwise_sum(std::vector<double>{}) == 0.0);
}

TEST_CASE("node cap") {
  CHECK(SphereGrid::node_count(3, 8) == 10u * 5u * 5u);
  CHECK_THROWS_AS(SphereGrid(5, 40, 1000), ResourceError);
  setenv("STEKLOV_NODE_CAP", "500", 1);
  CHECK(quadrature::default_node_cap() == 500u);
  CHECK_THROWS_AS(SphereGrid(3, 12), ResourceError);
  unsetenv("STEKLOV_NODE_CAP");
  CHECK(quadrature::default_node_cap() == 100'000'000u);
}

TEST_CASE("perturbed volume") {
  for (int d : {3, 4}) {
    const double ball = special::sphere_area(d) / (d + 1);
    PerturbationFunction mixed(d);
    mixed.add_term(HarmonicIndex::trivial(d), 0.7);
    HarmonicIndex q2 = HarmonicIndex::trivial(d, 2);
    q2.m.back() = 2;
    mixed.add_term(q2, 0.4);
    CHECK(quadrature::volume_of_perturbed(mixed, 0.0) == doctest::Approx(ball).epsilon(1e-13));

    const auto constant = PerturbationFunction::single(HarmonicIndex::trivial(d));
    for (double eps : {0.1, -0.3}) {
      const double expected = ball * std::pow(1.0 + eps / std::sqrt(special::sphere_area(d)), d + 1);
      CHECK(std::abs(quadrature::volume_of_perturbed(constant, eps) - expected) < 1e-12);
    }
    // Band-limited integrand: a finer grid changes nothing.
    const double v1 = quadrature::volume_of_perturbed(mixed, 0.05);
    const SphereGrid fine(d, 2 * (d + 1) * 2);
    const double v2 = quadrature::integrate_surface(fine, [&](const AngularPoint& pt) {
      return std::pow(1.0 + 0.05 * mixed.value(pt), d + 1);
    }) / (d + 1);
    CHECK(std::abs(v1 - v2) < 1e-12);

    CHECK_THROWS_AS(quadrature::volume_of_perturbed(constant, -10.0), GeometryError);
  }
}
