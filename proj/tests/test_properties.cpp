// Randomized invariants of the perturbation matrix and its spectrum.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "steklov/linalg.hpp"
#include "steklov/perturbation.hpp"
#include "steklov/special_functions.hpp"
#include "steklov/verify.hpp"

using namespace steklov;
using namespace steklov::perturbation;

namespace {

constexpr int kCases = 40;

struct Draw {
  int d;
  int k;
  PerturbationFunction rho;
};

Draw draw(std::mt19937_64& rng) {
  const int d = std::uniform_int_distribution<int>(3, 4)(rng);
  const int k = std::uniform_int_distribution<int>(1, d == 3 ? 3 : 2)(rng);
  const int band = std::uniform_int_distribution<int>(0, 4)(rng);
  return {d, k, verify::random_perturbation(d, band, rng)};
}

PerturbationFunction reflect_azimuth(const PerturbationFunction& rho) {
  PerturbationFunction out(rho.dim());
  for (const auto& t : rho.terms()) out.add_term(t.index, t.index.m[0] < 0 ? -t.coefficient : t.coefficient);
  return out;
}

}  // namespace

TEST_CASE("linear in rho") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int c = 0; c < kCases / 2; ++c) {
    const auto a = draw(rng);
    const auto b = verify::random_perturbation(a.d, 3, rng);
    const double s = u(rng), t = u(rng);
    CMatrix lhs = assemble_matrix_wigner(a.k, a.rho.combine(s, b, t)).m;
    CMatrix rhs = assemble_matrix_wigner(a.k, a.rho).m;
    rhs *= s;
    CMatrix mb = assemble_matrix_wigner(a.k, b).m;
    mb *= t;
    rhs += mb;
    CHECK(max_abs_diff(lhs, rhs) < 1e-13);
  }
}

TEST_CASE("Hermitian with the trace identity") {
  std::mt19937_64 rng(103);
  for (int c = 0; c < kCases; ++c) {
    const auto x = draw(rng);
    const auto pm = assemble_matrix_wigner(x.k, x.rho);
    CHECK(hermitian_defect(pm.m) == 0.0);
    const double expected = -x.k * x.rho.mean_coefficient() * static_cast<double>(harmonics::multiplicity(x.d, x.k)) /
                            std::sqrt(special::sphere_area(x.d));
    CHECK(std::abs(pm.m.trace().real() - expected) < 1e-12);
    const auto td = decompose_trace(pm, x.rho.mean_coefficient());
    CHECK(std::abs(td.traceless.trace()) < 1e-12);
  }
}

TEST_CASE("eigenpairs, traceless sum and sign of the top branch") {
  std::mt19937_64 rng(107);
  for (int c = 0; c < kCases; ++c) {
    const auto x = draw(rng);
    const auto pm = assemble_matrix_wigner(x.k, x.rho);
    const auto rep = eigen_spectrum(pm, x.rho.mean_coefficient());
    const CMatrix mv = pm.m * rep.eigenvectors;
    const double scale = std::max(1.0, pm.m.max_abs());
    for (std::size_t j = 0; j < rep.lambda1.size(); ++j)
      for (std::size_t i = 0; i < rep.lambda1.size(); ++i)
        CHECK(std::abs(mv(i, j) - rep.lambda1[j] * rep.eigenvectors(i, j)) < 1e-11 * scale);
    double sum = 0.0;
    for (double e : rep.e) sum += e;
    CHECK(std::abs(sum) < 1e-11 * scale);
    CHECK(rep.e.front() <= 1e-12 * scale);
    CHECK(rep.e.back() >= -1e-12 * scale);
  }
}

TEST_CASE("spectrum does not depend on the basis order") {
  std::mt19937_64 rng(109);
  for (int c = 0; c < kCases / 2; ++c) {
    const auto x = draw(rng);
    auto basis = harmonics::enumerate_indices(x.d, x.k);
    const auto a = eigen_spectrum(assemble_matrix_wigner(x.k, x.rho, basis), x.rho.mean_coefficient());
    std::shuffle(basis.begin(), basis.end(), rng);
    const auto b = eigen_spectrum(assemble_matrix_wigner(x.k, x.rho, basis), x.rho.mean_coefficient());
    for (std::size_t j = 0; j < a.lambda1.size(); ++j) CHECK(std::abs(a.lambda1[j] - b.lambda1[j]) < 1e-12);
  }
}

TEST_CASE("azimuthal reflection leaves the spectrum unchanged") {
  std::mt19937_64 rng(113);
  for (int c = 0; c < kCases / 2; ++c) {
    const auto x = draw(rng);
    const auto a = eigen_spectrum(assemble_matrix_wigner(x.k, x.rho), x.rho.mean_coefficient());
    const auto r = reflect_azimuth(x.rho);
    const auto b = eigen_spectrum(assemble_matrix_wigner(x.k, r), r.mean_coefficient());
    for (std::size_t j = 0; j < a.lambda1.size(); ++j) CHECK(std::abs(a.lambda1[j] - b.lambda1[j]) < 1e-12);
  }
}

TEST_CASE("negating rho negates and reverses the spectrum") {
  std::mt19937_64 rng(127);
  for (int c = 0; c < kCases / 2; ++c) {
    const auto x = draw(rng);
    const auto neg = x.rho.combine(-1.0, PerturbationFunction(x.d), 0.0);
    const auto a = eigen_spectrum(assemble_matrix_wigner(x.k, x.rho), x.rho.mean_coefficient());
    const auto b = eigen_spectrum(assemble_matrix_wigner(x.k, neg), neg.mean_coefficient());
    const std::size_t n = a.lambda1.size();
    for (std::size_t j = 0; j < n; ++j) CHECK(std::abs(a.lambda1[j] + b.lambda1[n - 1 - j]) < 1e-12);
  }
}

TEST_CASE("routes agree on random inputs") {
  std::mt19937_64 rng(131);
  for (int c = 0; c < 12; ++c) {
    auto x = draw(rng);
    if (x.d == 4) x.k = 1;
    const auto w = assemble_matrix_wigner(x.k, x.rho);
    const auto q = assemble_matrix_quadrature(x.k, x.rho);
    CHECK(max_abs_diff(w.m, q.m) < 1e-12);
  }
}
