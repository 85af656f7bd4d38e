#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "steklov/errors.hpp"
#include "steklov/linalg.hpp"

using namespace steklov;

namespace {

CMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = g(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = Complex(g(rng), g(rng));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("matrix basics") {
  CMatrix a(2, 2);
  a(0, 0) = 1.0;
  a(0, 1) = Complex(0, 2);
  a(1, 0) = 3.0;
  a(1, 1) = 4.0;
  CHECK(a.trace() == Complex(5.0));
  CHECK(a.adjoint()(0, 1) == Complex(3.0));
  CHECK(a.adjoint()(1, 0) == Complex(0, -2));
  CHECK(max_abs_diff(a * CMatrix::identity(2), a) == 0.0);
  CHECK(hermitian_defect(a) == doctest::Approx(std::abs(Complex(0, 2) - 3.0)));
  CHECK(a.max_abs() == 4.0);
}

TEST_CASE("Jacobi on a known symmetric matrix") {
  // [[2,1],[1,2]] has eigenvalues 1 and 3.
  const auto e = linalg::jacobi_symmetric({2, 1, 1, 2}, 2);
  CHECK(e.values[0] == doctest::Approx(1.0));
  CHECK(e.values[1] == doctest::Approx(3.0));
  CHECK(std::abs(std::abs(e.vectors[1][0]) - std::sqrt(0.5)) < 1e-14);
}

TEST_CASE("Hermitian eigen residuals and orthonormality") {
  std::mt19937_64 rng(23);
  for (std::size_t n : {1u, 3u, 9u, 16u, 25u}) {
    const CMatrix m = random_hermitian(n, rng);
    const auto e = linalg::hermitian_eigen(m);
    REQUIRE(e.values.size() == n);
    CHECK(std::is_sorted(e.values.begin(), e.values.end()));
    double sum = 0.0;
    for (double v : e.values) sum += v;
    CHECK(std::abs(sum - m.trace().real()) < 1e-11 * n);
    const CMatrix mv = m * e.vectors;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(mv(i, j) - e.values[j] * e.vectors(i, j)) < 1e-11);
    CHECK(max_abs_diff(e.vectors.adjoint() * e.vectors, CMatrix::identity(n)) < 1e-12);
  }
}

TEST_CASE("degenerate Hermitian spectrum keeps full multiplicity") {
  // diag(1, 1, 1, -2) rotated by a unitary built from another eigenbasis.
  std::mt19937_64 rng(29);
  const auto u = linalg::hermitian_eigen(random_hermitian(4, rng)).vectors;
  CMatrix d(4, 4);
  d(0, 0) = d(1, 1) = d(2, 2) = 1.0;
  d(3, 3) = -2.0;
  const CMatrix m = u * d * u.adjoint();
  const auto e = linalg::hermitian_eigen(m);
  CHECK(e.values[0] == doctest::Approx(-2.0));
  for (int i = 1; i < 4; ++i) CHECK(e.values[i] == doctest::Approx(1.0));
  CHECK(max_abs_diff(e.vectors.adjoint() * e.vectors, CMatrix::identity(4)) < 1e-12);
}

TEST_CASE("LU solve") {
  std::mt19937_64 rng(31);
  CMatrix b = random_hermitian(6, rng);
  for (std::size_t i = 0; i < 6; ++i) b(i, i) += 5.0;
  const CMatrix a = random_hermitian(6, rng);
  const CMatrix x = linalg::lu_solve(b, a);
  CHECK(max_abs_diff(b * x, a) < 1e-12);
  CHECK_THROWS_AS(linalg::lu_solve(CMatrix(3, 3), CMatrix::identity(3)), ConditioningError);
}

TEST_CASE("general eigenvalues") {
  // Triangular: eigenvalues on the diagonal.
  CMatrix t(3, 3);
  t(0, 0) = 1.0;
  t(1, 1) = Complex(0, 2);
  t(2, 2) = -3.0;
  t(0, 2) = 5.0;
  t(1, 2) = Complex(1, 1);
  auto ev = linalg::general_eigenvalues(t);
  REQUIRE(ev.size() == 3);
  for (Complex target : {Complex(1.0), Complex(0, 2), Complex(-3.0)})
    CHECK(std::any_of(ev.begin(), ev.end(), [&](Complex z) { return std::abs(z - target) < 1e-12; }));
  // Rotation generator: eigenvalues +-i.
  CMatrix r(2, 2);
  r(0, 1) = -1.0;
  r(1, 0) = 1.0;
  ev = linalg::general_eigenvalues(r);
  std::sort(ev.begin(), ev.end(), [](Complex a, Complex b) { return a.imag() < b.imag(); });
  CHECK(std::abs(ev[0] - Complex(0, -1)) < 1e-13);
  CHECK(std::abs(ev[1] - Complex(0, 1)) < 1e-13);
  // Hermitian input: agrees with the Hermitian solver.
  std::mt19937_64 rng(37);
  const CMatrix h = random_hermitian(12, rng);
  ev = linalg::general_eigenvalues(h);
  std::sort(ev.begin(), ev.end(), [](Complex a, Complex b) { return a.real() < b.real(); });
  const auto he = linalg::hermitian_eigen(h);
  for (std::size_t i = 0; i < 12; ++i) CHECK(std::abs(ev[i] - he.values[i]) < 1e-10);
}
