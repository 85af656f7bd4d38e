#include "steklov/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "steklov/errors.hpp"
#include "steklov/linalg.hpp"
#include "steklov/special_functions.hpp"

namespace steklov::quadrature {

namespace {

int inclination_nodes(int degree) { return (degree + 3) / 2; }  // ceil((degree + 2) / 2)
int azimuth_nodes(int degree) { return degree + 2; }

// ln of the squared norm of C_k^lambda under (1 - z^2)^(lambda - 1/2).
double log_gegenbauer_norm(int k, double lambda) {
  using special::log_gamma;
  return std::log(std::numbers::pi) + (1.0 - 2.0 * lambda) * std::log(2.0) + log_gamma(k + 2.0 * lambda) -
         special::log_factorial(k) - std::log(k + lambda) - 2.0 * log_gamma(lambda);
}

}  // namespace

Rule1D gauss_gegenbauer(int n, double lambda) {
  if (n < 1) throw DomainError("gauss_gegenbauer: need at least one node");
  if (!(lambda > 0.0)) throw DomainError("gauss_gegenbauer: lambda must be positive");

  // Golub-Welsch on the symmetric Jacobi matrix, then Newton polish.
  std::vector<double> jac(static_cast<std::size_t>(n) * n, 0.0);
  for (int k = 1; k < n; ++k) {
    const double b = k * (k + 2.0 * lambda - 1.0) / (4.0 * (k + lambda) * (k + lambda - 1.0));
    jac[(k - 1) * n + k] = std::sqrt(b);
    jac[k * n + (k - 1)] = std::sqrt(b);
  }
  std::vector<double> z = linalg::jacobi_symmetric(std::move(jac), static_cast<std::size_t>(n), 1e-15).values;

  for (double& x : z) {
    for (int it = 0; it < 8; ++it) {
      const double p = special::gegenbauer(n, lambda, x);
      const double dp = special::gegenbauer_derivative(n, lambda, x);
      if (dp == 0.0) break;
      const double step = p / dp;
      x = std::clamp(x - step, -1.0, 1.0);
      if (std::abs(step) < 1e-16) break;
    }
  }
  std::sort(z.begin(), z.end());

  Rule1D rule;
  rule.nodes = z;
  std::vector<double> inv_h(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) inv_h[k] = std::exp(-log_gegenbauer_norm(k, lambda));
  for (double x : z) {
    // C_k by recurrence in one pass.
    double s = inv_h[0];
    double c_prev = 1.0;
    double c = 2.0 * lambda * x;
    for (int k = 1; k < n; ++k) {
      s += c * c * inv_h[k];
      const double c_next = (2.0 * (k + lambda) * x * c - (k + 2.0 * lambda - 1.0) * c_prev) / (k + 1.0);
      c_prev = c;
      c = c_next;
    }
    rule.weights.push_back(1.0 / s);
  }
  return rule;
}

std::uint64_t default_node_cap() {
  if (const char* env = std::getenv("STEKLOV_NODE_CAP")) {
    try {
      const double v = std::stod(env);
      if (v >= 1.0) return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 100'000'000ULL;
}

std::uint64_t SphereGrid::node_count(int d, int degree) {
  if (d < 3) throw DomainError("SphereGrid: dimension must be >= 3");
  if (degree < 0) throw DomainError("SphereGrid: degree must be >= 0");
  long double total = azimuth_nodes(degree);
  for (int j = 2; j <= d; ++j) total *= inclination_nodes(degree);
  if (total > 1.8e19L) return UINT64_MAX;
  return static_cast<std::uint64_t>(total);
}

SphereGrid::SphereGrid(int d, int degree, std::uint64_t node_cap) : d_(d), degree_(degree) {
  const std::uint64_t count = node_count(d, degree);
  if (count > node_cap)
    throw ResourceError("SphereGrid: " + std::to_string(count) + " nodes exceed the cap of " +
                        std::to_string(node_cap));

  const int na = azimuth_nodes(degree);
  const int ni = inclination_nodes(degree);
  std::vector<Rule1D> axes;  // axes[j-2] for theta_j
  for (int j = 2; j <= d; ++j) {
    Rule1D r = gauss_gegenbauer(ni, 0.5 * (j - 1));
    for (double& x : r.nodes) x = std::acos(x);
    axes.push_back(std::move(r));
  }

  points_.reserve(count);
  weights_.reserve(count);
  std::vector<int> idx(static_cast<std::size_t>(d), 0);  // idx[0] azimuth, idx[j-1] theta_j
  const double dphi = 2.0 * std::numbers::pi / na;
  std::vector<double> angles(static_cast<std::size_t>(d));
  while (true) {
    double w = dphi;
    angles[0] = dphi * idx[0];
    for (int j = 2; j <= d; ++j) {
      angles[j - 1] = axes[j - 2].nodes[idx[j - 1]];
      w *= axes[j - 2].weights[idx[j - 1]];
    }
    points_.emplace_back(angles);
    weights_.push_back(w);

    int pos = 0;
    while (pos < d) {
      const int limit = pos == 0 ? na : ni;
      if (++idx[pos] < limit) break;
      idx[pos] = 0;
      ++pos;
    }
    if (pos == d) break;
  }
}

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 16) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

double integrate_surface(const SphereGrid& grid, const std::function<double(const AngularPoint&)>& f) {
  std::vector<double> terms(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) terms[i] = grid.weight(i) * f(grid.point(i));
  return pairwise_sum(terms);
}

std::complex<double> integrate_surface_complex(const SphereGrid& grid,
                                               const std::function<std::complex<double>(const AngularPoint&)>& f) {
  std::vector<double> re(grid.size());
  std::vector<double> im(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const std::complex<double> v = grid.weight(i) * f(grid.point(i));
    re[i] = v.real();
    im[i] = v.imag();
  }
  return {pairwise_sum(re), pairwise_sum(im)};
}

double volume_of_perturbed(const PerturbationFunction& rho, double eps, std::uint64_t node_cap) {
  const int d = rho.dim();
  const SphereGrid grid(d, (d + 1) * rho.band_limit(), node_cap);
  return integrate_surface(grid, [&](const AngularPoint& pt) {
           const double r = 1.0 + eps * rho.value(pt);
           if (!(r > 0.0)) throw GeometryError("volume_of_perturbed: boundary radius is not positive");
           return std::pow(r, d + 1);
         }) /
         (d + 1);
}

}  // namespace steklov::quadrature
