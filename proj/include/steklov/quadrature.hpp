#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "steklov/harmonics.hpp"
#include "steklov/perturbation_function.hpp"

namespace steklov::quadrature {

/// One-dimensional Gauss rule in z = cos(theta) for the weight
/// (1 - z^2)^(lambda - 1/2) on [-1, 1]. lambda = 1/2 is Gauss-Legendre.
struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};
Rule1D gauss_gegenbauer(int n, double lambda);
inline Rule1D gauss_legendre(int n) { return gauss_gegenbauer(n, 0.5); }

/// Node cap from STEKLOV_NODE_CAP, else 1e8.
std::uint64_t default_node_cap();

/// Tensor-product rule on S^d: trapezoid in theta_1 and a Gauss rule in
/// cos(theta_j) for j >= 2 whose weight absorbs sin^{j-1}(theta_j). Integrates
/// every polynomial of degree <= degree restricted to S^d exactly.
class SphereGrid {
 public:
  SphereGrid(int d, int degree, std::uint64_t node_cap = default_node_cap());

  int dim() const { return d_; }
  int degree() const { return degree_; }
  std::size_t size() const { return weights_.size(); }
  const AngularPoint& point(std::size_t i) const { return points_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }
  const std::vector<AngularPoint>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }

  /// Node count the constructor would allocate (no allocation).
  static std::uint64_t node_count(int d, int degree);

 private:
  int d_;
  int degree_;
  std::vector<AngularPoint> points_;
  std::vector<double> weights_;
};

/// Pairwise (cascade) summation.
double pairwise_sum(std::span<const double> v);

double integrate_surface(const SphereGrid& grid, const std::function<double(const AngularPoint&)>& f);
std::complex<double> integrate_surface_complex(const SphereGrid& grid,
                                               const std::function<std::complex<double>(const AngularPoint&)>& f);

/// Volume of {r <= 1 + eps * rho}, integrated exactly on a grid of degree
/// (d+1) * band(rho). Throws GeometryError if the radius is not positive at a node.
double volume_of_perturbed(const PerturbationFunction& rho, double eps,
                           std::uint64_t node_cap = default_node_cap());

}  // namespace steklov::quadrature
