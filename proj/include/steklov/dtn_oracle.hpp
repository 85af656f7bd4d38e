#pragma once

#include <cstdint>
#include <vector>

#include "steklov/harmonics.hpp"
#include "steklov/linalg.hpp"
#include "steklov/perturbation_function.hpp"
#include "steklov/quadrature.hpp"

namespace steklov::dtn {

/// Boundary radius 1 + eps*rho and the unit outward normal in the
/// orthonormal frame (r_hat, theta_hat_1, ..., theta_hat_d).
struct BoundaryNormal {
  double radius = 1.0;
  std::vector<double> normal;
};
/// Throws GeometryError when the radius is not positive.
BoundaryNormal boundary_normal(const PerturbationFunction& rho, double eps, const AngularPoint& pt);

/// Petrov-Galerkin discretization with trial functions r^l Y_l^m, l <= L,
/// tested against conj(Y_l^m) on S^d: A c = lambda B c.
struct GalerkinSystem {
  int d = 3;
  int L = 0;
  double eps = 0.0;
  std::vector<HarmonicIndex> basis;
  CMatrix a;
  CMatrix b;
};

/// Default band limit k + band(rho) + 2.
int default_band_limit(int k, const PerturbationFunction& rho);
/// Default grid degree 2L + 3 band(rho) + 2.
int default_grid_degree(int L, const PerturbationFunction& rho);

/// Caches harmonic values on the grid so that several eps share one evaluation pass.
class GalerkinAssembler {
 public:
  /// Throws PrecisionError if the grid degree is below 2L + band + 2.
  GalerkinAssembler(const PerturbationFunction& rho, int L, int grid_degree = -1,
                    std::uint64_t node_cap = quadrature::default_node_cap());

  GalerkinSystem assemble(double eps) const;
  const std::vector<HarmonicIndex>& basis() const { return basis_; }
  int grid_degree() const { return grid_.degree(); }

 private:
  PerturbationFunction rho_;
  int L_;
  quadrature::SphereGrid grid_;
  std::vector<HarmonicIndex> basis_;
  std::vector<double> rho_val_;
  std::vector<double> rho_grad_;  // node-major, d per node
  std::vector<Complex> y_;        // node-major, basis value then d gradient components
};

GalerkinSystem assemble_galerkin(const PerturbationFunction& rho, double eps, int L, int grid_degree = -1);

struct ClusterEigenvalues {
  std::vector<double> values;  // real parts, ascending
  double max_imag = 0.0;
  bool imag_flagged = false;   // some |Im| > 1e-8
};

/// The multiplicity(d, k) eigenvalues of B^{-1} A nearest k. Throws
/// ConditioningError when B is far from the identity or numerically singular.
ClusterEigenvalues steklov_spectrum(const GalerkinSystem& system, int k_target);

/// All eigenvalues of B^{-1} A (unsorted).
std::vector<Complex> full_spectrum(const GalerkinSystem& system);

/// Central-difference slopes (lambda(eps) - lambda(-eps)) / (2 eps) of the
/// degree-k cluster compared with the spectrum of M^(d,k).
struct SlopeReport {
  int d = 3;
  int k = 1;
  int L = 0;
  int grid_degree = 0;
  std::vector<double> eps_list;
  std::vector<std::vector<double>> slopes;  // per eps, ascending
  std::vector<double> m_eigs;
  std::vector<double> rel_err;              // per eps: max_j |slope - m| / max_j |m|
  std::vector<double> observed_order;       // between consecutive eps
  double max_rel_err = 0.0;                 // rel_err at the last eps
  double max_imag = 0.0;
};
SlopeReport slope_study(const PerturbationFunction& rho, int k, const std::vector<double>& eps_list, int L = -1,
                        int grid_degree = -1);

}  // namespace steklov::dtn
