#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "steklov/harmonics.hpp"
#include "steklov/linalg.hpp"
#include "steklov/perturbation_function.hpp"
#include "steklov/quadrature.hpp"

namespace steklov {

/// Aligned tuples T_j = (q_j, m_j, n_j), j = 1..d, with T_d = (p, k, k).
struct TripleTower {
  int d = 3;
  std::vector<std::array<int, 3>> t;  // t[j-1]

  static TripleTower build(const HarmonicIndex& q, const HarmonicIndex& m, const HarmonicIndex& n);

  int entry(int j, int i) const { return t[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)]; }
  int s(int j) const { return entry(j, 1) + entry(j, 2) + entry(j, 3); }
  int delta(int j, int i) const { return entry(j, i) - entry(j - 1, i); }
  double nu(int j) const { return 0.5 * (j - 1); }
};

struct PerturbMatrix {
  enum class Route { Quadrature, Wigner };
  int d = 3;
  int k = 1;
  Route route = Route::Wigner;
  std::vector<HarmonicIndex> basis;
  CMatrix m;
};

const char* route_name(PerturbMatrix::Route r);

namespace perturbation {

/// I(T_1, T_2): the (phi, theta_2) factor of the closed form.
Complex closed_factor_12(const TripleTower& tower);
/// I(T_{j-1}, T_j) for 3 <= j <= d, from the exact rational sum H.
double closed_factor_j(const TripleTower& tower, int j);

/// W = int Y_{p,q} Y_k^m conj(Y_k^n) dsigma by the Wigner closed form.
Complex triple_integral_closed(const TripleTower& tower);

/// The same integral by quadrature. Throws PrecisionError unless the grid
/// degree is at least 2k + p.
Complex triple_integral_quadrature(const quadrature::SphereGrid& grid, const HarmonicIndex& q,
                                   const HarmonicIndex& m, const HarmonicIndex& n);

/// Grid degree used for matrix assembly: 2k + band + 2.
int assembly_degree(int k, const PerturbationFunction& rho);

PerturbMatrix assemble_matrix_wigner(int k, const PerturbationFunction& rho);
PerturbMatrix assemble_matrix_wigner(int k, const PerturbationFunction& rho, std::vector<HarmonicIndex> basis);

/// Throws PrecisionError if the grid degree is below 2k + band + 2.
PerturbMatrix assemble_matrix_quadrature(const quadrature::SphereGrid& grid, int k, const PerturbationFunction& rho);
PerturbMatrix assemble_matrix_quadrature(const quadrature::SphereGrid& grid, int k, const PerturbationFunction& rho,
                                         std::vector<HarmonicIndex> basis);
/// Builds its own grid of degree max(quad_degree, 2k + band + 2).
PerturbMatrix assemble_matrix_quadrature(int k, const PerturbationFunction& rho, int quad_degree = -1,
                                         std::uint64_t node_cap = quadrature::default_node_cap());

/// M = scalar * I + E with trace(E) = 0 and scalar = -k A_{0,1} / |S^d|^{1/2}.
struct TraceDecomposition {
  double scalar = 0.0;
  CMatrix traceless;
};
TraceDecomposition decompose_trace(const PerturbMatrix& m, double a01);

struct SpectrumReport {
  int d = 3;
  int k = 1;
  std::vector<double> lambda1;     // ascending
  CMatrix eigenvectors;            // column j pairs with lambda1[j]
  double scalar_part = 0.0;
  std::vector<double> e;           // lambda1 - scalar_part
  double trace_residual = 0.0;     // |trace(M) + k A01 N(d,k) / |S^d|^{1/2}|
  std::pair<std::uint64_t, std::uint64_t> index_range;
  std::vector<std::size_t> cluster_sizes;
};

/// Throws ContractViolation when M is not Hermitian within hermitian_tol * max(1, max|M|).
SpectrumReport eigen_spectrum(const PerturbMatrix& m, double a01, double hermitian_tol = 1e-10);

struct NormalizedBranch {
  double lambda0 = 0.0;  // k |B|^{1/(d+1)}
  double lambda1 = 0.0;  // e_j |B|^{1/(d+1)}
};
std::vector<NormalizedBranch> normalized_expansion(const SpectrumReport& report);

/// Inclusive global index range (1 + N_{d,k}, N_{d,k+1}) of the degree-k cluster.
std::pair<std::uint64_t, std::uint64_t> global_index_range(int d, int k);

/// |B| = |S^d| / (d+1)
double ball_volume(int d);

}  // namespace perturbation
}  // namespace steklov
