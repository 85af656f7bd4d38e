#include "steklov/dtn_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "steklov/errors.hpp"
#include "steklov/perturbation.hpp"

namespace steklov::dtn {

BoundaryNormal boundary_normal(const PerturbationFunction& rho, double eps, const AngularPoint& pt) {
  const auto vg = rho.value_and_gradient(pt);
  BoundaryNormal out;
  out.radius = 1.0 + eps * vg.value;
  if (!(out.radius > 0.0)) throw GeometryError("boundary_normal: boundary radius is not positive");
  out.normal.assign(vg.gradient.size() + 1, 0.0);
  double g2 = 0.0;
  for (double g : vg.gradient) g2 += g * g;
  const double scale = 1.0 / std::sqrt(out.radius * out.radius + eps * eps * g2);
  out.normal[0] = out.radius * scale;
  for (std::size_t i = 0; i < vg.gradient.size(); ++i) out.normal[i + 1] = -eps * vg.gradient[i] * scale;
  return out;
}

int default_band_limit(int k, const PerturbationFunction& rho) { return k + rho.band_limit() + 2; }

int default_grid_degree(int L, const PerturbationFunction& rho) { return 2 * L + 3 * rho.band_limit() + 2; }

GalerkinAssembler::GalerkinAssembler(const PerturbationFunction& rho, int L, int grid_degree, std::uint64_t node_cap)
    : rho_(rho),
      L_(L),
      grid_(rho.dim(), grid_degree >= 0 ? grid_degree : default_grid_degree(L, rho), node_cap) {
  if (L < 0) throw DomainError("GalerkinAssembler: band limit must be >= 0");
  const int needed = 2 * L + rho.band_limit() + 2;
  if (grid_.degree() < needed)
    throw PrecisionError("GalerkinAssembler: grid degree " + std::to_string(grid_.degree()) + " below the required " +
                         std::to_string(needed));
  const int d = rho.dim();
  for (int l = 0; l <= L; ++l)
    for (auto& idx : harmonics::enumerate_indices(d, l)) basis_.push_back(idx);

  const std::size_t g = grid_.size();
  const std::size_t n = basis_.size();
  const std::size_t stride = static_cast<std::size_t>(d) + 1;
  rho_val_.resize(g);
  rho_grad_.resize(g * static_cast<std::size_t>(d));
  y_.resize(g * n * stride);
  for (std::size_t node = 0; node < g; ++node) {
    const AngularPoint& pt = grid_.point(node);
    const auto rv = rho.value_and_gradient(pt);
    rho_val_[node] = rv.value;
    std::copy(rv.gradient.begin(), rv.gradient.end(), rho_grad_.begin() + static_cast<long>(node * d));
    for (std::size_t b = 0; b < n; ++b) {
      const auto vg = harmonics::eval_complex_with_gradient(basis_[b], pt);
      Complex* row = &y_[(node * n + b) * stride];
      row[0] = vg.value;
      std::copy(vg.gradient.begin(), vg.gradient.end(), row + 1);
    }
  }
}

GalerkinSystem GalerkinAssembler::assemble(double eps) const {
  const int d = rho_.dim();
  const std::size_t g = grid_.size();
  const std::size_t n = basis_.size();
  const std::size_t stride = static_cast<std::size_t>(d) + 1;

  GalerkinSystem sys;
  sys.d = d;
  sys.L = L_;
  sys.eps = eps;
  sys.basis = basis_;
  sys.a = CMatrix(n, n);
  sys.b = CMatrix(n, n);

  std::vector<Complex> fa(n), fb(n), test(n);
  for (std::size_t node = 0; node < g; ++node) {
    const double radius = 1.0 + eps * rho_val_[node];
    if (!(radius > 0.0)) throw GeometryError("assemble_galerkin: boundary radius is not positive");
    const double* grad_rho = &rho_grad_[node * static_cast<std::size_t>(d)];
    double g2 = 0.0;
    for (int i = 0; i < d; ++i) g2 += grad_rho[i] * grad_rho[i];
    const double inv_norm = 1.0 / std::sqrt(radius * radius + eps * eps * g2);
    const double w = grid_.weight(node);
    for (std::size_t b = 0; b < n; ++b) {
      const Complex* row = &y_[(node * n + b) * stride];
      const int l = basis_[b].l;
      const double rl1 = std::pow(radius, l - 1);
      Complex tangential = 0.0;
      for (int i = 0; i < d; ++i) tangential += row[i + 1] * grad_rho[i];
      fa[b] = rl1 * (static_cast<double>(l) * row[0] * radius - eps * tangential) * inv_norm;
      fb[b] = rl1 * radius * row[0];
      test[b] = w * std::conj(row[0]);
    }
    for (std::size_t t = 0; t < n; ++t) {
      const Complex c = test[t];
      for (std::size_t b = 0; b < n; ++b) {
        sys.a(t, b) += c * fa[b];
        sys.b(t, b) += c * fb[b];
      }
    }
  }
  return sys;
}

GalerkinSystem assemble_galerkin(const PerturbationFunction& rho, double eps, int L, int grid_degree) {
  return GalerkinAssembler(rho, L, grid_degree).assemble(eps);
}

std::vector<Complex> full_spectrum(const GalerkinSystem& system) {
  const double defect = max_abs_diff(system.b, CMatrix::identity(system.b.rows()));
  if (defect > 0.5)
    throw ConditioningError("steklov_spectrum: B deviates from the identity by " + std::to_string(defect));
  return linalg::general_eigenvalues(linalg::lu_solve(system.b, system.a));
}

ClusterEigenvalues steklov_spectrum(const GalerkinSystem& system, int k_target) {
  if (k_target < 0 || k_target > system.L) throw DomainError("steklov_spectrum: k outside the basis band limit");
  const std::size_t want = harmonics::multiplicity(system.d, k_target);
  std::vector<Complex> eig = full_spectrum(system);
  std::sort(eig.begin(), eig.end(), [&](const Complex& x, const Complex& y) {
    return std::abs(x.real() - k_target) < std::abs(y.real() - k_target);
  });
  ClusterEigenvalues out;
  for (std::size_t i = 0; i < want; ++i) {
    out.values.push_back(eig[i].real());
    out.max_imag = std::max(out.max_imag, std::abs(eig[i].imag()));
  }
  std::sort(out.values.begin(), out.values.end());
  out.imag_flagged = out.max_imag > 1e-8;
  return out;
}

SlopeReport slope_study(const PerturbationFunction& rho, int k, const std::vector<double>& eps_list, int L,
                        int grid_degree) {
  if (eps_list.empty()) throw DomainError("slope_study: empty eps list");
  SlopeReport rep;
  rep.d = rho.dim();
  rep.k = k;
  rep.L = L >= 0 ? L : default_band_limit(k, rho);
  rep.eps_list = eps_list;
  const GalerkinAssembler assembler(rho, rep.L, grid_degree);
  rep.grid_degree = assembler.grid_degree();

  const auto m = perturbation::eigen_spectrum(perturbation::assemble_matrix_wigner(k, rho), rho.mean_coefficient());
  rep.m_eigs = m.lambda1;
  double m_scale = 0.0;
  for (double v : rep.m_eigs) m_scale = std::max(m_scale, std::abs(v));
  if (m_scale == 0.0) m_scale = 1.0;

  for (double eps : eps_list) {
    if (!(eps > 0.0)) throw DomainError("slope_study: eps must be positive");
    const auto plus = steklov_spectrum(assembler.assemble(eps), k);
    const auto minus = steklov_spectrum(assembler.assemble(-eps), k);
    rep.max_imag = std::max({rep.max_imag, plus.max_imag, minus.max_imag});
    // Ascending at +eps pairs with descending at -eps.
    const std::size_t n = plus.values.size();
    std::vector<double> s(n);
    for (std::size_t j = 0; j < n; ++j) s[j] = (plus.values[j] - minus.values[n - 1 - j]) / (2.0 * eps);
    std::sort(s.begin(), s.end());
    double err = 0.0;
    for (std::size_t j = 0; j < n; ++j) err = std::max(err, std::abs(s[j] - rep.m_eigs[j]));
    rep.rel_err.push_back(err / m_scale);
    rep.slopes.push_back(std::move(s));
  }
  for (std::size_t i = 0; i + 1 < eps_list.size(); ++i)
    rep.observed_order.push_back(std::log(rep.rel_err[i] / rep.rel_err[i + 1]) /
                                 std::log(eps_list[i] / eps_list[i + 1]));
  rep.max_rel_err = rep.rel_err.back();
  return rep;
}

}  // namespace steklov::dtn
