#include "steklov/perturbation.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "steklov/errors.hpp"
#include "steklov/exact.hpp"
#include "steklov/special_functions.hpp"
#include "steklov/wigner.hpp"

namespace steklov {

const char* route_name(PerturbMatrix::Route r) { return r == PerturbMatrix::Route::Wigner ? "wigner" : "quadrature"; }

TripleTower TripleTower::build(const HarmonicIndex& q, const HarmonicIndex& m, const HarmonicIndex& n) {
  q.validate();
  m.validate();
  n.validate();
  if (q.d != m.d || q.d != n.d) throw DomainError("TripleTower: dimension mismatch");
  if (m.l != n.l) throw DomainError("TripleTower: m and n must share the degree k");
  TripleTower tower;
  tower.d = q.d;
  for (int j = 1; j <= q.d; ++j) tower.t.push_back({q.tuple(j), m.tuple(j), n.tuple(j)});
  return tower;
}

namespace perturbation {

using exact::Rational;
using wigner::ThreeJQuery;

namespace {

int parity_sign(int n) { return (n % 2 == 0) ? 1 : -1; }

std::mutex g_memo_mutex;
std::map<std::array<int, 6>, Complex> g_memo12;
std::map<std::array<int, 7>, double> g_memoj;

// V(beta, alpha, l) with alpha = twice_alpha / 2.
Rational connection_coefficient(int beta, int twice_alpha, int l) {
  Rational v(1 + 2 * beta - 4 * l);
  v *= exact::pochhammer_half_integer(twice_alpha, beta - l);
  v /= exact::pochhammer_half_integer(3, beta - l);
  v *= exact::pochhammer_half_integer(twice_alpha - 1, l);
  v /= Rational(exact::factorial(l));
  return v;
}

// int_{-1}^{1} (1 - z^2)^{gamma - 1} P_tau(z) dz for even tau, gamma = twice_gamma / 2.
exact::PiRational legendre_moment(int twice_gamma, int tau) {
  if (exact::gamma_is_pole(twice_gamma - tau)) return {Rational(0), 0};
  const exact::PiRational g = exact::gamma_half_integer(twice_gamma);
  const exact::PiRational d1 = exact::gamma_half_integer(twice_gamma + tau + 1);
  const exact::PiRational d2 = exact::gamma_half_integer(twice_gamma - tau);
  const exact::PiRational d3 = exact::gamma_half_integer(tau + 2);
  const exact::PiRational d4 = exact::gamma_half_integer(1 - tau);
  return {g.r * g.r / (d1.r * d2.r * d3.r * d4.r),
          2 + 2 * g.sqrt_pi_power - d1.sqrt_pi_power - d2.sqrt_pi_power - d3.sqrt_pi_power - d4.sqrt_pi_power};
}

// mu_j^2 for the factor Y(theta_j; lo, hi), as r * sqrt(pi)^e.
exact::PiRational mu_squared(int j, int lo, int hi) {
  const exact::PiRational g = exact::gamma_half_integer(2 * lo + j - 1);
  exact::BigInt den = exact::factorial(hi - lo);
  den <<= 2 * lo + j;
  Rational r(4 * exact::factorial(hi + lo + j - 2), den);
  r /= Rational(2 * hi + j - 1, 2);
  r /= g.r * g.r;
  return {r, 2 - 2 * g.sqrt_pi_power};
}

Rational squared_3j_000(int a, int b, int c) { return wigner::wigner3j({a, b, c, 0, 0, 0}).squared(); }

double signed_sqrt_times_pi(const Rational& square, int sign, int sqrt_pi_power_of_square) {
  // sign * sqrt(square * sqrt(pi)^e)
  return sign * std::sqrt(exact::to_double(square)) * std::pow(std::numbers::pi, sqrt_pi_power_of_square / 4.0);
}

}  // namespace

Complex closed_factor_12(const TripleTower& tower) {
  const std::array<int, 6> key{tower.entry(1, 1), tower.entry(1, 2), tower.entry(1, 3),
                               tower.entry(2, 1), tower.entry(2, 2), tower.entry(2, 3)};
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = g_memo12.find(key);
    if (it != g_memo12.end()) return it->second;
  }
  const auto [q1, m1, n1, q2, m2, n2] = key;
  Complex result = 0.0;
  const double w0 = wigner::wigner3j_value({q2, m2, n2, 0, 0, 0});
  if (w0 != 0.0) {
    const double c = std::sqrt((2.0 * q2 + 1.0) * (2.0 * m2 + 1.0) * (2.0 * n2 + 1.0) / (4.0 * std::numbers::pi));
    auto Q = [&](int x) { return wigner::wigner3j_value({q2, m2, n2, x, m1, -n1}); };
    Complex qv = 0.0;
    if (q1 == 0) {
      if (m1 == n1) qv = parity_sign(m1) * Q(0);
    } else if (q1 > 0) {
      qv = parity_sign(n1) / std::numbers::sqrt2 * (Q(-q1) + parity_sign(q1) * Q(q1));
    } else {
      qv = Complex(0.0, parity_sign(n1) / std::numbers::sqrt2) * (Q(q1) - parity_sign(q1) * Q(-q1));
    }
    result = c * w0 * qv;
  }
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  g_memo12.emplace(key, result);
  return result;
}

double closed_factor_j(const TripleTower& tower, int j) {
  if (j < 3 || j > tower.d) throw DomainError("closed_factor_j: j must lie in 3..d");
  const std::array<int, 7> key{j,
                               tower.entry(j - 1, 1),
                               tower.entry(j - 1, 2),
                               tower.entry(j - 1, 3),
                               tower.entry(j, 1),
                               tower.entry(j, 2),
                               tower.entry(j, 3)};
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = g_memoj.find(key);
    if (it != g_memoj.end()) return it->second;
  }

  int lo[3], delta[3];
  for (int i = 0; i < 3; ++i) {
    lo[i] = tower.entry(j - 1, i + 1);
    delta[i] = tower.delta(j, i + 1);
    if (lo[i] < 0 || delta[i] < 0) throw ContractViolation("closed_factor_j: tower column violates the chain condition");
  }
  const int twice_gamma = tower.s(j - 1) + j;

  std::map<int, exact::PiRational> moments;
  int pi_power = -1;
  Rational h(0);
  for (int l1 = 0; l1 <= delta[0] / 2; ++l1) {
    for (int l2 = 0; l2 <= delta[1] / 2; ++l2) {
      for (int l3 = 0; l3 <= delta[2] / 2; ++l3) {
        const Rational vprod = connection_coefficient(delta[0], 2 * lo[0] + j - 1, l1) *
                               connection_coefficient(delta[1], 2 * lo[1] + j - 1, l2) *
                               connection_coefficient(delta[2], 2 * lo[2] + j - 1, l3);
        const int b1 = delta[0] - 2 * l1, b2 = delta[1] - 2 * l2, b3 = delta[2] - 2 * l3;
        if (squared_3j_000(b2, b3, b2 + b3 + 2) != 0)
          throw ContractViolation("closed_factor_j: nonzero 3j beyond the tau_1 range");
        Rational inner(0);
        for (int tau1 = std::abs(b2 - b3); tau1 <= b2 + b3; tau1 += 2) {
          const Rational s1 = squared_3j_000(b2, b3, tau1);
          if (s1 == 0) continue;
          if ((b1 + tau1) % 2 != 0) continue;  // tau_2 would be odd
          if (squared_3j_000(b1, tau1, b1 + tau1 + 2) != 0)
            throw ContractViolation("closed_factor_j: nonzero 3j beyond the tau_2 range");
          for (int tau2 = std::abs(b1 - tau1); tau2 <= b1 + tau1; tau2 += 2) {
            const Rational s2 = squared_3j_000(b1, tau1, tau2);
            if (s2 == 0) continue;
            auto it = moments.find(tau2);
            if (it == moments.end()) it = moments.emplace(tau2, legendre_moment(twice_gamma, tau2)).first;
            const exact::PiRational& lm = it->second;
            if (lm.r == 0) continue;
            if (pi_power < 0) pi_power = lm.sqrt_pi_power;
            if (lm.sqrt_pi_power != pi_power)
              throw ContractViolation("closed_factor_j: inconsistent transcendental factor in the tau sum");
            inner += Rational((2 * tau1 + 1) * (2 * tau2 + 1)) * lm.r * s1 * s2;
          }
        }
        h += vprod * inner;
      }
    }
  }

  double result = 0.0;
  if (h != 0) {
    Rational square = h * h;
    int e = 2 * pi_power;
    for (int i = 0; i < 3; ++i) {
      const exact::PiRational mu2 = mu_squared(j, lo[i], lo[i] + delta[i]);
      square /= mu2.r;
      e -= mu2.sqrt_pi_power;
    }
    result = signed_sqrt_times_pi(square, h > 0 ? 1 : -1, e);
  }
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  g_memoj.emplace(key, result);
  return result;
}

Complex triple_integral_closed(const TripleTower& tower) {
  Complex w = closed_factor_12(tower);
  for (int j = 3; j <= tower.d && w != Complex(0.0); ++j) w *= closed_factor_j(tower, j);
  return w;
}

Complex triple_integral_quadrature(const quadrature::SphereGrid& grid, const HarmonicIndex& q,
                                   const HarmonicIndex& m, const HarmonicIndex& n) {
  if (grid.dim() != q.d) throw DomainError("triple_integral_quadrature: grid dimension mismatch");
  if (grid.degree() < 2 * m.l + q.l)
    throw PrecisionError("triple_integral_quadrature: grid degree " + std::to_string(grid.degree()) +
                         " below the integrand degree " + std::to_string(2 * m.l + q.l));
  return quadrature::integrate_surface_complex(grid, [&](const AngularPoint& pt) {
    return harmonics::eval_real(q, pt) * harmonics::eval_complex(m, pt) * std::conj(harmonics::eval_complex(n, pt));
  });
}

int assembly_degree(int k, const PerturbationFunction& rho) { return 2 * k + rho.band_limit() + 2; }

PerturbMatrix assemble_matrix_wigner(int k, const PerturbationFunction& rho) {
  return assemble_matrix_wigner(k, rho, harmonics::enumerate_indices(rho.dim(), k));
}

PerturbMatrix assemble_matrix_wigner(int k, const PerturbationFunction& rho, std::vector<HarmonicIndex> basis) {
  const int d = rho.dim();
  if (k < 1) throw DomainError("assemble_matrix_wigner: k must be >= 1");
  PerturbMatrix out;
  out.d = d;
  out.k = k;
  out.route = PerturbMatrix::Route::Wigner;
  out.basis = std::move(basis);
  const std::size_t n = out.basis.size();
  out.m = CMatrix(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      Complex entry = 0.0;
      for (const auto& term : rho.terms()) {
        const int p = term.index.l;
        const Complex w = triple_integral_closed(TripleTower::build(term.index, out.basis[a], out.basis[b]));
        if (w == Complex(0.0)) continue;
        entry += -0.5 * term.coefficient * (p * (p + d - 1.0) + 2.0 * k) * w;
      }
      out.m(a, b) = entry;
      out.m(b, a) = std::conj(entry);
    }
    out.m(a, a) = out.m(a, a).real();
  }
  return out;
}

PerturbMatrix assemble_matrix_quadrature(const quadrature::SphereGrid& grid, int k, const PerturbationFunction& rho) {
  return assemble_matrix_quadrature(grid, k, rho, harmonics::enumerate_indices(rho.dim(), k));
}

PerturbMatrix assemble_matrix_quadrature(const quadrature::SphereGrid& grid, int k, const PerturbationFunction& rho,
                                         std::vector<HarmonicIndex> basis) {
  const int d = rho.dim();
  if (k < 1) throw DomainError("assemble_matrix_quadrature: k must be >= 1");
  if (grid.dim() != d) throw DomainError("assemble_matrix_quadrature: grid dimension mismatch");
  if (grid.degree() < assembly_degree(k, rho))
    throw PrecisionError("assemble_matrix_quadrature: grid degree " + std::to_string(grid.degree()) +
                         " below the required " + std::to_string(assembly_degree(k, rho)));
  PerturbMatrix out;
  out.d = d;
  out.k = k;
  out.route = PerturbMatrix::Route::Quadrature;
  out.basis = std::move(basis);
  const std::size_t n = out.basis.size();
  const std::size_t g = grid.size();
  const std::size_t stride = static_cast<std::size_t>(d) + 1;

  // Per node: weight * rho, then value and gradient of every basis harmonic.
  std::vector<double> wrho(g);
  std::vector<Complex> table(g * n * stride);
  for (std::size_t node = 0; node < g; ++node) {
    const AngularPoint& pt = grid.point(node);
    wrho[node] = grid.weight(node) * rho.value(pt);
    for (std::size_t a = 0; a < n; ++a) {
      const auto vg = harmonics::eval_complex_with_gradient(out.basis[a], pt);
      Complex* row = &table[(node * n + a) * stride];
      row[0] = vg.value;
      for (int i = 0; i < d; ++i) row[i + 1] = vg.gradient[static_cast<std::size_t>(i)];
    }
  }

  const double lap = -static_cast<double>(k) * (k + d);
  out.m = CMatrix(n, n);
  std::vector<double> re(g), im(g);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      for (std::size_t node = 0; node < g; ++node) {
        const Complex* ya = &table[(node * n + a) * stride];
        const Complex* yb = &table[(node * n + b) * stride];
        Complex v = lap * ya[0] * std::conj(yb[0]);
        for (std::size_t i = 1; i < stride; ++i) v += ya[i] * std::conj(yb[i]);
        v *= wrho[node];
        re[node] = v.real();
        im[node] = v.imag();
      }
      const Complex entry(quadrature::pairwise_sum(re), quadrature::pairwise_sum(im));
      out.m(a, b) = entry;
      out.m(b, a) = std::conj(entry);
    }
  }
  return out;
}

PerturbMatrix assemble_matrix_quadrature(int k, const PerturbationFunction& rho, int quad_degree,
                                         std::uint64_t node_cap) {
  const int degree = quad_degree >= 0 ? quad_degree : assembly_degree(k, rho);
  if (degree < assembly_degree(k, rho))
    throw PrecisionError("assemble_matrix_quadrature: quadrature degree " + std::to_string(degree) +
                         " below the required " + std::to_string(assembly_degree(k, rho)));
  const quadrature::SphereGrid grid(rho.dim(), degree, node_cap);
  return assemble_matrix_quadrature(grid, k, rho);
}

TraceDecomposition decompose_trace(const PerturbMatrix& m, double a01) {
  TraceDecomposition out;
  out.scalar = -m.k * a01 / std::sqrt(special::sphere_area(m.d));
  out.traceless = m.m;
  for (std::size_t i = 0; i < out.traceless.rows(); ++i) out.traceless(i, i) -= out.scalar;
  return out;
}

SpectrumReport eigen_spectrum(const PerturbMatrix& m, double a01, double hermitian_tol) {
  const double defect = hermitian_defect(m.m);
  if (defect > hermitian_tol * std::max(1.0, m.m.max_abs()))
    throw ContractViolation("eigen_spectrum: matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  SpectrumReport r;
  r.d = m.d;
  r.k = m.k;
  const auto eig = linalg::hermitian_eigen(m.m);
  r.lambda1 = eig.values;
  r.eigenvectors = eig.vectors;
  r.scalar_part = -m.k * a01 / std::sqrt(special::sphere_area(m.d));
  for (double v : r.lambda1) r.e.push_back(v - r.scalar_part);
  const double expected = r.scalar_part * static_cast<double>(m.m.rows());
  r.trace_residual = std::abs(m.m.trace().real() - expected);
  r.index_range = global_index_range(m.d, m.k);

  double scale = 0.0;
  for (double v : r.lambda1) scale = std::max(scale, std::abs(v));
  std::size_t run = 0;
  for (std::size_t i = 0; i < r.lambda1.size(); ++i) {
    if (i > 0 && r.lambda1[i] - r.lambda1[i - 1] > 1e-9 * scale) {
      r.cluster_sizes.push_back(run);
      run = 0;
    }
    ++run;
  }
  if (run > 0) r.cluster_sizes.push_back(run);
  return r;
}

double ball_volume(int d) { return special::sphere_area(d) / (d + 1.0); }

std::vector<NormalizedBranch> normalized_expansion(const SpectrumReport& report) {
  const double scale = std::pow(ball_volume(report.d), 1.0 / (report.d + 1.0));
  std::vector<NormalizedBranch> out;
  for (double e : report.e) out.push_back({report.k * scale, e * scale});
  return out;
}

std::pair<std::uint64_t, std::uint64_t> global_index_range(int d, int k) {
  if (k < 1) throw DomainError("global_index_range: k must be >= 1");
  std::uint64_t below = 0;
  for (int l = 1; l < k; ++l) below += harmonics::multiplicity(d, l);
  return {below + 1, below + harmonics::multiplicity(d, k)};
}

}  // namespace perturbation
}  // namespace steklov
