#include "steklov/verify.hpp"

#include <algorithm>
#include <cmath>

#include "steklov/dtn_oracle.hpp"
#include "steklov/errors.hpp"
#include "steklov/exact.hpp"
#include "steklov/harmonics.hpp"
#include "steklov/perturbation.hpp"
#include "steklov/special_functions.hpp"
#include "steklov/wigner.hpp"

namespace steklov::verify {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"trace", "addition", "wigner", "parity", "cross-route", "oracle"};
  return names;
}

PerturbationFunction random_perturbation(int d, const std::vector<int>& degrees, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  PerturbationFunction rho(d);
  for (int p : degrees)
    for (const auto& q : harmonics::enumerate_indices(d, p)) rho.add_term(q, coef(rng));
  return rho;
}

PerturbationFunction random_perturbation(int d, int max_degree, std::mt19937_64& rng) {
  std::vector<int> degrees;
  for (int p = 0; p <= max_degree; ++p) degrees.push_back(p);
  return random_perturbation(d, degrees, rng);
}

AngularPoint random_point(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<double> x(static_cast<std::size_t>(d) + 1);
  for (auto& v : x) v = g(rng);
  return AngularPoint::from_cartesian(x);
}

PerturbationFunction ball_breaking_perturbation(int d) {
  HarmonicIndex q{d, 2, std::vector<int>(static_cast<std::size_t>(d - 1), 2)};
  q.m[0] = 0;
  return PerturbationFunction::single(q);
}

namespace {

CheckResult check(std::string name, double residual, double tol) {
  return {std::move(name), residual <= tol, residual, tol};
}

std::string tag(int d, int k) { return "d=" + std::to_string(d) + " k=" + std::to_string(k); }

std::vector<CheckResult> suite_trace(const Options& opt) {
  const double tol = opt.tol >= 0 ? opt.tol : 1e-10;
  std::mt19937_64 rng(opt.seed);
  std::vector<CheckResult> out;
  const int samples = opt.rho ? 1 : 5;
  for (int s = 0; s < samples; ++s) {
    const PerturbationFunction rho = opt.rho ? *opt.rho : random_perturbation(opt.d, 4, rng);
    for (int k = 1; k <= opt.kmax; ++k) {
      const auto m = perturbation::assemble_matrix_wigner(k, rho);
      const double expected = -k * rho.mean_coefficient() * static_cast<double>(harmonics::multiplicity(opt.d, k)) /
                              std::sqrt(special::sphere_area(opt.d));
      out.push_back(check("trace " + tag(opt.d, k) + " sample=" + std::to_string(s),
                          std::abs(m.m.trace().real() - expected) + std::abs(m.m.trace().imag()), tol));
    }
  }
  return out;
}

std::vector<CheckResult> suite_addition(const Options& opt) {
  const double tol = opt.tol >= 0 ? opt.tol : 1e-9;
  const int d = opt.d;
  std::mt19937_64 rng(opt.seed);
  std::vector<CheckResult> out;
  for (int l = 0; l <= opt.kmax; ++l) {
    const auto basis = harmonics::enumerate_indices(d, l);
    const double kc = harmonics::addition_constant(d, l);
    double worst_f = 0.0, worst_g = 0.0;
    for (int s = 0; s < 20; ++s) {
      const AngularPoint a = random_point(d, rng);
      const AngularPoint b = random_point(d, rng);
      const auto xa = a.to_cartesian();
      const auto xb = b.to_cartesian();
      double dot = 0.0;
      for (std::size_t i = 0; i < xa.size(); ++i) dot += xa[i] * xb[i];
      dot = std::clamp(dot, -1.0, 1.0);
      Complex sum = 0.0;
      std::vector<double> grad_sum(static_cast<std::size_t>(d), 0.0);
      for (const auto& idx : basis) {
        sum += harmonics::eval_complex(idx, a) * std::conj(harmonics::eval_complex(idx, b));
        const auto g = harmonics::eval_complex_gradient(idx, a);
        for (int j = 0; j < d; ++j) grad_sum[j] += std::norm(g[j]);
      }
      worst_f = std::max(worst_f, std::abs(sum - kc * special::gegenbauer(l, 0.5 * (d - 1), dot)));
      const double g_expected = l == 0 ? 0.0 : (d - 1) * kc * special::gegenbauer_at_one(l - 1, 0.5 * (d + 1));
      for (double v : grad_sum) worst_g = std::max(worst_g, std::abs(v - g_expected));
    }
    out.push_back(check("addition d=" + std::to_string(d) + " l=" + std::to_string(l), worst_f, tol));
    out.push_back(check("gradient addition d=" + std::to_string(d) + " l=" + std::to_string(l), worst_g, tol));
  }
  return out;
}

std::vector<CheckResult> suite_wigner(const Options&) {
  using exact::Rational;
  std::vector<CheckResult> out;
  int bad_orth = 0;
  for (int j1 = 0; j1 <= 8; ++j1)
    for (int j2 = 0; j2 <= 8; ++j2)
      for (int j3 = std::abs(j1 - j2); j3 <= std::min(8, j1 + j2); ++j3)
        for (int m3 = -j3; m3 <= j3; ++m3) {
          Rational sum(0);
          for (int m1 = -j1; m1 <= j1; ++m1) sum += wigner::wigner3j({j1, j2, j3, m1, -m1 - m3, m3}).squared();
          if (sum * (2 * j3 + 1) != 1) ++bad_orth;
        }
  out.push_back(check("3j orthogonality sums exactly 1, j<=8", bad_orth, 0));

  const auto unit = wigner::wigner3j({0, 0, 0, 0, 0, 0});
  out.push_back(check("(0 0 0; 0 0 0) = 1", (unit.sign == 1 && unit.radicand == 1) ? 0 : 1, 0));

  int parity_nonzero = 0;
  int symmetry_bad = 0;
  for (int j1 = 0; j1 <= 8; ++j1)
    for (int j2 = 0; j2 <= 8; ++j2)
      for (int j3 = 0; j3 <= 8; ++j3) {
        if ((j1 + j2 + j3) % 2 != 0 && wigner::wigner3j({j1, j2, j3, 0, 0, 0}).sign != 0) ++parity_nonzero;
        for (int m1 = -j1; m1 <= j1; ++m1)
          for (int m2 = -j2; m2 <= j2; ++m2) {
            const int m3 = -m1 - m2;
            if (std::abs(m3) > j3) continue;
            const auto v = wigner::wigner3j({j1, j2, j3, m1, m2, m3});
            const int phase = (j1 + j2 + j3) % 2 == 0 ? 1 : -1;
            const auto cyc = wigner::wigner3j({j2, j3, j1, m2, m3, m1});
            const auto odd = wigner::wigner3j({j2, j1, j3, m2, m1, m3});
            const auto flip = wigner::wigner3j({j1, j2, j3, -m1, -m2, -m3});
            if (!(cyc == v)) ++symmetry_bad;
            if (odd.sign != phase * v.sign || odd.radicand != v.radicand) ++symmetry_bad;
            if (flip.sign != phase * v.sign || flip.radicand != v.radicand) ++symmetry_bad;
          }
      }
  out.push_back(check("parity-violating (j1 j2 j3; 0 0 0) exactly zero", parity_nonzero, 0));
  out.push_back(check("column permutation and sign-flip symmetries exact", symmetry_bad, 0));
  return out;
}

std::vector<CheckResult> suite_parity(const Options& opt) {
  const double tol = opt.tol >= 0 ? opt.tol : 1e-11;
  std::mt19937_64 rng(opt.seed);
  const PerturbationFunction rho = random_perturbation(opt.d, std::vector<int>{1, 3}, rng);
  std::vector<CheckResult> out;
  for (int k = 1; k <= opt.kmax; ++k) {
    const auto mw = perturbation::assemble_matrix_wigner(k, rho);
    out.push_back(check("odd-p wigner exact zero " + tag(opt.d, k), mw.m.max_abs(), 0.0));
    const auto mq = perturbation::assemble_matrix_quadrature(k, rho);
    out.push_back(check("odd-p quadrature " + tag(opt.d, k), mq.m.max_abs(), tol));
  }
  return out;
}

std::vector<CheckResult> suite_cross_route(const Options& opt) {
  const double tol = opt.tol >= 0 ? opt.tol : 1e-9;
  std::mt19937_64 rng(opt.seed);
  const PerturbationFunction rho = opt.rho ? *opt.rho : random_perturbation(opt.d, 4, rng);
  std::vector<CheckResult> out;
  for (int k = 1; k <= opt.kmax; ++k) {
    const auto mw = perturbation::assemble_matrix_wigner(k, rho);
    const auto mq = perturbation::assemble_matrix_quadrature(k, rho);
    out.push_back(check("cross-route " + tag(opt.d, k), max_abs_diff(mw.m, mq.m), tol));
  }
  return out;
}

std::vector<CheckResult> suite_oracle(const Options& opt) {
  const double tol = opt.tol >= 0 ? opt.tol : 1e-3;
  const PerturbationFunction rho = opt.rho ? *opt.rho : ball_breaking_perturbation(opt.d);
  std::vector<CheckResult> out;
  for (int k = 1; k <= opt.kmax; ++k) {
    const auto rep = dtn::slope_study(rho, k, {4e-3, 2e-3, 1e-3});
    out.push_back(check("oracle slope rel err " + tag(opt.d, k), rep.max_rel_err, tol));
    const double order = *std::min_element(rep.observed_order.begin(), rep.observed_order.end());
    out.push_back({"oracle observed order " + tag(opt.d, k), order >= 1.8, order, 1.8});
  }
  return out;
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, const Options& opt) {
  if (opt.d < 3) throw DomainError("verify: dimension must be >= 3");
  if (opt.kmax < 1 && suite != "wigner" && suite != "addition") throw DomainError("verify: kmax must be >= 1");
  if (opt.rho && opt.rho->dim() != opt.d) throw DomainError("verify: perturbation dimension differs from --dim");
  if (suite == "trace") return suite_trace(opt);
  if (suite == "addition") return suite_addition(opt);
  if (suite == "wigner") return suite_wigner(opt);
  if (suite == "parity") return suite_parity(opt);
  if (suite == "cross-route") return suite_cross_route(opt);
  if (suite == "oracle") return suite_oracle(opt);
  throw DomainError("verify: unknown suite \"" + suite + "\"");
}

}  // namespace steklov::verify
