#include "steklov/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <tuple>

#include "steklov/errors.hpp"
#include "steklov/special_functions.hpp"

namespace steklov {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleThreshold = 1e-12;

std::uint64_t binomial(int n, int r) {
  if (r < 0 || n < r) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= r; ++i) acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(acc);
}

}  // namespace

bool HarmonicIndex::is_valid() const {
  if (d < 3 || l < 0 || static_cast<int>(m.size()) != d - 1) return false;
  if (std::abs(m[0]) > tuple(2)) return false;
  for (int j = 2; j < d; ++j)
    if (tuple(j) < 0 || tuple(j) > tuple(j + 1)) return false;
  return true;
}

void HarmonicIndex::validate() const {
  if (d < 3) throw DomainError("HarmonicIndex: dimension must be >= 3");
  if (l < 0) throw DomainError("HarmonicIndex: negative degree");
  if (static_cast<int>(m.size()) != d - 1)
    throw DomainError("HarmonicIndex: tuple must have d-1 = " + std::to_string(d - 1) + " entries");
  if (!is_valid()) throw DomainError("HarmonicIndex: tuple violates 0 <= |m_1| <= m_2 <= ... <= m_{d-1} <= l");
}

HarmonicIndex HarmonicIndex::trivial(int d, int l) {
  return HarmonicIndex{d, l, std::vector<int>(static_cast<std::size_t>(d - 1), 0)};
}

AngularPoint::AngularPoint(std::vector<double> angles) : theta_(std::move(angles)) {
  const int d = dim();
  if (d < 1) throw DomainError("AngularPoint: empty angle list");
  if (!(theta_[0] >= 0.0 && theta_[0] < 2.0 * kPi)) throw DomainError("AngularPoint: theta_1 outside [0, 2pi)");
  for (int j = 2; j <= d; ++j)
    if (!(theta(j) >= 0.0 && theta(j) <= kPi)) throw DomainError("AngularPoint: inclination outside [0, pi]");
  eta_.assign(static_cast<std::size_t>(d), 1.0);
  for (int j = d - 1; j >= 1; --j) eta_[static_cast<std::size_t>(j - 1)] = eta(j + 1) * std::sin(theta(j + 1));
}

AngularPoint AngularPoint::from_cartesian(std::span<const double> x) {
  const int d = static_cast<int>(x.size()) - 1;
  if (d < 1) throw DomainError("AngularPoint::from_cartesian: need at least two coordinates");
  std::vector<double> angles(static_cast<std::size_t>(d));
  double partial = x[0] * x[0];
  for (int j = 2; j <= d; ++j) {
    partial += x[static_cast<std::size_t>(j - 1)] * x[static_cast<std::size_t>(j - 1)];
    angles[static_cast<std::size_t>(j - 1)] = std::atan2(std::sqrt(partial), x[static_cast<std::size_t>(j)]);
  }
  double phi = std::atan2(x[1], x[0]);
  if (phi < 0.0) phi += 2.0 * kPi;
  if (phi >= 2.0 * kPi) phi = 0.0;
  angles[0] = phi;
  return AngularPoint(std::move(angles));
}

std::vector<double> AngularPoint::to_cartesian() const {
  const int d = dim();
  std::vector<double> x(static_cast<std::size_t>(d + 1));
  x[0] = eta(1) * std::cos(theta(1));
  x[1] = eta(1) * std::sin(theta(1));
  for (int j = 2; j <= d; ++j) x[static_cast<std::size_t>(j)] = eta(j) * std::cos(theta(j));
  return x;
}

namespace harmonics {

std::uint64_t multiplicity(int d, int l) {
  if (d < 1) throw DomainError("multiplicity: dimension must be >= 1");
  if (l < 0) throw DomainError("multiplicity: negative degree");
  if (l == 0) return 1;
  return binomial(d + l, d) - binomial(d + l - 2, d);
}

std::vector<HarmonicIndex> enumerate_indices(int d, int l) {
  if (d < 3) throw DomainError("enumerate_indices: dimension must be >= 3");
  if (l < 0) throw DomainError("enumerate_indices: negative degree");
  std::vector<HarmonicIndex> out;
  std::vector<int> m(static_cast<std::size_t>(d - 1), 0);

  // Fill m_{j} for j = d-1 down to 2, then m_1 in [-m_2, m_2].
  auto fill = [&](auto&& self, int j, int upper) -> void {
    if (j == 1) {
      for (int m1 = -upper; m1 <= upper; ++m1) {
        m[0] = m1;
        out.push_back(HarmonicIndex{d, l, m});
      }
      return;
    }
    for (int v = 0; v <= upper; ++v) {
      m[static_cast<std::size_t>(j - 1)] = v;
      self(self, j - 1, v);
    }
  };
  fill(fill, d - 1, l);

  auto key = [](const HarmonicIndex& h) {
    // |m_1| first, +m_1 before -m_1, then m_2, ..., m_{d-1} ascending
    std::vector<int> k{std::abs(h.m[0]), h.m[0] < 0 ? 1 : 0};
    for (int j = 2; j <= h.d - 1; ++j) k.push_back(h.tuple(j));
    return k;
  };
  std::sort(out.begin(), out.end(), [&](const HarmonicIndex& a, const HarmonicIndex& b) { return key(a) < key(b); });
  return out;
}

double mu_normalization(int j, int m_lo, int m_hi) {
  if (j < 3) throw DomainError("mu_normalization: factor index must be >= 3");
  if (m_lo < 0 || m_hi < m_lo) throw DomainError("mu_normalization: need 0 <= m_lo <= m_hi");
  const double nu = 0.5 * (j - 1);
  const double log_mu2 = std::log(4.0 * kPi) + std::lgamma(m_hi + m_lo + 2.0 * nu) -
                         (2.0 * m_lo + j) * std::log(2.0) - special::log_factorial(m_hi - m_lo) -
                         std::log(m_hi + nu) - 2.0 * std::lgamma(m_lo + nu);
  return std::exp(0.5 * log_mu2);
}

double addition_constant(int d, int l) {
  const double n = static_cast<double>(multiplicity(d, l));
  return n / (special::sphere_area(d) * special::gegenbauer_at_one(l, 0.5 * (d - 1)));
}

namespace {

// Per-axis factors of Y_l^m and their theta derivatives. Index 0 is the
// azimuthal factor e^{i m_1 phi}; index j-1 (j >= 2) is the real theta_j factor.
struct Factors {
  Complex azimuth;
  Complex azimuth_d;
  std::vector<double> value;  // j = 2..d stored at j-1
  std::vector<double> deriv;
};

double legendre_norm(int n, int m) {
  // sqrt((2n+1)/(4 pi) (n-m)!/(n+m)!)
  return std::sqrt((2.0 * n + 1.0) / (4.0 * kPi) *
                   std::exp(special::log_factorial(n - m) - special::log_factorial(n + m)));
}

Factors compute_factors(const HarmonicIndex& idx, const AngularPoint& pt, bool with_derivs) {
  const int d = idx.d;
  Factors f;
  f.value.assign(static_cast<std::size_t>(d), 0.0);
  f.deriv.assign(static_cast<std::size_t>(d), 0.0);

  const int m1 = idx.m[0];
  const int a = std::abs(m1);
  const double phi = pt.theta(1);
  f.azimuth = std::polar(1.0, m1 * phi);
  f.azimuth_d = Complex(0.0, m1) * f.azimuth;

  // Negative orders: N_{n,-a} P_n^{-a} = (-1)^a N_{n,a} P_n^a.
  const int m2 = idx.tuple(2);
  const double sign = (m1 < 0 && (a % 2 == 1)) ? -1.0 : 1.0;
  const double norm2 = sign * legendre_norm(m2, a);
  const double th2 = pt.theta(2);
  f.value[1] = norm2 * special::assoc_legendre(m2, a, std::cos(th2));
  if (with_derivs) f.deriv[1] = norm2 * special::assoc_legendre_theta_derivative(m2, a, th2);

  for (int j = 3; j <= d; ++j) {
    const int lo = idx.tuple(j - 1);
    const int hi = idx.tuple(j);
    const double lambda = lo + 0.5 * (j - 1);
    const double inv_mu = 1.0 / mu_normalization(j, lo, hi);
    const double th = pt.theta(j);
    const double s = std::sin(th);
    const double c = std::cos(th);
    const double gg = special::gegenbauer(hi - lo, lambda, c);
    const double s_lo = std::pow(s, lo);
    f.value[static_cast<std::size_t>(j - 1)] = inv_mu * s_lo * gg;
    if (with_derivs) {
      double dv = -s_lo * s * special::gegenbauer_derivative(hi - lo, lambda, c);
      if (lo > 0) dv += lo * std::pow(s, lo - 1) * c * gg;
      f.deriv[static_cast<std::size_t>(j - 1)] = inv_mu * dv;
    }
  }
  return f;
}

void check_poles(const AngularPoint& pt) {
  for (int i = 2; i <= pt.dim(); ++i)
    if (std::abs(std::sin(pt.theta(i))) < kPoleThreshold)
      throw PoleError("harmonic gradient requested at a coordinate pole (theta_" + std::to_string(i) + ")");
}

void check_point(const HarmonicIndex& idx, const AngularPoint& pt) {
  idx.validate();
  if (pt.dim() != idx.d) throw DomainError("harmonic and point dimensions differ");
}

// Complex harmonic with the same tuple but m_1 replaced.
HarmonicIndex with_m1(const HarmonicIndex& idx, int m1) {
  HarmonicIndex out = idx;
  out.m[0] = m1;
  return out;
}

// Real harmonic as the combination c_plus * Y^{(+a)} + c_minus * Y^{(-a)}.
struct RealCombination {
  int a = 0;
  Complex c_plus;
  Complex c_minus;
};

RealCombination real_combination(int m1) {
  const int a = std::abs(m1);
  const double parity = (a % 2 == 0) ? 1.0 : -1.0;
  const double r = 1.0 / std::numbers::sqrt2;
  if (m1 == 0) return {0, Complex(1.0), Complex(0.0)};
  if (m1 > 0) return {a, Complex(parity * r), Complex(r)};
  // m_1 < 0: (i/sqrt2)[Y^{m_1} - (-1)^{m_1} Y^{-m_1}]
  return {a, Complex(0.0, -parity * r), Complex(0.0, r)};
}

}  // namespace

Complex eval_complex(const HarmonicIndex& idx, const AngularPoint& pt) {
  check_point(idx, pt);
  const Factors f = compute_factors(idx, pt, false);
  double real_part = 1.0;
  for (int j = 2; j <= idx.d; ++j) real_part *= f.value[static_cast<std::size_t>(j - 1)];
  return f.azimuth * real_part;
}

ValueAndGradient eval_complex_with_gradient(const HarmonicIndex& idx, const AngularPoint& pt) {
  check_point(idx, pt);
  check_poles(pt);
  const int d = idx.d;
  const Factors f = compute_factors(idx, pt, true);

  // prefix[j] = prod_{i=2}^{j-1} value_i, suffix[j] = prod_{i=j+1}^{d} value_i
  std::vector<double> prefix(static_cast<std::size_t>(d + 2), 1.0);
  std::vector<double> suffix(static_cast<std::size_t>(d + 2), 1.0);
  for (int j = 2; j <= d; ++j) prefix[static_cast<std::size_t>(j + 1)] = prefix[static_cast<std::size_t>(j)] * f.value[static_cast<std::size_t>(j - 1)];
  for (int j = d; j >= 2; --j) suffix[static_cast<std::size_t>(j - 1)] = suffix[static_cast<std::size_t>(j)] * f.value[static_cast<std::size_t>(j - 1)];

  ValueAndGradient out;
  out.value = f.azimuth * prefix[static_cast<std::size_t>(d + 1)];
  out.gradient.resize(static_cast<std::size_t>(d));
  out.gradient[0] = f.azimuth_d * prefix[static_cast<std::size_t>(d + 1)] / pt.eta(1);
  for (int j = 2; j <= d; ++j) {
    const double others = prefix[static_cast<std::size_t>(j)] * suffix[static_cast<std::size_t>(j)];
    out.gradient[static_cast<std::size_t>(j - 1)] = f.azimuth * (others * f.deriv[static_cast<std::size_t>(j - 1)] / pt.eta(j));
  }
  return out;
}

std::vector<Complex> eval_complex_gradient(const HarmonicIndex& idx, const AngularPoint& pt) {
  return eval_complex_with_gradient(idx, pt).gradient;
}

double eval_real(const HarmonicIndex& idx, const AngularPoint& pt) {
  check_point(idx, pt);
  const RealCombination rc = real_combination(idx.m[0]);
  Complex v = rc.c_plus * eval_complex(with_m1(idx, rc.a), pt);
  if (rc.a != 0) v += rc.c_minus * eval_complex(with_m1(idx, -rc.a), pt);
  return v.real();
}

RealValueAndGradient eval_real_with_gradient(const HarmonicIndex& idx, const AngularPoint& pt) {
  const RealCombination rc = real_combination(idx.m[0]);
  ValueAndGradient plus = eval_complex_with_gradient(with_m1(idx, rc.a), pt);
  RealValueAndGradient out;
  out.gradient.assign(static_cast<std::size_t>(idx.d), 0.0);
  Complex v = rc.c_plus * plus.value;
  std::vector<Complex> g(plus.gradient.size());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = rc.c_plus * plus.gradient[i];
  if (rc.a != 0) {
    ValueAndGradient minus = eval_complex_with_gradient(with_m1(idx, -rc.a), pt);
    v += rc.c_minus * minus.value;
    for (std::size_t i = 0; i < g.size(); ++i) g[i] += rc.c_minus * minus.gradient[i];
  }
  out.value = v.real();
  for (std::size_t i = 0; i < g.size(); ++i) out.gradient[i] = g[i].real();
  return out;
}

std::vector<double> eval_real_gradient(const HarmonicIndex& idx, const AngularPoint& pt) {
  return eval_real_with_gradient(idx, pt).gradient;
}

}  // namespace harmonics
}  // namespace steklov
