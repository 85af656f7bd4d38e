#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace steklov {

using Complex = std::complex<double>;

/// One basis harmonic on S^d: degree l and the chain tuple (m_1, ..., m_{d-1})
/// with 0 <= |m_1| <= m_2 <= ... <= m_{d-1} <= l.
struct HarmonicIndex {
  int d = 3;
  int l = 0;
  std::vector<int> m;

  /// Tuple entry m_j for j in 1..d, with m_d = l.
  int tuple(int j) const { return j == d ? l : m[static_cast<std::size_t>(j - 1)]; }

  bool is_valid() const;
  /// Throws DomainError naming the violated condition.
  void validate() const;

  static HarmonicIndex trivial(int d, int l = 0);

  friend bool operator==(const HarmonicIndex&, const HarmonicIndex&) = default;
};

/// A point of S^d in hyperspherical angles: theta_1 = phi in [0, 2pi),
/// theta_2..theta_d in [0, pi]. Caches eta_j = prod_{i>j} sin(theta_i).
class AngularPoint {
 public:
  /// angles[0] = theta_1, ..., angles[d-1] = theta_d.
  explicit AngularPoint(std::vector<double> angles);

  /// Angles of the unit vector x / |x|, x in R^{d+1}.
  static AngularPoint from_cartesian(std::span<const double> x);

  int dim() const { return static_cast<int>(theta_.size()); }
  /// 1-based angle theta_j.
  double theta(int j) const { return theta_[static_cast<std::size_t>(j - 1)]; }
  /// 1-based scale ratio eta_j (eta_d = 1).
  double eta(int j) const { return eta_[static_cast<std::size_t>(j - 1)]; }
  const std::vector<double>& angles() const { return theta_; }

  /// Unit vector (x_1, ..., x_{d+1}).
  std::vector<double> to_cartesian() const;

 private:
  std::vector<double> theta_;
  std::vector<double> eta_;
};

namespace harmonics {

/// Dimension N(d, l) of the degree-l harmonic space on S^d (exact).
std::uint64_t multiplicity(int d, int l);

/// All chain tuples of degree l, lexicographic in (|m_1|, m_2, ..., m_{d-1})
/// with +m_1 before -m_1; the zero tuple comes first.
std::vector<HarmonicIndex> enumerate_indices(int d, int l);

/// mu_j for the factor Y(theta_j; m_lo, m_hi), 3 <= j, 0 <= m_lo <= m_hi.
double mu_normalization(int j, int m_lo, int m_hi);

/// K(d, l) = N(d, l) / (|S^d| C_l^{((d-1)/2)}(1)).
double addition_constant(int d, int l);

/// Complex hyperspherical harmonic Y_l^m(pt).
Complex eval_complex(const HarmonicIndex& idx, const AngularPoint& pt);

/// Real hyperspherical harmonic Y_{l,m}(pt).
double eval_real(const HarmonicIndex& idx, const AngularPoint& pt);

/// Surface gradient components (1/eta_j) d_j Y_l^m, j = 1..d.
/// Throws PoleError when some eta_j vanishes at pt.
std::vector<Complex> eval_complex_gradient(const HarmonicIndex& idx, const AngularPoint& pt);

/// Surface gradient of the real harmonic Y_{l,m}.
std::vector<double> eval_real_gradient(const HarmonicIndex& idx, const AngularPoint& pt);

/// Value and gradient in one pass (no pole check on the value).
struct ValueAndGradient {
  Complex value;
  std::vector<Complex> gradient;
};
ValueAndGradient eval_complex_with_gradient(const HarmonicIndex& idx, const AngularPoint& pt);

struct RealValueAndGradient {
  double value = 0.0;
  std::vector<double> gradient;
};
RealValueAndGradient eval_real_with_gradient(const HarmonicIndex& idx, const AngularPoint& pt);

}  // namespace harmonics
}  // namespace steklov
