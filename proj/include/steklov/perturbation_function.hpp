#pragma once

#include <vector>

#include "steklov/harmonics.hpp"

namespace steklov {

/// Band-limited boundary perturbation rho = sum A_{p,q} Y_{p,q} expanded in
/// real hyperspherical harmonics. The domain is r <= 1 + eps * rho.
class PerturbationFunction {
 public:
  struct Term {
    HarmonicIndex index;  // index.l is the degree p, index.m the tuple q
    double coefficient = 0.0;
  };

  explicit PerturbationFunction(int d);
  PerturbationFunction(int d, std::vector<Term> terms);

  /// rho = Y_{p,q}
  static PerturbationFunction single(const HarmonicIndex& index, double coefficient = 1.0);

  /// Adds A * Y_{p,q}; throws DomainError on an invalid or duplicate index.
  void add_term(const HarmonicIndex& index, double coefficient);

  int dim() const { return d_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Largest degree p carried by a term (0 if empty).
  int band_limit() const;
  /// Coefficient A_{0,1} of the constant harmonic.
  double mean_coefficient() const;

  double value(const AngularPoint& pt) const;
  harmonics::RealValueAndGradient value_and_gradient(const AngularPoint& pt) const;

  /// a * this + b * other (terms merged by index).
  PerturbationFunction combine(double a, const PerturbationFunction& other, double b) const;

 private:
  int d_;
  std::vector<Term> terms_;
};

}  // namespace steklov
