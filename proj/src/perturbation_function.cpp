#include "steklov/perturbation_function.hpp"

#include <algorithm>

#include "steklov/errors.hpp"

namespace steklov {

PerturbationFunction::PerturbationFunction(int d) : d_(d) {
  if (d < 3) throw DomainError("PerturbationFunction: dimension must be >= 3");
}

PerturbationFunction::PerturbationFunction(int d, std::vector<Term> terms) : PerturbationFunction(d) {
  for (auto& t : terms) add_term(t.index, t.coefficient);
}

PerturbationFunction PerturbationFunction::single(const HarmonicIndex& index, double coefficient) {
  PerturbationFunction rho(index.d);
  rho.add_term(index, coefficient);
  return rho;
}

void PerturbationFunction::add_term(const HarmonicIndex& index, double coefficient) {
  if (index.d != d_) throw DomainError("PerturbationFunction: term dimension differs from function dimension");
  index.validate();
  const bool duplicate =
      std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.index == index; });
  if (duplicate) throw DomainError("PerturbationFunction: duplicate (p, q) term");
  terms_.push_back(Term{index, coefficient});
}

int PerturbationFunction::band_limit() const {
  int band = 0;
  for (const auto& t : terms_) band = std::max(band, t.index.l);
  return band;
}

double PerturbationFunction::mean_coefficient() const {
  const HarmonicIndex zero = HarmonicIndex::trivial(d_, 0);
  for (const auto& t : terms_)
    if (t.index == zero) return t.coefficient;
  return 0.0;
}

double PerturbationFunction::value(const AngularPoint& pt) const {
  double v = 0.0;
  for (const auto& t : terms_) v += t.coefficient * harmonics::eval_real(t.index, pt);
  return v;
}

harmonics::RealValueAndGradient PerturbationFunction::value_and_gradient(const AngularPoint& pt) const {
  harmonics::RealValueAndGradient out;
  out.gradient.assign(static_cast<std::size_t>(d_), 0.0);
  for (const auto& t : terms_) {
    const auto vg = harmonics::eval_real_with_gradient(t.index, pt);
    out.value += t.coefficient * vg.value;
    for (std::size_t i = 0; i < out.gradient.size(); ++i) out.gradient[i] += t.coefficient * vg.gradient[i];
  }
  return out;
}

PerturbationFunction PerturbationFunction::combine(double a, const PerturbationFunction& other, double b) const {
  if (other.d_ != d_) throw DomainError("PerturbationFunction::combine: dimension mismatch");
  PerturbationFunction out(d_);
  for (const auto& t : terms_) out.terms_.push_back(Term{t.index, a * t.coefficient});
  for (const auto& t : other.terms_) {
    auto it = std::find_if(out.terms_.begin(), out.terms_.end(), [&](const Term& s) { return s.index == t.index; });
    if (it == out.terms_.end())
      out.terms_.push_back(Term{t.index, b * t.coefficient});
    else
      it->coefficient += b * t.coefficient;
  }
  return out;
}

}  // namespace steklov
