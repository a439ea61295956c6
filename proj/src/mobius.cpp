#include "pickdisc/mobius.hpp"

#include <cmath>

namespace pickdisc {

MobiusTransform::MobiusTransform(Complex lambda, Complex alpha)
    : lambda_(lambda), alpha_(alpha) {
  double lm = std::abs(lambda_);
  if (std::abs(lm - 1.0) > 1e-9) {
    throw ParameterOutOfRange("mobius transform requires |lambda| = 1");
  }
  lambda_ /= lm;
  if (std::abs(alpha_) >= 1.0) {
    throw ParameterOutOfRange("mobius transform requires |alpha| < 1");
  }
}

Complex MobiusTransform::operator()(Complex z) const {
  return lambda_ * (alpha_ - z) / (1.0 - std::conj(alpha_) * z);
}

MobiusTransform MobiusTransform::inverse() const {
  // mu^{-1}(w) = lambda' (alpha' - w) / (1 - conj(alpha') w)
  // with lambda' = conj(lambda), alpha' = lambda alpha.
  return MobiusTransform(std::conj(lambda_), lambda_ * alpha_);
}

RationalFunction MobiusTransform::to_rational() const {
  Polynomial num(std::vector<Complex>{lambda_ * alpha_, -lambda_});
  Polynomial den(std::vector<Complex>{Complex(1.0, 0.0), -std::conj(alpha_)});
  return RationalFunction(std::move(num), std::move(den));
}

MobiusTransform mobius_fixing_pm1(double alpha, bool swap) {
  if (!(std::abs(alpha) < 1.0)) {
    throw ParameterOutOfRange("mobius_fixing_pm1 requires alpha in (-1, 1)");
  }
  // (z - a)/(1 - a z) = -1 * (a - z)/(1 - a z); the swapped family keeps lambda = 1.
  return MobiusTransform(Complex(swap ? 1.0 : -1.0, 0.0), Complex(alpha, 0.0));
}

RationalFunction compose_mobius(const RationalFunction& r, const MobiusTransform& m) {
  Polynomial p(std::vector<Complex>{m.lambda() * m.alpha(), -m.lambda()});
  Polynomial q(std::vector<Complex>{Complex(1.0, 0.0), -std::conj(m.alpha())});
  return compose_linear_fractional(r, p, q);
}

}  // namespace pickdisc
