#pragma once

#include <complex>

#include "pickdisc/polynomial.hpp"

namespace pickdisc {

// Disc automorphism mu(z) = lambda (alpha - z) / (1 - conj(alpha) z)
// with |lambda| = 1 and |alpha| < 1.
class MobiusTransform {
 public:
  MobiusTransform(Complex lambda, Complex alpha);

  Complex lambda() const { return lambda_; }
  Complex alpha() const { return alpha_; }

  Complex operator()(Complex z) const;
  MobiusTransform inverse() const;
  RationalFunction to_rational() const;

  // mu(z) = z, realized as lambda = -1, alpha = 0.
  static MobiusTransform identity() { return MobiusTransform(Complex(-1.0, 0.0), Complex(0.0, 0.0)); }

 private:
  Complex lambda_;
  Complex alpha_;
};

// swap = false: mu(z) = (z - alpha)/(1 - alpha z), fixing +1 and -1.
// swap = true : mu(z) = (alpha - z)/(1 - alpha z), exchanging +1 and -1.
MobiusTransform mobius_fixing_pm1(double alpha, bool swap);

// Exact rational composition r(mu(z)).
RationalFunction compose_mobius(const RationalFunction& r, const MobiusTransform& m);

}  // namespace pickdisc
