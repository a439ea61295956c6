#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "pickdisc/polynomial.hpp"

namespace pickdisc {

// Exact-rational coefficient mode. Identities that must hold coefficientwise
// (the Blaschke group law, series round trips) are checked in this mode.
using Rat = boost::multiprecision::cpp_rational;

template <>
struct ScalarTraits<Rat> {
  static constexpr bool exact = true;
  static bool is_zero(const Rat& v) { return v == 0; }
  static double magnitude(const Rat& v) { return std::abs(static_cast<double>(v)); }
  static Rat one() { return Rat(1); }
  static Rat from_int(long n) { return Rat(n); }
};

using ExactPolynomial = PolynomialT<Rat>;
using ExactRationalFunction = RationalFunctionT<Rat>;

// b_r(z) = (z - r) / (1 - r z) with exact rational r.
inline ExactRationalFunction exact_blaschke(const Rat& r) {
  ExactPolynomial num(std::vector<Rat>{-r, Rat(1)});
  ExactPolynomial den(std::vector<Rat>{Rat(1), -r});
  return ExactRationalFunction(std::move(num), std::move(den));
}

}  // namespace pickdisc
