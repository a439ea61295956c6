#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "pickdisc/error.hpp"

namespace pickdisc {

using Complex = std::complex<double>;

// Coefficient field used by the polynomial templates. The floating
// instantiation is std::complex<double>; exact.hpp adds a rational one.
template <class K>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static bool is_zero(const Complex& v) { return v == Complex(0.0, 0.0); }
  static double magnitude(const Complex& v) { return std::abs(v); }
  static Complex one() { return Complex(1.0, 0.0); }
  static Complex from_int(long n) { return Complex(static_cast<double>(n), 0.0); }
};

// Dense univariate polynomial, coefficients lowest degree first. The leading
// coefficient is kept nonzero (exact zeros are trimmed); the zero polynomial
// has an empty coefficient vector and degree -1.
template <class K>
class PolynomialT {
 public:
  PolynomialT() = default;
  explicit PolynomialT(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static PolynomialT constant(const K& c) { return PolynomialT(std::vector<K>{c}); }
  static PolynomialT one() { return constant(ScalarTraits<K>::one()); }
  static PolynomialT variable() {
    return PolynomialT(std::vector<K>{K{}, ScalarTraits<K>::one()});
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<K>& coeffs() const { return coeffs_; }
  K coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : K{}; }

  // Horner evaluation.
  K operator()(const K& z) const {
    K acc{};
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
    return acc;
  }

  PolynomialT derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<K> d(coeffs_.size() - 1);
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
      d[n - 1] = coeffs_[n] * ScalarTraits<K>::from_int(static_cast<long>(n));
    }
    return PolynomialT(std::move(d));
  }

  // Polynomial substitution p(inner(z)), Horner over polynomial arithmetic.
  PolynomialT compose(const PolynomialT& inner) const {
    PolynomialT acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      acc = acc * inner + constant(coeffs_[i]);
    }
    return acc;
  }

  PolynomialT pow(unsigned n) const {
    PolynomialT acc = one();
    for (unsigned i = 0; i < n; ++i) acc = acc * *this;
    return acc;
  }

  double max_coeff_magnitude() const {
    double m = 0.0;
    for (const K& c : coeffs_) m = std::max(m, ScalarTraits<K>::magnitude(c));
    return m;
  }

  friend PolynomialT operator+(const PolynomialT& a, const PolynomialT& b) {
    std::vector<K> c(std::max(a.coeffs_.size(), b.coeffs_.size()), K{});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = c[i] + b.coeffs_[i];
    return PolynomialT(std::move(c));
  }

  friend PolynomialT operator-(const PolynomialT& a, const PolynomialT& b) {
    std::vector<K> c(std::max(a.coeffs_.size(), b.coeffs_.size()), K{});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = c[i] - b.coeffs_[i];
    return PolynomialT(std::move(c));
  }

  friend PolynomialT operator-(const PolynomialT& a) {
    std::vector<K> c(a.coeffs_.size());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = -a.coeffs_[i];
    return PolynomialT(std::move(c));
  }

  friend PolynomialT operator*(const PolynomialT& a, const PolynomialT& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> c(a.coeffs_.size() + b.coeffs_.size() - 1, K{});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return PolynomialT(std::move(c));
  }

  friend PolynomialT operator*(const K& s, const PolynomialT& a) {
    std::vector<K> c(a.coeffs_.size());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = s * a.coeffs_[i];
    return PolynomialT(std::move(c));
  }

  friend PolynomialT operator*(const PolynomialT& a, const K& s) { return s * a; }

  PolynomialT divided_by(const K& s) const {
    std::vector<K> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] / s;
    return PolynomialT(std::move(c));
  }

  // Drops trailing coefficients below rel_tol times the largest one. Exact
  // mode is untouched; in floating mode this removes cancellation residue
  // (compositions that clear denominator powers leave ~1e-16 ghosts whose
  // spurious degree breaks downstream root finding).
  PolynomialT epsilon_trimmed(double rel_tol) const {
    if constexpr (ScalarTraits<K>::exact) {
      return *this;
    } else {
      const double cutoff = rel_tol * max_coeff_magnitude();
      std::vector<K> c = coeffs_;
      while (!c.empty() && ScalarTraits<K>::magnitude(c.back()) <= cutoff) c.pop_back();
      return PolynomialT(std::move(c));
    }
  }

  bool operator==(const PolynomialT&) const = default;

 private:
  void trim() {
    while (!coeffs_.empty() && ScalarTraits<K>::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<K> coeffs_;
};

namespace detail {
// Absolute zero-denominator tolerance, relative to coefficient magnitude.
inline constexpr double kDenominatorTol = 1e-14;
// Below this (relative) size a constant term is not used for normalization.
inline constexpr double kNormalizeEps = 1e-12;
}  // namespace detail

// Ratio of two polynomials. The representation is normalized so that the
// denominator's constant term is one whenever it is usable, which makes
// coefficientwise comparison after composition meaningful.
template <class K>
class RationalFunctionT {
 public:
  RationalFunctionT()
      : num_(), den_(PolynomialT<K>::one()) {}

  RationalFunctionT(PolynomialT<K> num, PolynomialT<K> den)
      : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DenominatorZero("rational function has identically zero denominator");
    normalize();
  }

  static RationalFunctionT from_polynomial(PolynomialT<K> p) {
    return RationalFunctionT(std::move(p), PolynomialT<K>::one());
  }

  const PolynomialT<K>& numerator() const { return num_; }
  const PolynomialT<K>& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  K operator()(const K& z) const {
    K dv = den_(z);
    if constexpr (ScalarTraits<K>::exact) {
      if (ScalarTraits<K>::is_zero(dv)) {
        throw DenominatorZero("denominator vanishes at evaluation point");
      }
    } else {
      double scale = std::max(1.0, den_.max_coeff_magnitude());
      if (ScalarTraits<K>::magnitude(dv) < detail::kDenominatorTol * scale) {
        throw DenominatorZero("denominator vanishes at evaluation point");
      }
    }
    return num_(z) / dv;
  }

  // Exact quotient-rule derivative (n'd - n d') / d^2.
  RationalFunctionT derivative() const {
    return RationalFunctionT(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  friend RationalFunctionT operator*(const RationalFunctionT& a, const RationalFunctionT& b) {
    return RationalFunctionT(a.num_ * b.num_, a.den_ * b.den_);
  }

  friend RationalFunctionT operator*(const K& s, const RationalFunctionT& a) {
    return RationalFunctionT(s * a.num_, a.den_);
  }

  bool operator==(const RationalFunctionT&) const = default;

 private:
  void normalize() {
    K c0 = den_.coeff(0);
    bool usable;
    if constexpr (ScalarTraits<K>::exact) {
      usable = !ScalarTraits<K>::is_zero(c0);
    } else {
      usable = ScalarTraits<K>::magnitude(c0) >
               detail::kNormalizeEps * std::max(1.0, den_.max_coeff_magnitude());
    }
    if (!usable) {
      // Pole at the origin: fall back to the lowest usable coefficient.
      for (std::size_t i = 0; i < den_.coeffs().size(); ++i) {
        const K& c = den_.coeffs()[i];
        bool ok;
        if constexpr (ScalarTraits<K>::exact) {
          ok = !ScalarTraits<K>::is_zero(c);
        } else {
          ok = ScalarTraits<K>::magnitude(c) >
               detail::kNormalizeEps * std::max(1.0, den_.max_coeff_magnitude());
        }
        if (ok) {
          c0 = c;
          break;
        }
      }
    }
    num_ = num_.divided_by(c0);
    den_ = den_.divided_by(c0);
  }

  PolynomialT<K> num_;
  PolynomialT<K> den_;
};

// r((p(z))/(q(z))) for deg p, deg q <= 1, cleared to a single ratio of
// polynomials in z. Both p and q may carry arbitrary coefficients; the caller
// guarantees the fraction p/q is not constant.
template <class K>
RationalFunctionT<K> compose_linear_fractional(const RationalFunctionT<K>& r,
                                               const PolynomialT<K>& p,
                                               const PolynomialT<K>& q) {
  const auto& n = r.numerator();
  const auto& d = r.denominator();
  const int m = std::max({n.degree(), d.degree(), 0});

  std::vector<PolynomialT<K>> pk(static_cast<std::size_t>(m) + 1);
  std::vector<PolynomialT<K>> qk(static_cast<std::size_t>(m) + 1);
  pk[0] = PolynomialT<K>::one();
  qk[0] = PolynomialT<K>::one();
  for (int k = 1; k <= m; ++k) {
    pk[k] = pk[k - 1] * p;
    qk[k] = qk[k - 1] * q;
  }

  PolynomialT<K> num_out, den_out;
  for (int k = 0; k <= m; ++k) {
    const auto& weight = qk[m - k];
    num_out = num_out + n.coeff(k) * (pk[k] * weight);
    den_out = den_out + d.coeff(k) * (pk[k] * weight);
  }
  num_out = num_out.epsilon_trimmed(detail::kDenominatorTol);
  den_out = den_out.epsilon_trimmed(detail::kDenominatorTol);
  if (den_out.is_zero()) {
    throw DegenerateComposition("composition denominator is identically zero");
  }
  return RationalFunctionT<K>(std::move(num_out), std::move(den_out));
}

using Polynomial = PolynomialT<Complex>;
using RationalFunction = RationalFunctionT<Complex>;

// True when every root of the denominator stays outside the closed unit disc
// by the given margin (companion-matrix eigenvalues).
bool denominator_clear_of_closed_disc(const RationalFunction& r, double margin = 1e-9);

// Coefficientwise comparison of normalized representations.
inline bool approx_equal(const Polynomial& a, const Polynomial& b, double tol) {
  std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  double scale = 1.0 + std::max(a.max_coeff_magnitude(), b.max_coeff_magnitude());
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(a.coeff(i) - b.coeff(i)) > tol * scale) return false;
  }
  return true;
}

inline bool approx_equal(const RationalFunction& a, const RationalFunction& b, double tol) {
  return approx_equal(a.numerator(), b.numerator(), tol) &&
         approx_equal(a.denominator(), b.denominator(), tol);
}

}  // namespace pickdisc
