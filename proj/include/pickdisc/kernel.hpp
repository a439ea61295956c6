#pragma once

#include <memory>
#include <span>
#include <vector>

#include "pickdisc/embedding.hpp"

namespace pickdisc {

// 1 - <u, v> with Neumaier-compensated summation, real and imaginary parts
// separately. Near the boundary the result is O(1 - |z|) while every term is
// O(1), so the compensation keeps the cancellation honest.
Complex one_minus_hermitian_inner(std::span<const Complex> u, std::span<const Complex> v);

// Positive-definite kernel on the unit disc.
class Kernel {
 public:
  virtual ~Kernel() = default;
  // Requires |z|, |w| < 1. Hermitian: eval(z, w) = conj(eval(w, z)).
  virtual Complex eval(Complex z, Complex w) const = 0;
};

// Pulled-back kernel of an analytic disc: k^f(z, w) = 1 / (1 - <f(z), f(w)>).
class DiscKernel final : public Kernel {
 public:
  explicit DiscKernel(EmbeddingMap source) : source_(std::move(source)) {}

  const EmbeddingMap& source() const { return source_; }

  // 1 - <f(z), f(w)>, the quantity whose smallness drives everything near
  // the boundary.
  Complex one_minus_inner(Complex z, Complex w) const;

  Complex eval(Complex z, Complex w) const override;

 private:
  EmbeddingMap source_;
};

// k(z, w) = sum_{n <= N} c_n (z conj(w))^n with c_n >= 0.
class RotationInvariantKernel final : public Kernel {
 public:
  // Uses coeffs[0..truncation]; truncation < 0 means all supplied terms.
  explicit RotationInvariantKernel(std::vector<double> coeffs, int truncation = -1,
                                   double growth_bound = 1e12);

  int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  // Smallest N with c_N rho^{2N} / (1 - rho^2) < tol at radius rho.
  static int choose_truncation(const std::vector<double>& coeffs, double rho,
                               double tol = 1e-14);

  Complex eval(Complex z, Complex w) const override;

  // c_N |z conj(w)|^{N+1} / (1 - |z conj(w)|), a tail estimate for
  // nonincreasing-growth coefficients.
  double tail_bound(Complex z, Complex w) const;

 private:
  std::vector<double> coeffs_;
};

struct PickMatrixReport {
  std::size_t size = 0;
  std::vector<Complex> matrix;  // row-major size x size, Hermitian
  double min_eigenvalue = 0.0;
  double norm_estimate = 0.0;  // max absolute row sum
  bool psd = false;
};

// [(1 - a_j conj(a_k)) k(p_j, p_k)]; the verdict uses a relative tolerance of
// 1e-10 against the row-sum norm estimate.
PickMatrixReport pick_matrix(const Kernel& k, const std::vector<Complex>& points,
                             const std::vector<Complex>& targets);

// Gram matrix [k(p_j, p_k)] = pick matrix with all targets zero.
PickMatrixReport gram_matrix(const Kernel& k, const std::vector<Complex>& points);

// d(z, w) = sqrt(1 - |k(z,w)|^2 / (k(z,z) k(w,w))), in [0, 1].
double metric(const Kernel& k, Complex z, Complex w);

// ||k_z - k_w||^2 = k(z,z) - 2 Re k(z,w) + k(w,w).
double kernel_difference_norm_sq(const Kernel& k, Complex z, Complex w);

}  // namespace pickdisc
