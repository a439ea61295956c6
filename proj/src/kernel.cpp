#include "pickdisc/kernel.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

namespace pickdisc {

namespace {

constexpr double kSingularityTol = 1e-15;
constexpr double kPsdRelTol = 1e-10;

// Neumaier variant of Kahan summation.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  double value() const { return sum + comp; }
};

}  // namespace

Complex one_minus_hermitian_inner(std::span<const Complex> u, std::span<const Complex> v) {
  CompensatedSum re, im;
  re.add(1.0);
  for (std::size_t j = 0; j < u.size(); ++j) {
    // -u_j conj(v_j), expanded into real products.
    re.add(-(u[j].real() * v[j].real()));
    re.add(-(u[j].imag() * v[j].imag()));
    im.add(-(u[j].imag() * v[j].real()));
    im.add(u[j].real() * v[j].imag());
  }
  return Complex(re.value(), im.value());
}

Complex DiscKernel::one_minus_inner(Complex z, Complex w) const {
  const auto u = source_(z);
  const auto v = source_(w);
  return one_minus_hermitian_inner(u, v);
}

Complex DiscKernel::eval(Complex z, Complex w) const {
  const Complex denom = one_minus_inner(z, w);
  if (std::abs(denom) < kSingularityTol) {
    throw Singularity("kernel evaluation too close to the boundary diagonal");
  }
  return 1.0 / denom;
}

RotationInvariantKernel::RotationInvariantKernel(std::vector<double> coeffs, int truncation,
                                                 double growth_bound)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw ParameterOutOfRange("rotation-invariant kernel needs c_0");
  if (truncation >= 0 && truncation + 1 < static_cast<int>(coeffs_.size())) {
    coeffs_.resize(static_cast<std::size_t>(truncation) + 1);
  }
  for (double c : coeffs_) {
    if (!(c >= 0.0)) throw ParameterOutOfRange("kernel coefficients must be nonnegative");
    if (c > growth_bound) throw ParameterOutOfRange("kernel coefficient exceeds growth bound");
  }
}

int RotationInvariantKernel::choose_truncation(const std::vector<double>& coeffs, double rho,
                                               double tol) {
  if (!(rho > 0.0 && rho < 1.0)) throw ParameterOutOfRange("radius must be in (0, 1)");
  const double tail_factor = 1.0 / (1.0 - rho * rho);
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (coeffs[n] * std::pow(rho, 2.0 * static_cast<double>(n)) * tail_factor < tol) {
      return static_cast<int>(n);
    }
  }
  return static_cast<int>(coeffs.size()) - 1;
}

Complex RotationInvariantKernel::eval(Complex z, Complex w) const {
  const Complex t = z * std::conj(w);
  Complex acc(0.0, 0.0);
  for (std::size_t n = coeffs_.size(); n-- > 0;) acc = acc * t + coeffs_[n];
  return acc;
}

double RotationInvariantKernel::tail_bound(Complex z, Complex w) const {
  const double t = std::abs(z * std::conj(w));
  if (t >= 1.0) return std::numeric_limits<double>::infinity();
  const double n = static_cast<double>(coeffs_.size());
  return coeffs_.back() * std::pow(t, n) / (1.0 - t);
}

PickMatrixReport pick_matrix(const Kernel& k, const std::vector<Complex>& points,
                             const std::vector<Complex>& targets) {
  const std::size_t n = points.size();
  if (n == 0) throw ParameterOutOfRange("pick matrix needs at least one point");
  if (targets.size() != n) throw ParameterOutOfRange("points and targets must have equal length");
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(points[i]) >= 1.0) throw ParameterOutOfRange("pick nodes must lie in the open disc");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(points[i] - points[j]) < 1e-15) {
        throw DuplicatePoints("pick nodes must be distinct");
      }
    }
  }

  PickMatrixReport rep;
  rep.size = n;
  rep.matrix.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex weight = 1.0 - targets[i] * std::conj(targets[j]);
      rep.matrix[i * n + j] = weight * k.eval(points[i], points[j]);
    }
  }

  Eigen::MatrixXcd m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rep.matrix[i * n + j];
  }
  Eigen::MatrixXcd herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
  rep.min_eigenvalue = solver.eigenvalues()(0);

  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += std::abs(rep.matrix[i * n + j]);
    rep.norm_estimate = std::max(rep.norm_estimate, row);
  }
  rep.psd = rep.min_eigenvalue >= -kPsdRelTol * std::max(rep.norm_estimate, 1e-300);
  return rep;
}

PickMatrixReport gram_matrix(const Kernel& k, const std::vector<Complex>& points) {
  return pick_matrix(k, points, std::vector<Complex>(points.size(), Complex(0.0, 0.0)));
}

double metric(const Kernel& k, Complex z, Complex w) {
  const double kzz = k.eval(z, z).real();
  const double kww = k.eval(w, w).real();
  const Complex kzw = k.eval(z, w);
  double arg = 1.0 - std::norm(kzw) / (kzz * kww);
  arg = std::clamp(arg, 0.0, 1.0);
  return std::sqrt(arg);
}

double kernel_difference_norm_sq(const Kernel& k, Complex z, Complex w) {
  const double kzz = k.eval(z, z).real();
  const double kww = k.eval(w, w).real();
  const double cross = k.eval(z, w).real();
  return kzz - 2.0 * cross + kww;
}

}  // namespace pickdisc
