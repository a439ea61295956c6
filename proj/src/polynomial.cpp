#include "pickdisc/polynomial.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace pickdisc {

bool denominator_clear_of_closed_disc(const RationalFunction& r, double margin) {
  // Trailing near-zero coefficients would put the companion matrix on an
  // absurd scale; roots they would add are far outside the disc anyway.
  const Polynomial den = r.denominator().epsilon_trimmed(1e-14);
  const int m = den.degree();
  if (m <= 0) return true;

  // Roots via the companion matrix of the monic normalization.
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(m, m);
  Complex lead = den.coeff(static_cast<std::size_t>(m));
  for (int i = 1; i < m; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < m; ++i) {
    companion(i, m - 1) = -den.coeff(static_cast<std::size_t>(i)) / lead;
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) return false;
  for (int i = 0; i < m; ++i) {
    if (std::abs(solver.eigenvalues()(i)) <= 1.0 + margin) return false;
  }
  return true;
}

}  // namespace pickdisc
