#pragma once

#include <span>
#include <string>
#include <vector>

#include "pickdisc/mobius.hpp"
#include "pickdisc/polynomial.hpp"

namespace pickdisc {

// Hermitian inner product with the conjugate on the second argument.
Complex hermitian_inner(std::span<const Complex> u, std::span<const Complex> v);
double norm_sq(std::span<const Complex> u);

// Map f from the unit disc into the unit ball of C^d with rational
// coordinates, normalized to the unit sphere on the boundary circle.
// Construction checks that every coordinate is analytic on a neighborhood of
// the closed disc (denominator roots stay outside with margin 1e-9); the
// analytic/metric conditions are sampled by validate_embedding.
class EmbeddingMap {
 public:
  explicit EmbeddingMap(std::vector<RationalFunction> coordinates);

  int dimension() const { return static_cast<int>(coords_.size()); }
  const std::vector<RationalFunction>& coordinates() const { return coords_; }

  std::vector<Complex> operator()(Complex z) const;
  std::vector<Complex> derivative(Complex z) const;
  std::vector<Complex> second_derivative(Complex z) const;

 private:
  std::vector<RationalFunction> coords_;
  std::vector<RationalFunction> d1_;
  std::vector<RationalFunction> d2_;
};

// f_r(z) = (z^2, b_r(z)^2) / sqrt(2), 0 < r < 1.
EmbeddingMap make_f_r(double r);

// f_{r,s}(z) = (b_r(z)^2, b_s(z)^2) / sqrt(2), r != s.
EmbeddingMap make_f_rs(double r, double s);

// (z, z^2) / sqrt(2): boundary-normalized and injective on the closed disc.
EmbeddingMap make_injective_example();

// Coordinatewise composition f(mu(z)).
EmbeddingMap compose_with_mobius(const EmbeddingMap& f, const MobiusTransform& m);

struct ValidationTolerances {
  double boundary = 1e-9;          // | ||f(xi)||^2 - 1 | on the circle
  double interior_margin = 1e-12;  // ||f(z)|| < 1 - margin inside
  double derivative_min = 1e-8;    // ||f'(z)|| must stay above this
  double transversality = 1e-9;    // Re A_f floor and relative Im ceiling
};

struct ValidationReport {
  double boundary_norm_dev = 0.0;        // max | ||f(xi)||^2 - 1 | over circle samples
  double interior_norm_max = 0.0;        // max ||f(z)|| over interior samples
  double derivative_min = 0.0;           // min ||f'(z)|| over samples
  double transversality_min = 0.0;       // min Re A_f(xi) over circle samples
  double transversality_imag_max = 0.0;  // max |Im A_f(xi)| over circle samples
  bool boundary_ok = false;
  bool interior_ok = false;
  bool derivative_ok = false;
  bool transversality_ok = false;

  bool pass() const { return boundary_ok && interior_ok && derivative_ok && transversality_ok; }
  std::vector<std::string> failures() const;
};

ValidationReport validate_embedding(const EmbeddingMap& f, int grid_size,
                                    const ValidationTolerances& tol = {});

struct CrossingPair {
  Complex xi;       // first point by principal argument
  Complex zeta;     // second point
  double residual;  // ||f(xi) - f(zeta)|| after refinement
};

struct CrossingScan {
  std::vector<CrossingPair> pairs;  // sorted by (arg xi, arg zeta), one entry per crossing
  int refinement_failures = 0;      // coarse candidates the refinement could not settle
};

struct CrossingSearchOptions {
  double candidate_threshold_sq = 1e-4;
  double newton_tol = 1e-12;
  double cluster_radius = 1e-6;  // arc length
  double residual_tol = 1e-10;
};

// All boundary pairs xi != zeta with f(xi) = f(zeta): coarse grid scan over
// (theta, phi), Gauss-Newton refinement, clustering.
CrossingScan find_self_crossings(const EmbeddingMap& f, int grid_size,
                                 const CrossingSearchOptions& opts = {});

// A_f(xi) = <f(xi), f'(xi) xi>, real and positive for embedding maps.
double semi_invariant(const EmbeddingMap& f, Complex xi);

// Prediction of A_{f o mu}(xi) from A_f alone:
// A_f(mu(xi)) (1 - |alpha|^2) / |alpha - xi|^2.
double transform_semi_invariant(const EmbeddingMap& f, const MobiusTransform& m, Complex xi);

// Expansion constants at a boundary collision f(1) = f(-1).
struct BoundaryCollisionData {
  double A = 0.0;  // <f(1), f'(1)>
  double B = 0.0;  // -<f(-1), f'(-1)>
  double C = 0.0;  // ||f'(1)||^2
  double D = 0.0;  // ||f'(-1)||^2
  Complex E;       // <f'(1), f'(-1)>
  Complex F;       // <f(1), f''(1)> / 2
  Complex G;       // <f(-1), f''(-1)> / 2

  // (C/A^2 + D/B^2 + 2 Re E/(A B)) / 4, the boundary-collision gap bound.
  double bound_constant() const;
};

// Requires the crossing normalized to (1, -1); throws NotNormalized otherwise.
BoundaryCollisionData collision_data(const EmbeddingMap& f);

// Whether f(1) and f(-1) coincide within tol (crossing normalized to +-1).
bool has_crossing_at_pm1(const EmbeddingMap& f, double tol = 1e-9);

}  // namespace pickdisc
