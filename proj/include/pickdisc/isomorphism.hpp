#pragma once

#include <optional>
#include <vector>

#include "pickdisc/embedding.hpp"
#include "pickdisc/kernel.hpp"

namespace pickdisc {

// A_f(1) / A_f(-1): invariant of the multiplier algebra for maps whose only
// boundary crossing sits at +-1. Equals 1 for the symmetric family f_{r,-r}.
struct RatioInvariant {
  double value = 0.0;
};
RatioInvariant invariant_ratio(const EmbeddingMap& f);

// The two admissible automorphisms between maps with the crossing at +-1:
// alpha parametrizes (z - alpha)/(1 - alpha z) (fixing +-1) and beta
// parametrizes (beta - z)/(1 - beta z) (exchanging +-1).
struct AutomorphismCandidates {
  double alpha = 0.0;
  double beta = 0.0;

  MobiusTransform alpha_map() const { return mobius_fixing_pm1(alpha, false); }
  MobiusTransform beta_map() const { return mobius_fixing_pm1(beta, true); }
};
AutomorphismCandidates candidate_automorphisms(const EmbeddingMap& f, const EmbeddingMap& g);

// Kernel metrics along the matched boundary path z = 1 - t/A_f(1),
// w = -1 + t/A_f(-1): d_f^2 vanishes while d_g^2 tends to 1 - 4ab/(a+b)^2
// with a = A_g(1)/A_f(1), b = A_g(-1)/A_f(-1).
struct AsymptoticReport {
  std::vector<double> t_samples;  // decreasing geometric ladder
  std::vector<double> df_sq;
  std::vector<double> dg_sq;
  double predicted_dg_limit = 0.0;
  double extrapolated_df = 0.0;  // first-order Richardson value for d_f^2
  double extrapolated_dg = 0.0;  // first-order Richardson value for d_g^2
  double collision_bound = 0.0;  // gap bound constant of f
  std::vector<double> observed_gap_sq;  // ||k^f_z - k^f_w||^2 along the path
  int singular_samples = 0;             // ladder points skipped as Singularity
};
AsymptoticReport matched_path_limits(const EmbeddingMap& f, const EmbeddingMap& g, double t_min,
                                     int n_samples = 64);

// |h(1 - t/A) - h(-1 + t/B)|^2 for the normalized kernel function
// h = k^f_v / sqrt(k^f(v, v)), checked against the collision bound constant
// and against vanishing of the gap.
struct CollisionBoundReport {
  double bound_constant = 0.0;
  std::vector<double> t_samples;
  std::vector<double> gap_sq;
  double final_gap_sq = 0.0;
  bool within_bound = false;   // every sample with t <= 1e-3 below bound * 1.25
  bool gap_vanishes = false;   // tail decreasing and final sample < 1e-6
};
CollisionBoundReport collision_bound_check(const EmbeddingMap& f, Complex v, double t_min);

// Crossing-type comparison up to a disc automorphism. Zero or one crossing
// on each side compares by count alone; richer configurations are aligned by
// the automorphism taking an anchor pair to +-1.
struct SameCrossingTypeVerdict {
  bool same = false;
  std::optional<CrossingPair> witness;  // present when the verdict is "different"
};
SameCrossingTypeVerdict same_crossing_type(const EmbeddingMap& f, const EmbeddingMap& g,
                                           int grid_size);
SameCrossingTypeVerdict same_crossing_type_pairs(const std::vector<CrossingPair>& fp,
                                                 const std::vector<CrossingPair>& gp,
                                                 double arc_tol = 1e-6);

// Disc automorphism nu with nu(1) = xi, nu(-1) = zeta and the arc midpoint of
// (xi, zeta) as the image of i, so that f o nu has its crossing at +-1.
MobiusTransform crossing_normalization_map(Complex xi, Complex zeta);

// First-order Richardson extrapolation of y(t) -> y(0) on the tail of a
// sample ladder (up to the last five points).
double richardson_extrapolate(const std::vector<double>& t, const std::vector<double>& y);

}  // namespace pickdisc
