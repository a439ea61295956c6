#include "pickdisc/isomorphism.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pickdisc {

namespace {

constexpr double kLadderTop = 1e-2;
constexpr double kBoundWindow = 1e-3;   // bound check applies for t <= this
constexpr double kBoundSlack = 0.25;    // allowed excess over the bound constant
constexpr double kGapVanishTol = 1e-6;

std::vector<double> geometric_ladder(double t_min, int n_samples) {
  if (!(t_min > 0.0 && t_min < kLadderTop)) {
    throw ParameterOutOfRange("t_min must lie in (0, 1e-2)");
  }
  std::vector<double> t;
  double v = kLadderTop;
  while (v >= t_min && static_cast<int>(t.size()) < n_samples) {
    t.push_back(v);
    v *= 0.5;
  }
  return t;
}

// d^2(z, w) = 1 - (1 - ||f(z)||^2)(1 - ||f(w)||^2) / |1 - <f(z), f(w)>|^2
// computed through the compensated 1 - <.,.> path.
double metric_sq_near_boundary(const DiscKernel& k, Complex z, Complex w) {
  const double nz = k.one_minus_inner(z, z).real();
  const double nw = k.one_minus_inner(w, w).real();
  const Complex cross = k.one_minus_inner(z, w);
  const double denom = std::norm(cross);
  if (denom < 1e-300) throw Singularity("metric evaluation too close to the boundary");
  return std::clamp(1.0 - nz * nw / denom, 0.0, 1.0);
}

}  // namespace

double richardson_extrapolate(const std::vector<double>& t, const std::vector<double>& y) {
  const std::size_t n = t.size();
  if (n == 0) throw ParameterOutOfRange("no samples to extrapolate");
  if (n == 1) return y[0];
  const std::size_t use = std::min<std::size_t>(5, n);
  double best = y[n - 1];
  for (std::size_t i = n - use + 1; i < n; ++i) {
    // Eliminate the O(t) term between consecutive samples.
    best = (t[i - 1] * y[i] - t[i] * y[i - 1]) / (t[i - 1] - t[i]);
  }
  return best;
}

RatioInvariant invariant_ratio(const EmbeddingMap& f) {
  if (!has_crossing_at_pm1(f)) {
    throw NotNormalized("invariant ratio requires the crossing at +-1");
  }
  return RatioInvariant{semi_invariant(f, Complex(1.0, 0.0)) /
                        semi_invariant(f, Complex(-1.0, 0.0))};
}

AutomorphismCandidates candidate_automorphisms(const EmbeddingMap& f, const EmbeddingMap& g) {
  if (!has_crossing_at_pm1(f) || !has_crossing_at_pm1(g)) {
    throw NotNormalized("candidate automorphisms require both crossings at +-1");
  }
  const double af1 = semi_invariant(f, Complex(1.0, 0.0));
  const double af2 = semi_invariant(f, Complex(-1.0, 0.0));
  const double ag1 = semi_invariant(g, Complex(1.0, 0.0));
  const double ag2 = semi_invariant(g, Complex(-1.0, 0.0));

  AutomorphismCandidates cand;
  {
    const double p = std::sqrt(af1 * ag2);
    const double q = std::sqrt(af2 * ag1);
    cand.alpha = (p - q) / (p + q);
  }
  {
    const double p = std::sqrt(af1 * ag1);
    const double q = std::sqrt(af2 * ag2);
    cand.beta = (p - q) / (p + q);
  }
  return cand;
}

AsymptoticReport matched_path_limits(const EmbeddingMap& f, const EmbeddingMap& g, double t_min,
                                     int n_samples) {
  if (!has_crossing_at_pm1(f) || !has_crossing_at_pm1(g)) {
    throw NotNormalized("matched path requires both crossings at +-1");
  }
  const double af1 = semi_invariant(f, Complex(1.0, 0.0));
  const double af2 = semi_invariant(f, Complex(-1.0, 0.0));
  const double ag1 = semi_invariant(g, Complex(1.0, 0.0));
  const double ag2 = semi_invariant(g, Complex(-1.0, 0.0));
  const double a = ag1 / af1;
  const double b = ag2 / af2;

  AsymptoticReport rep;
  rep.predicted_dg_limit = 1.0 - 4.0 * a * b / ((a + b) * (a + b));

  const DiscKernel kf{f};
  const DiscKernel kg{g};
  rep.collision_bound = collision_data(f).bound_constant();

  std::vector<double> good_t, df, dg;
  for (double t : geometric_ladder(t_min, n_samples)) {
    const Complex z(1.0 - t / af1, 0.0);
    const Complex w(-1.0 + t / af2, 0.0);
    try {
      const double dfs = metric_sq_near_boundary(kf, z, w);
      const double dgs = metric_sq_near_boundary(kg, z, w);
      const double gap = kernel_difference_norm_sq(kf, z, w);
      good_t.push_back(t);
      df.push_back(dfs);
      dg.push_back(dgs);
      rep.observed_gap_sq.push_back(gap);
    } catch (const Singularity&) {
      ++rep.singular_samples;
    }
  }
  rep.t_samples = std::move(good_t);
  rep.df_sq = std::move(df);
  rep.dg_sq = std::move(dg);
  if (rep.t_samples.empty()) throw Singularity("no usable samples on the matched path");
  rep.extrapolated_df = richardson_extrapolate(rep.t_samples, rep.df_sq);
  rep.extrapolated_dg = richardson_extrapolate(rep.t_samples, rep.dg_sq);
  return rep;
}

CollisionBoundReport collision_bound_check(const EmbeddingMap& f, Complex v, double t_min) {
  if (std::abs(v) >= 1.0) throw ParameterOutOfRange("base point must lie in the open disc");
  const BoundaryCollisionData data = collision_data(f);

  const DiscKernel k{f};
  const double kvv = k.eval(v, v).real();
  const double scale = 1.0 / kvv;  // |h(z) - h(w)|^2 = |k(z,v) - k(w,v)|^2 / k(v,v)

  CollisionBoundReport rep;
  rep.bound_constant = data.bound_constant();
  rep.within_bound = true;

  for (double t : geometric_ladder(t_min, 1 << 20)) {
    const Complex z(1.0 - t / data.A, 0.0);
    const Complex w(-1.0 + t / data.B, 0.0);
    const Complex hz = k.eval(z, v);
    const Complex hw = k.eval(w, v);
    const double gap = std::norm(hz - hw) * scale;
    rep.t_samples.push_back(t);
    rep.gap_sq.push_back(gap);
    if (t <= kBoundWindow && gap > rep.bound_constant * (1.0 + kBoundSlack)) {
      rep.within_bound = false;
    }
  }

  rep.final_gap_sq = rep.gap_sq.back();
  bool decreasing = true;
  const std::size_t tail = std::min<std::size_t>(5, rep.gap_sq.size());
  for (std::size_t i = rep.gap_sq.size() - tail + 1; i < rep.gap_sq.size(); ++i) {
    if (rep.gap_sq[i] > rep.gap_sq[i - 1] + 1e-12) decreasing = false;
  }
  rep.gap_vanishes = decreasing && rep.final_gap_sq < kGapVanishTol;
  return rep;
}

MobiusTransform crossing_normalization_map(Complex xi, Complex zeta) {
  // nu sends 1 -> xi, -1 -> zeta, i -> arc midpoint of (xi, zeta).
  // Built from the matrix maps (1, i, -1) -> (0, 1, inf) -> (xi, mid, zeta).
  const double a1 = std::arg(xi);
  double a2 = std::arg(zeta);
  if (a2 < a1) a2 += 2.0 * std::numbers::pi;
  const Complex mid = std::polar(1.0, 0.5 * (a1 + a2));

  // M(z) = (z - p)(q - r) / ((z - r)(q - p)) maps (p, q, r) -> (0, 1, inf).
  auto three_point_matrix = [](Complex p, Complex q, Complex r) {
    // Matrix acting as M(z) = (az + b)/(cz + d).
    const Complex s = q - r;
    const Complex u = q - p;
    return std::array<Complex, 4>{s, -p * s, u, -r * u};
  };
  auto invert = [](const std::array<Complex, 4>& m) {
    return std::array<Complex, 4>{m[3], -m[1], -m[2], m[0]};
  };
  auto multiply = [](const std::array<Complex, 4>& m, const std::array<Complex, 4>& n) {
    return std::array<Complex, 4>{m[0] * n[0] + m[1] * n[2], m[0] * n[1] + m[1] * n[3],
                                  m[2] * n[0] + m[3] * n[2], m[2] * n[1] + m[3] * n[3]};
  };

  const auto from_source = three_point_matrix(Complex(1.0, 0.0), Complex(0.0, 1.0),
                                              Complex(-1.0, 0.0));
  const auto from_target = three_point_matrix(xi, mid, zeta);
  const auto nu = multiply(invert(from_target), from_source);

  // Standard form: for (az + b)/(cz + d) the zero is at alpha = -b/a and
  // lambda = -a/d.
  const Complex alpha = -nu[1] / nu[0];
  const Complex lambda = -nu[0] / nu[3];
  return MobiusTransform(lambda, alpha);
}

SameCrossingTypeVerdict same_crossing_type_pairs(const std::vector<CrossingPair>& fp,
                                                 const std::vector<CrossingPair>& gp,
                                                 double arc_tol) {
  SameCrossingTypeVerdict verdict;
  if (fp.size() != gp.size()) {
    verdict.same = false;
    const auto& longer = fp.size() > gp.size() ? fp : gp;
    verdict.witness = longer.front();
    return verdict;
  }
  if (fp.size() <= 1) {
    // Any single pair is automorphism-equivalent to (+1, -1).
    verdict.same = true;
    return verdict;
  }

  // Align by the automorphism sending an anchor pair to +-1, then compare the
  // remaining configurations as unordered sets of point pairs.
  auto normalized = [](const std::vector<CrossingPair>& pairs, const CrossingPair& anchor,
                       bool swap_anchor) {
    const Complex xi = swap_anchor ? anchor.zeta : anchor.xi;
    const Complex zeta = swap_anchor ? anchor.xi : anchor.zeta;
    const MobiusTransform inv = crossing_normalization_map(xi, zeta).inverse();
    std::vector<std::pair<Complex, Complex>> out;
    out.reserve(pairs.size());
    for (const CrossingPair& p : pairs) out.emplace_back(inv(p.xi), inv(p.zeta));
    return out;
  };

  auto matches = [&](const std::vector<std::pair<Complex, Complex>>& a,
                     const std::vector<std::pair<Complex, Complex>>& b) {
    std::vector<bool> used(b.size(), false);
    for (const auto& pa : a) {
      bool found = false;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (used[j]) continue;
        const auto& pb = b[j];
        const bool direct = std::abs(pa.first - pb.first) < arc_tol &&
                            std::abs(pa.second - pb.second) < arc_tol;
        const bool crossed = std::abs(pa.first - pb.second) < arc_tol &&
                             std::abs(pa.second - pb.first) < arc_tol;
        if (direct || crossed) {
          used[j] = true;
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  };

  const auto f_norm = normalized(fp, fp.front(), false);
  for (const CrossingPair& anchor : gp) {
    for (bool swap_anchor : {false, true}) {
      if (matches(f_norm, normalized(gp, anchor, swap_anchor))) {
        verdict.same = true;
        return verdict;
      }
    }
  }
  verdict.same = false;
  verdict.witness = fp.front();
  return verdict;
}

SameCrossingTypeVerdict same_crossing_type(const EmbeddingMap& f, const EmbeddingMap& g,
                                           int grid_size) {
  const CrossingScan sf = find_self_crossings(f, grid_size);
  const CrossingScan sg = find_self_crossings(g, grid_size);
  return same_crossing_type_pairs(sf.pairs, sg.pairs);
}

}  // namespace pickdisc
