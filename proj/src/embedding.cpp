#include "pickdisc/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "pickdisc/pairscan.hpp"

namespace pickdisc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kTransversalityFloor = 1e-12;
constexpr double kPm1CrossingTol = 1e-9;

double circular_arc_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

int circular_index_distance(int a, int b, int n) {
  int d = std::abs(a - b) % n;
  return std::min(d, n - d);
}

bool same_unordered_pair(const CrossingPair& p, const CrossingPair& q, double tol) {
  return (std::abs(p.xi - q.xi) < tol && std::abs(p.zeta - q.zeta) < tol) ||
         (std::abs(p.xi - q.zeta) < tol && std::abs(p.zeta - q.xi) < tol);
}

}  // namespace

Complex hermitian_inner(std::span<const Complex> u, std::span<const Complex> v) {
  Complex s(0.0, 0.0);
  for (std::size_t j = 0; j < u.size(); ++j) s += u[j] * std::conj(v[j]);
  return s;
}

double norm_sq(std::span<const Complex> u) {
  double s = 0.0;
  for (const Complex& x : u) s += std::norm(x);
  return s;
}

EmbeddingMap::EmbeddingMap(std::vector<RationalFunction> coordinates)
    : coords_(std::move(coordinates)) {
  if (coords_.empty()) {
    throw ParameterOutOfRange("embedding map needs at least one coordinate");
  }
  d1_.reserve(coords_.size());
  d2_.reserve(coords_.size());
  for (const RationalFunction& c : coords_) {
    if (!denominator_clear_of_closed_disc(c)) {
      throw DenominatorRootInDisc("denominator root in closed disc");
    }
    d1_.push_back(c.derivative());
    d2_.push_back(d1_.back().derivative());
  }
}

std::vector<Complex> EmbeddingMap::operator()(Complex z) const {
  std::vector<Complex> v(coords_.size());
  for (std::size_t j = 0; j < coords_.size(); ++j) v[j] = coords_[j](z);
  return v;
}

std::vector<Complex> EmbeddingMap::derivative(Complex z) const {
  std::vector<Complex> v(d1_.size());
  for (std::size_t j = 0; j < d1_.size(); ++j) v[j] = d1_[j](z);
  return v;
}

std::vector<Complex> EmbeddingMap::second_derivative(Complex z) const {
  std::vector<Complex> v(d2_.size());
  for (std::size_t j = 0; j < d2_.size(); ++j) v[j] = d2_[j](z);
  return v;
}

EmbeddingMap make_f_r(double r) {
  if (!(r > 0.0 && r < 1.0)) throw ParameterOutOfRange("make_f_r requires r in (0, 1)");
  const Complex s(1.0 / std::sqrt(2.0), 0.0);
  Polynomial z2(std::vector<Complex>{0.0, 0.0, 1.0});
  RationalFunction first(s * z2, Polynomial::one());
  RationalFunction b(Polynomial(std::vector<Complex>{-r, 1.0}),
                     Polynomial(std::vector<Complex>{1.0, -r}));
  RationalFunction second = s * (b * b);
  return EmbeddingMap({std::move(first), std::move(second)});
}

EmbeddingMap make_f_rs(double r, double s) {
  if (!(std::abs(r) < 1.0 && std::abs(s) < 1.0)) {
    throw ParameterOutOfRange("make_f_rs requires r, s in (-1, 1)");
  }
  if (r == s) throw DegenerateFamily("make_f_rs requires r != s");
  const Complex w(1.0 / std::sqrt(2.0), 0.0);
  auto blaschke_sq = [&](double t) {
    RationalFunction b(Polynomial(std::vector<Complex>{-t, 1.0}),
                       Polynomial(std::vector<Complex>{1.0, -t}));
    return w * (b * b);
  };
  return EmbeddingMap({blaschke_sq(r), blaschke_sq(s)});
}

EmbeddingMap make_injective_example() {
  const Complex s(1.0 / std::sqrt(2.0), 0.0);
  Polynomial z(std::vector<Complex>{0.0, 1.0});
  Polynomial z2(std::vector<Complex>{0.0, 0.0, 1.0});
  return EmbeddingMap({RationalFunction(s * z, Polynomial::one()),
                       RationalFunction(s * z2, Polynomial::one())});
}

EmbeddingMap compose_with_mobius(const EmbeddingMap& f, const MobiusTransform& m) {
  std::vector<RationalFunction> composed;
  composed.reserve(f.coordinates().size());
  for (const RationalFunction& c : f.coordinates()) composed.push_back(compose_mobius(c, m));
  return EmbeddingMap(std::move(composed));
}

std::vector<std::string> ValidationReport::failures() const {
  std::vector<std::string> out;
  if (!boundary_ok) out.push_back("boundary norm deviates from 1");
  if (!interior_ok) out.push_back("interior norm reaches 1");
  if (!derivative_ok) out.push_back("derivative vanishes");
  if (!transversality_ok) out.push_back("transversality violated");
  return out;
}

ValidationReport validate_embedding(const EmbeddingMap& f, int grid_size,
                                    const ValidationTolerances& tol) {
  if (grid_size < 64) throw ParameterOutOfRange("validation grid must have at least 64 samples");

  ValidationReport rep;
  rep.derivative_min = std::numeric_limits<double>::infinity();
  rep.transversality_min = std::numeric_limits<double>::infinity();
  bool imag_ok = true;

  for (int i = 0; i < grid_size; ++i) {
    const double theta = kTwoPi * i / grid_size;
    const Complex xi = std::polar(1.0, theta);
    const auto v = f(xi);
    rep.boundary_norm_dev = std::max(rep.boundary_norm_dev, std::abs(norm_sq(v) - 1.0));

    auto dv = f.derivative(xi);
    for (Complex& x : dv) x *= xi;
    const Complex a = hermitian_inner(v, dv);
    rep.transversality_min = std::min(rep.transversality_min, a.real());
    rep.transversality_imag_max = std::max(rep.transversality_imag_max, std::abs(a.imag()));
    if (std::abs(a.imag()) > tol.transversality * (1.0 + std::abs(a))) imag_ok = false;
  }

  for (double radius : {0.5, 0.9, 0.99}) {
    for (int i = 0; i < grid_size; ++i) {
      const Complex z = std::polar(radius, kTwoPi * i / grid_size);
      rep.interior_norm_max = std::max(rep.interior_norm_max, std::sqrt(norm_sq(f(z))));
    }
  }

  rep.derivative_min = std::sqrt(norm_sq(f.derivative(Complex(0.0, 0.0))));
  for (double radius : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99}) {
    for (int i = 0; i < grid_size; ++i) {
      const Complex z = std::polar(radius, kTwoPi * i / grid_size);
      rep.derivative_min = std::min(rep.derivative_min, std::sqrt(norm_sq(f.derivative(z))));
    }
  }

  rep.boundary_ok = rep.boundary_norm_dev <= tol.boundary;
  rep.interior_ok = rep.interior_norm_max < 1.0 - tol.interior_margin;
  rep.derivative_ok = rep.derivative_min > tol.derivative_min;
  rep.transversality_ok = imag_ok && rep.transversality_min > tol.transversality;
  return rep;
}

namespace {

struct RefineResult {
  bool converged = false;
  double theta = 0.0;
  double phi = 0.0;
  double residual = 0.0;
};

// Gauss-Newton on ||f(e^{i theta}) - f(e^{i phi})||^2; quadratic at a
// transversal crossing since the two tangent vectors are R-independent.
RefineResult refine_candidate(const EmbeddingMap& f, double theta, double phi,
                              const CrossingSearchOptions& opts) {
  RefineResult res;
  res.theta = theta;
  res.phi = phi;
  const int d = f.dimension();

  for (int iter = 0; iter < 60; ++iter) {
    const Complex xi = std::polar(1.0, res.theta);
    const Complex zeta = std::polar(1.0, res.phi);
    const auto v1 = f(xi);
    const auto v2 = f(zeta);
    const auto t1 = f.derivative(xi);
    const auto t2 = f.derivative(zeta);

    double a11 = 0.0, a12 = 0.0, a22 = 0.0, g1 = 0.0, g2 = 0.0;
    for (int c = 0; c < d; ++c) {
      const Complex r = v1[c] - v2[c];
      const Complex jt = Complex(0.0, 1.0) * xi * t1[c];
      const Complex jp = -Complex(0.0, 1.0) * zeta * t2[c];
      a11 += std::norm(jt);
      a22 += std::norm(jp);
      a12 += (std::conj(jt) * jp).real();
      g1 += (std::conj(jt) * r).real();
      g2 += (std::conj(jp) * r).real();
    }
    // Light damping keeps near-diagonal (rank-deficient) candidates tame.
    const double damp = 1e-12 * (a11 + a22);
    a11 += damp;
    a22 += damp;
    const double det = a11 * a22 - a12 * a12;
    if (det <= 0.0) break;

    double dtheta = (-a22 * g1 + a12 * g2) / det;
    double dphi = (a12 * g1 - a11 * g2) / det;
    const double step = std::abs(dtheta) + std::abs(dphi);
    if (step > 0.2) {
      dtheta *= 0.2 / step;
      dphi *= 0.2 / step;
    }
    res.theta += dtheta;
    res.phi += dphi;
    if (step < opts.newton_tol) {
      res.converged = true;
      break;
    }
  }

  const auto v1 = f(std::polar(1.0, res.theta));
  const auto v2 = f(std::polar(1.0, res.phi));
  double s = 0.0;
  for (int c = 0; c < d; ++c) s += std::norm(v1[c] - v2[c]);
  res.residual = std::sqrt(s);
  return res;
}

}  // namespace

CrossingScan find_self_crossings(const EmbeddingMap& f, int grid_size,
                                 const CrossingSearchOptions& opts) {
  if (grid_size < 64) throw ParameterOutOfRange("crossing grid must have at least 64 samples");

  const int n = grid_size;
  const int d = f.dimension();

  SampleTable table;
  table.count = n;
  table.dim = d;
  table.re.resize(static_cast<std::size_t>(n) * d);
  table.im.resize(static_cast<std::size_t>(n) * d);
  double max_tangent_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const Complex xi = std::polar(1.0, kTwoPi * i / n);
    const auto v = f(xi);
    for (int c = 0; c < d; ++c) {
      table.re[static_cast<std::size_t>(c) * n + i] = v[c].real();
      table.im[static_cast<std::size_t>(c) * n + i] = v[c].imag();
    }
    max_tangent_sq = std::max(max_tangent_sq, norm_sq(f.derivative(xi)));
  }

  // A crossing guarantees a grid pair within half a step of it in each
  // variable, i.e. at squared distance <= (||f'|| h)^2. The configured
  // threshold is the floor; steep maps need the adaptive value.
  const double step = kTwoPi / n;
  const double reachable = 1.44 * max_tangent_sq * step * step;
  const double threshold_sq = std::max(opts.candidate_threshold_sq, reachable);

  const int band = std::max(2, n / 512);
  auto candidates = find_close_pairs(table, threshold_sq, band);
  std::sort(candidates.begin(), candidates.end(),
            [](const PairCandidate& a, const PairCandidate& b) { return a.dist_sq < b.dist_sq; });

  // One seed per basin: greedy pick by distance, suppressing neighbours.
  const int suppress = 8;
  std::vector<PairCandidate> seeds;
  for (const PairCandidate& cand : candidates) {
    bool covered = false;
    for (const PairCandidate& s : seeds) {
      if (circular_index_distance(cand.i, s.i, n) <= suppress &&
          circular_index_distance(cand.j, s.j, n) <= suppress) {
        covered = true;
        break;
      }
    }
    if (!covered) seeds.push_back(cand);
  }

  CrossingScan scan;
  for (const PairCandidate& seed : seeds) {
    RefineResult rr =
        refine_candidate(f, kTwoPi * seed.i / n, kTwoPi * seed.j / n, opts);
    const double separation = circular_arc_distance(rr.theta, rr.phi);
    if (rr.residual <= opts.residual_tol) {
      if (separation <= opts.cluster_radius) continue;  // collapsed onto the diagonal
      Complex xi = std::polar(1.0, rr.theta);
      Complex zeta = std::polar(1.0, rr.phi);
      if (std::arg(zeta) < std::arg(xi)) std::swap(xi, zeta);
      CrossingPair pair{xi, zeta, rr.residual};
      bool merged = false;
      for (CrossingPair& existing : scan.pairs) {
        if (same_unordered_pair(existing, pair, opts.cluster_radius)) {
          if (pair.residual < existing.residual) existing = pair;
          merged = true;
          break;
        }
      }
      if (!merged) scan.pairs.push_back(pair);
    } else if (separation > 16.0 * kTwoPi / n) {
      // A separated candidate the refinement could not settle.
      ++scan.refinement_failures;
    }
  }

  std::sort(scan.pairs.begin(), scan.pairs.end(), [](const CrossingPair& a, const CrossingPair& b) {
    if (std::arg(a.xi) != std::arg(b.xi)) return std::arg(a.xi) < std::arg(b.xi);
    return std::arg(a.zeta) < std::arg(b.zeta);
  });
  return scan;
}

double semi_invariant(const EmbeddingMap& f, Complex xi) {
  if (std::abs(std::abs(xi) - 1.0) > 1e-9) {
    throw ParameterOutOfRange("semi_invariant requires |xi| = 1");
  }
  const auto v = f(xi);
  auto dv = f.derivative(xi);
  for (Complex& x : dv) x *= xi;
  const Complex a = hermitian_inner(v, dv);
  if (std::abs(a.imag()) > 1e-9 * (1.0 + std::abs(a))) {
    throw TransversalityViolation("semi-invariant has a large imaginary part");
  }
  if (!(a.real() > kTransversalityFloor)) {
    throw TransversalityViolation("semi-invariant is not positive");
  }
  return a.real();
}

double transform_semi_invariant(const EmbeddingMap& f, const MobiusTransform& m, Complex xi) {
  if (std::abs(std::abs(xi) - 1.0) > 1e-9) {
    throw ParameterOutOfRange("transform_semi_invariant requires |xi| = 1");
  }
  const double base = semi_invariant(f, m(xi));
  const double factor = (1.0 - std::norm(m.alpha())) / std::norm(m.alpha() - xi);
  return base * factor;
}

bool has_crossing_at_pm1(const EmbeddingMap& f, double tol) {
  const auto v1 = f(Complex(1.0, 0.0));
  const auto v2 = f(Complex(-1.0, 0.0));
  double s = 0.0;
  for (int c = 0; c < f.dimension(); ++c) s += std::norm(v1[c] - v2[c]);
  return std::sqrt(s) <= tol;
}

double BoundaryCollisionData::bound_constant() const {
  return 0.25 * (C / (A * A) + D / (B * B) + 2.0 * E.real() / (A * B));
}

BoundaryCollisionData collision_data(const EmbeddingMap& f) {
  if (!has_crossing_at_pm1(f, kPm1CrossingTol)) {
    throw NotNormalized("collision data requires the crossing normalized to +-1");
  }
  const Complex one(1.0, 0.0);
  const Complex minus_one(-1.0, 0.0);

  BoundaryCollisionData data;
  data.A = semi_invariant(f, one);        // <f(1), f'(1)>
  data.B = semi_invariant(f, minus_one);  // -<f(-1), f'(-1)>

  const auto d1p = f.derivative(one);
  const auto d1m = f.derivative(minus_one);
  data.C = norm_sq(d1p);
  data.D = norm_sq(d1m);
  data.E = hermitian_inner(d1p, d1m);
  data.F = 0.5 * hermitian_inner(f(one), f.second_derivative(one));
  data.G = 0.5 * hermitian_inner(f(minus_one), f.second_derivative(minus_one));
  return data;
}

}  // namespace pickdisc
