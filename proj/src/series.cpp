#include "pickdisc/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

namespace pickdisc {

namespace {

constexpr double kSumOneTol = 1e-9;
constexpr double kRenewalDelta = 1e-3;

std::vector<double> to_doubles(const std::vector<Rat>& values) {
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = static_cast<double>(values[i]);
  return out;
}

template <class T>
std::vector<T> reciprocal_recurrence(const std::vector<T>& c) {
  // r_n = c_n - sum_{m=1}^{n-1} c_m r_{n-m}, n >= 1.
  std::vector<T> r(c.size(), T{});
  for (std::size_t n = 1; n < c.size(); ++n) {
    T acc = c[n];
    for (std::size_t m = 1; m < n; ++m) acc -= c[m] * r[n - m];
    r[n] = acc;
  }
  return r;
}

template <class T>
std::vector<T> forward_recurrence(const std::vector<T>& r, int N) {
  // c_0 = 1, c_n = sum_{m=0}^{n-1} c_m r_{n-m}.
  std::vector<T> c(static_cast<std::size_t>(N) + 1, T{});
  c[0] = T(1);
  for (int n = 1; n <= N; ++n) {
    T acc{};
    for (int m = 0; m < n; ++m) {
      const std::size_t lag = static_cast<std::size_t>(n - m);
      if (lag < r.size()) acc += c[static_cast<std::size_t>(m)] * r[lag];
    }
    c[static_cast<std::size_t>(n)] = acc;
  }
  return c;
}

}  // namespace

CoefficientSequence CoefficientSequence::exact(std::vector<Rat> values, std::string generator) {
  if (values.empty()) throw ParameterOutOfRange("coefficient sequence must not be empty");
  for (const Rat& v : values) {
    if (v < 0) throw ParameterOutOfRange("kernel coefficients must be nonnegative");
  }
  CoefficientSequence c;
  c.mode_ = Mode::Exact;
  c.values_ = to_doubles(values);
  c.exact_ = std::move(values);
  c.generator_ = std::move(generator);
  return c;
}

CoefficientSequence CoefficientSequence::floating(std::vector<double> values,
                                                  std::string generator) {
  if (values.empty()) throw ParameterOutOfRange("coefficient sequence must not be empty");
  for (double v : values) {
    if (!(v >= 0.0)) throw ParameterOutOfRange("kernel coefficients must be nonnegative");
  }
  CoefficientSequence c;
  c.mode_ = Mode::Floating;
  c.values_ = std::move(values);
  c.generator_ = std::move(generator);
  return c;
}

const std::vector<Rat>& CoefficientSequence::exact_values() const {
  if (mode_ != Mode::Exact) throw ParameterOutOfRange("sequence is not in exact mode");
  return exact_;
}

std::vector<int> CoefficientSequence::zero_indices() const {
  std::vector<int> out;
  for (std::size_t n = 0; n < values_.size(); ++n) {
    const bool zero = is_exact() ? exact_[n] == 0 : values_[n] == 0.0;
    if (zero) out.push_back(static_cast<int>(n));
  }
  return out;
}

CoefficientSequence weighted_hardy_coeffs(double s, int N) {
  if (N < 1) throw ParameterOutOfRange("weighted Hardy truncation must be >= 1");
  const bool integral = s == std::floor(s) && std::abs(s) < 60.0;
  char buf[48];
  std::snprintf(buf, sizeof(buf), "weighted_hardy(%g)", s);
  std::string tag(buf);
  if (integral) {
    const long e = static_cast<long>(s);
    std::vector<Rat> c(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
      Rat base(n + 1);
      Rat p(1);
      for (long i = 0; i < std::labs(e); ++i) p *= base;
      c[static_cast<std::size_t>(n)] = e >= 0 ? p : Rat(1) / p;
    }
    return CoefficientSequence::exact(std::move(c), std::move(tag));
  }
  std::vector<double> c(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) c[static_cast<std::size_t>(n)] = std::pow(1.0 + n, s);
  return CoefficientSequence::floating(std::move(c), std::move(tag));
}

CoefficientSequence szego_coeffs(int N) {
  if (N < 1) throw ParameterOutOfRange("truncation must be >= 1");
  return CoefficientSequence::exact(std::vector<Rat>(static_cast<std::size_t>(N) + 1, Rat(1)),
                                    "szego");
}

CoefficientSequence bergman_coeffs(int N) {
  if (N < 1) throw ParameterOutOfRange("truncation must be >= 1");
  std::vector<Rat> c(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) c[static_cast<std::size_t>(n)] = Rat(n + 1);
  return CoefficientSequence::exact(std::move(c), "custom");
}

CoefficientSequence normalize(const CoefficientSequence& c) {
  if (c.is_exact()) {
    const auto& v = c.exact_values();
    if (v[0] == 0) throw ZeroAtOrigin("c_0 = 0: kernel vanishes at the origin");
    if (v[0] == 1) return c;
    std::vector<Rat> out(v.size());
    for (std::size_t n = 0; n < v.size(); ++n) out[n] = v[n] / v[0];
    return CoefficientSequence::exact(std::move(out), c.generator());
  }
  const auto& v = c.values();
  if (v[0] == 0.0) throw ZeroAtOrigin("c_0 = 0: kernel vanishes at the origin");
  if (v[0] == 1.0) return c;
  std::vector<double> out(v.size());
  for (std::size_t n = 0; n < v.size(); ++n) out[n] = v[n] / v[0];
  return CoefficientSequence::floating(std::move(out), c.generator());
}

ReciprocalReport reciprocal_coeffs(const CoefficientSequence& c) {
  ReciprocalReport rep;
  rep.mode = c.mode();
  if (c.is_exact()) {
    if (c.exact_values()[0] != 1) throw NotNormalized("reciprocal requires c_0 = 1");
    rep.r_exact = reciprocal_recurrence(c.exact_values());
    rep.r = to_doubles(rep.r_exact);
    rep.all_nonnegative =
        std::all_of(rep.r_exact.begin(), rep.r_exact.end(), [](const Rat& v) { return v >= 0; });
    Rat sum(0);
    for (const Rat& v : rep.r_exact) sum += v;
    rep.sum_r = static_cast<double>(sum);
    return rep;
  }
  if (c.values()[0] != 1.0) throw NotNormalized("reciprocal requires c_0 = 1");
  rep.r = reciprocal_recurrence(c.values());
  rep.all_nonnegative =
      std::all_of(rep.r.begin(), rep.r.end(), [](double v) { return v >= 0.0; });
  rep.sum_r = std::accumulate(rep.r.begin(), rep.r.end(), 0.0);
  return rep;
}

CoefficientSequence coeffs_from_reciprocal(const std::vector<double>& r, int N) {
  return CoefficientSequence::floating(forward_recurrence(r, N));
}

CoefficientSequence coeffs_from_reciprocal_exact(const std::vector<Rat>& r, int N) {
  return CoefficientSequence::exact(forward_recurrence(r, N));
}

CompletePickReport complete_pick_check(const CoefficientSequence& c) {
  const ReciprocalReport rec = reciprocal_coeffs(c);
  CompletePickReport rep;
  rep.sum_r = rec.sum_r;

  if (c.is_exact()) {
    for (std::size_t n = 1; n < rec.r_exact.size(); ++n) {
      if (rec.r_exact[n] < 0) {
        rep.verdict = PickVerdict::NotCompletePick;
        rep.first_bad_index = static_cast<int>(n);
        return rep;
      }
    }
    Rat sum(0);
    for (const Rat& v : rec.r_exact) sum += v;
    if (sum > 1) {
      rep.verdict = PickVerdict::NotCompletePick;
      rep.sum_exceeds_one = true;
      return rep;
    }
    rep.verdict = PickVerdict::CompletePick;
    return rep;
  }

  bool ambiguous = false;
  for (std::size_t n = 1; n < rec.r.size(); ++n) {
    if (rec.r[n] < -kSeriesZeroTol) {
      rep.verdict = PickVerdict::NotCompletePick;
      rep.first_bad_index = static_cast<int>(n);
      return rep;
    }
    if (rec.r[n] < 0.0) ambiguous = true;  // negative but inside the zero band
  }
  if (rep.sum_r > 1.0 + kSeriesZeroTol) {
    rep.verdict = PickVerdict::NotCompletePick;
    rep.sum_exceeds_one = true;
    return rep;
  }
  rep.verdict = ambiguous ? PickVerdict::Inconclusive : PickVerdict::CompletePick;
  return rep;
}

EmbeddingDimensionVerdict embedding_dimension(const CoefficientSequence& c) {
  const CompletePickReport cp = complete_pick_check(c);
  if (cp.verdict != PickVerdict::CompletePick) {
    throw NotCompletePick("embedding dimension is defined for complete Pick sequences");
  }
  const ReciprocalReport rec = reciprocal_coeffs(c);
  const int N = c.truncation();

  EmbeddingDimensionVerdict verdict;
  verdict.truncation = N;

  if (c.is_exact()) {
    verdict.tolerance_used = 0.0;
    int last_nonzero = 0;
    for (std::size_t n = 1; n < rec.r_exact.size(); ++n) {
      if (rec.r_exact[n] != 0) {
        verdict.nonzero_indices.push_back(static_cast<int>(n));
        last_nonzero = static_cast<int>(n);
      }
    }
    if (last_nonzero == N || verdict.nonzero_indices.empty()) {
      // No exact cutoff inside the truncation window.
      verdict.kind = EmbeddingDimensionVerdict::Kind::InfiniteUpToTruncation;
      return verdict;
    }
    verdict.kind = EmbeddingDimensionVerdict::Kind::Finite;
    verdict.dimension = static_cast<int>(verdict.nonzero_indices.size());
    return verdict;
  }

  verdict.tolerance_used = kSeriesZeroTol;
  int last_retained = 0;
  bool clean = true;
  for (std::size_t n = 1; n < rec.r.size(); ++n) {
    const double mag = std::abs(rec.r[n]);
    if (mag >= kSeriesZeroTol) {
      last_retained = static_cast<int>(n);
      if (mag <= kSeriesNonzeroTol) clean = false;  // inside the undecidable band
      verdict.nonzero_indices.push_back(static_cast<int>(n));
    }
  }
  if (!clean || last_retained == N || verdict.nonzero_indices.empty()) {
    verdict.kind = EmbeddingDimensionVerdict::Kind::InfiniteUpToTruncation;
    verdict.nonzero_indices.clear();
    for (std::size_t n = 1; n < rec.r.size(); ++n) {
      if (std::abs(rec.r[n]) >= kSeriesZeroTol) verdict.nonzero_indices.push_back(static_cast<int>(n));
    }
    return verdict;
  }
  verdict.kind = EmbeddingDimensionVerdict::Kind::Finite;
  verdict.dimension = static_cast<int>(verdict.nonzero_indices.size());
  return verdict;
}

RenewalReport renewal_limit(const CoefficientSequence& c) {
  const CompletePickReport cp = complete_pick_check(c);
  if (cp.verdict == PickVerdict::NotCompletePick) {
    throw NotCompletePick("renewal limit is defined for complete Pick sequences");
  }
  const ReciprocalReport rec = reciprocal_coeffs(c);
  const int N = c.truncation();

  RenewalReport rep;
  rep.sum_r = rec.sum_r;
  rep.sum_is_one = std::abs(rec.sum_r - 1.0) <= kSumOneTol;
  rep.extension_predicted = !rep.sum_is_one && rec.sum_r < 1.0;

  double mu = 0.0;
  for (std::size_t n = 1; n < rec.r.size(); ++n) mu += static_cast<double>(n) * rec.r[n];
  rep.mu = mu;

  int gcd = 0;
  for (std::size_t n = 1; n < rec.r.size(); ++n) {
    if (rec.r[n] > kSeriesZeroTol) gcd = std::gcd(gcd, static_cast<int>(n));
  }
  rep.support_gcd = gcd == 0 ? 1 : gcd;
  rep.periodic_support = rep.support_gcd > 1;

  const int window_begin = std::max(1, N - N / 4);
  rep.c_tail_min = std::numeric_limits<double>::infinity();
  rep.c_tail_max = -std::numeric_limits<double>::infinity();
  for (int n = window_begin; n <= N; ++n) {
    const double v = c.value(static_cast<std::size_t>(n));
    rep.c_tail_min = std::min(rep.c_tail_min, v);
    rep.c_tail_max = std::max(rep.c_tail_max, v);
  }

  if (rep.sum_is_one && !rep.periodic_support && mu > 0.0) {
    rep.limit = 1.0 / mu;
    rep.hardy_equivalent = rep.c_tail_min >= rep.limit - kRenewalDelta &&
                           rep.c_tail_max <= 1.0 + kSeriesZeroTol;
  }
  return rep;
}

}  // namespace pickdisc
