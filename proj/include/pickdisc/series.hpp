#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pickdisc/exact.hpp"

namespace pickdisc {

// Floating zero band for reciprocal coefficients: below kSeriesZeroTol is
// zero, above kSeriesNonzeroTol is nonzero, in between is undecidable.
inline constexpr double kSeriesZeroTol = 1e-12;
inline constexpr double kSeriesNonzeroTol = 1e-8;

// Nonnegative kernel coefficients c_0..c_N of a rotation-invariant kernel,
// either exact-rational or floating.
class CoefficientSequence {
 public:
  enum class Mode { Exact, Floating };

  static CoefficientSequence exact(std::vector<Rat> values, std::string generator = "custom");
  static CoefficientSequence floating(std::vector<double> values, std::string generator = "custom");

  Mode mode() const { return mode_; }
  bool is_exact() const { return mode_ == Mode::Exact; }
  const std::string& generator() const { return generator_; }

  // Number of coefficients (N + 1).
  std::size_t size() const { return values_.size(); }
  int truncation() const { return static_cast<int>(values_.size()) - 1; }

  double value(std::size_t n) const { return values_[n]; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<Rat>& exact_values() const;

  // Indices n with c_n = 0 (the monomial z^n is missing from the space).
  std::vector<int> zero_indices() const;

 private:
  CoefficientSequence() = default;

  Mode mode_ = Mode::Floating;
  std::vector<double> values_;   // floating view, always populated
  std::vector<Rat> exact_;       // populated in exact mode
  std::string generator_;
};

// c_n = (1 + n)^s for n = 0..N; exact when s is an integer.
CoefficientSequence weighted_hardy_coeffs(double s, int N);

// Szego coefficients c_n = 1 (exact).
CoefficientSequence szego_coeffs(int N);

// Bergman coefficients c_n = n + 1 (exact).
CoefficientSequence bergman_coeffs(int N);

// Rescale so c_0 = 1; throws ZeroAtOrigin when c_0 = 0.
CoefficientSequence normalize(const CoefficientSequence& c);

// Coefficients r_n of 1 - 1/k from the recurrence
// r_n = c_n - sum_{m=1}^{n-1} c_m r_{n-m}; requires c_0 = 1.
struct ReciprocalReport {
  CoefficientSequence::Mode mode = CoefficientSequence::Mode::Floating;
  std::vector<double> r;       // r[0] = 0, then r_1..r_N
  std::vector<Rat> r_exact;    // exact mode only
  double sum_r = 0.0;
  bool all_nonnegative = false;
};
ReciprocalReport reciprocal_coeffs(const CoefficientSequence& c);

// Inverse of the reciprocal: rebuild c_0..c_N from r_1..r_N via
// c_n = sum_{m=0}^{n-1} c_m r_{n-m}.
CoefficientSequence coeffs_from_reciprocal(const std::vector<double>& r, int N);
CoefficientSequence coeffs_from_reciprocal_exact(const std::vector<Rat>& r, int N);

enum class PickVerdict { CompletePick, NotCompletePick, Inconclusive };

struct CompletePickReport {
  PickVerdict verdict = PickVerdict::Inconclusive;
  // Index of the first clearly negative r_n (when the verdict is negative
  // because of a sign), -1 otherwise.
  int first_bad_index = -1;
  bool sum_exceeds_one = false;
  double sum_r = 0.0;
};
CompletePickReport complete_pick_check(const CoefficientSequence& c);

struct EmbeddingDimensionVerdict {
  enum class Kind { Finite, InfiniteUpToTruncation };
  Kind kind = Kind::InfiniteUpToTruncation;
  int dimension = 0;  // meaningful when finite
  int truncation = 0;
  std::vector<int> nonzero_indices;
  double tolerance_used = 0.0;
};
EmbeddingDimensionVerdict embedding_dimension(const CoefficientSequence& c);

struct RenewalReport {
  double mu = 0.0;      // sum n r_n
  double limit = 0.0;   // 1 / mu when the renewal limit applies
  double c_tail_min = 0.0;
  double c_tail_max = 0.0;
  bool hardy_equivalent = false;
  double sum_r = 0.0;
  bool sum_is_one = false;         // sum r_n = 1 within tolerance
  bool extension_predicted = false;  // q(1) < 1: the kernel extends past the disc
  bool periodic_support = false;
  int support_gcd = 1;
};
RenewalReport renewal_limit(const CoefficientSequence& c);

}  // namespace pickdisc
