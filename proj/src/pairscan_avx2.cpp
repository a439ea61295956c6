#include "pickdisc/pairscan.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>

namespace pickdisc {

// Same candidate set and the same rounding as pairscan_scalar: the per-pair
// accumulation order is sub, mul, add per coordinate with no FMA contraction.
void pairscan_avx2(const SampleTable& table, double threshold_sq, int band,
                   int row_begin, int row_end, std::vector<PairCandidate>& out) {
  const int n = table.count;
  const int d = table.dim;
  const double* re = table.re.data();
  const double* im = table.im.data();
  const __m256d thresh = _mm256_set1_pd(threshold_sq);

  for (int i = row_begin; i < row_end; ++i) {
    const int j_lo = i + band;
    const int j_hi = std::min(n - 1, i + n - band);

    int j = j_lo;
    for (; j + 4 <= j_hi + 1; j += 4) {
      __m256d acc = _mm256_setzero_pd();
      for (int c = 0; c < d; ++c) {
        const __m256d ri = _mm256_set1_pd(re[c * n + i]);
        const __m256d ii = _mm256_set1_pd(im[c * n + i]);
        const __m256d rj = _mm256_loadu_pd(re + c * n + j);
        const __m256d ij = _mm256_loadu_pd(im + c * n + j);
        const __m256d dr = _mm256_sub_pd(ri, rj);
        const __m256d di = _mm256_sub_pd(ii, ij);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(dr, dr));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(di, di));
      }
      const __m256d lt = _mm256_cmp_pd(acc, thresh, _CMP_LT_OQ);
      int mask = _mm256_movemask_pd(lt);
      if (mask) {
        alignas(32) double vals[4];
        _mm256_store_pd(vals, acc);
        for (int lane = 0; lane < 4; ++lane) {
          if (mask & (1 << lane)) out.push_back({i, j + lane, vals[lane]});
        }
      }
    }

    for (; j <= j_hi; ++j) {
      double acc = 0.0;
      for (int c = 0; c < d; ++c) {
        const double dr = re[c * n + i] - re[c * n + j];
        const double di = im[c * n + i] - im[c * n + j];
        acc = acc + dr * dr;
        acc = acc + di * di;
      }
      if (acc < threshold_sq) out.push_back({i, j, acc});
    }
  }
}

}  // namespace pickdisc

#endif  // x86-64
