#pragma once

#include <cstddef>
#include <vector>

namespace pickdisc {

// Boundary samples in planar layout: coordinate c of sample i lives at
// re[c * count + i] / im[c * count + i]. Samples are understood as points on
// a circle, so index distance wraps around.
struct SampleTable {
  int count = 0;
  int dim = 0;
  std::vector<double> re;
  std::vector<double> im;
};

struct PairCandidate {
  int i = 0;
  int j = 0;
  double dist_sq = 0.0;
};

// Scans rows i in [row_begin, row_end) against all j > i whose circular index
// separation is at least `band`, appending every pair with squared distance
// below `threshold_sq`. All implementations emit candidates in identical
// (i, j)-ascending order with identical arithmetic, so variants can be
// compared bit for bit.
using PairScanFn = void (*)(const SampleTable& table, double threshold_sq, int band,
                            int row_begin, int row_end, std::vector<PairCandidate>& out);

void pairscan_scalar(const SampleTable& table, double threshold_sq, int band,
                     int row_begin, int row_end, std::vector<PairCandidate>& out);

#if defined(__x86_64__) || defined(_M_X64)
void pairscan_avx2(const SampleTable& table, double threshold_sq, int band,
                   int row_begin, int row_end, std::vector<PairCandidate>& out);
#endif

bool pairscan_avx2_available();

// Best implementation for the current CPU.
PairScanFn select_pairscan();

// Number of worker threads the library may use; honors PICKDISC_THREADS.
int parallelism_cap();

// Full scan over all rows, parallelized across row chunks with a
// deterministic merge. Candidates come back sorted by (i, j).
std::vector<PairCandidate> find_close_pairs(const SampleTable& table, double threshold_sq,
                                            int band);

}  // namespace pickdisc
