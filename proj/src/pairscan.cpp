#include "pickdisc/pairscan.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

namespace pickdisc {

void pairscan_scalar(const SampleTable& table, double threshold_sq, int band,
                     int row_begin, int row_end, std::vector<PairCandidate>& out) {
  const int n = table.count;
  const int d = table.dim;
  const double* re = table.re.data();
  const double* im = table.im.data();

  for (int i = row_begin; i < row_end; ++i) {
    // Circular separation >= band: j in [i + band, i + n - band], clipped to j < n.
    const int j_lo = i + band;
    const int j_hi = std::min(n - 1, i + n - band);
    for (int j = j_lo; j <= j_hi; ++j) {
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

bool pairscan_avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

PairScanFn select_pairscan() {
#if defined(__x86_64__) || defined(_M_X64)
  if (pairscan_avx2_available()) return pairscan_avx2;
#endif
  return pairscan_scalar;
}

int parallelism_cap() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  if (const char* env = std::getenv("PICKDISC_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) hw = std::min(hw, static_cast<int>(v));
  }
  return hw;
}

std::vector<PairCandidate> find_close_pairs(const SampleTable& table, double threshold_sq,
                                            int band) {
  const int n = table.count;
  PairScanFn scan = select_pairscan();

  int threads = std::min(parallelism_cap(), std::max(1, n / 256));
  if (threads <= 1) {
    std::vector<PairCandidate> out;
    scan(table, threshold_sq, band, 0, n, out);
    return out;
  }

  std::vector<std::vector<PairCandidate>> chunks(static_cast<std::size_t>(threads));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    const int lo = n * t / threads;
    const int hi = n * (t + 1) / threads;
    pool.emplace_back([&, t, lo, hi] { scan(table, threshold_sq, band, lo, hi, chunks[t]); });
  }
  for (auto& th : pool) th.join();

  std::vector<PairCandidate> out;
  for (const auto& chunk : chunks) out.insert(out.end(), chunk.begin(), chunk.end());
  return out;
}

}  // namespace pickdisc
