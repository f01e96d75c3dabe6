#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <thread>
#include <vector>

namespace filling::detail {

struct SweepMin {
  double value = std::numeric_limits<double>::infinity();
  std::size_t index = std::numeric_limits<std::size_t>::max();
};

// NaN beats everything so a broken evaluation can never hide; ties go to the
// lower index, which makes the reduction independent of how work is split.
inline bool better(const SweepMin& a, const SweepMin& b) {
  const bool an = std::isnan(a.value), bn = std::isnan(b.value);
  if (an != bn) return an;
  if (!an && a.value != b.value) return a.value < b.value;
  return a.index < b.index;
}

inline unsigned resolve_workers(unsigned requested) {
  if (requested) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Minimum of eval(i) over i in [0, count), computed on contiguous blocks.
template <class Eval>
SweepMin parallel_min(std::size_t count, unsigned workers, const Eval& eval) {
  workers = static_cast<unsigned>(
      std::min<std::size_t>(resolve_workers(workers), std::max<std::size_t>(count, 1)));
  std::vector<SweepMin> partial(workers);
  auto run = [&](unsigned w) {
    const std::size_t lo = count * w / workers, hi = count * (w + 1) / workers;
    SweepMin best;
    for (std::size_t i = lo; i < hi; ++i) {
      double v;
      try {
        v = eval(i);
      } catch (...) {
        v = std::numeric_limits<double>::quiet_NaN();
      }
      SweepMin cand{v, i};
      if (better(cand, best)) best = cand;
    }
    partial[w] = best;
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  SweepMin best;
  for (const auto& p : partial)
    if (better(p, best)) best = p;
  return best;
}

}  // namespace filling::detail
