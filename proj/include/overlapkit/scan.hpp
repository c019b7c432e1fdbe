#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace overlapkit::scan {

/// Maximum of a metric over a flattened index range together with the
/// smallest index attaining it.
struct Extremum {
  double value = -std::numeric_limits<double>::infinity();
  std::size_t index = std::numeric_limits<std::size_t>::max();
};

/// Merge rule for partial results: larger value wins, ties go to the smaller
/// index. Commutative and associative, so the combined result is independent
/// of thread scheduling and identical to the serial scan.
inline bool better(const Extremum& a, const Extremum& b) {
  return a.value > b.value || (a.value == b.value && a.index < b.index);
}

/// Thread cap for parallel kernels. 0 means "let OpenMP decide". Reads
/// OVERLAPKIT_THREADS once on first use; set_threads overrides it.
int resolved_threads();
void set_threads(int n);

template <class Metric>
Extremum max_metric_serial(std::size_t count, Metric&& metric) {
  Extremum best;
  for (std::size_t i = 0; i < count; ++i) {
    double v = metric(i);
    if (v > best.value || (v == best.value && i < best.index)) {
      best.value = v;
      best.index = i;
    }
  }
  return best;
}

template <class Metric>
Extremum max_metric_parallel(std::size_t count, Metric&& metric) {
#ifdef _OPENMP
  Extremum best;
  const std::int64_t n = static_cast<std::int64_t>(count);
#pragma omp parallel num_threads(resolved_threads())
  {
    Extremum local;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      double v = metric(static_cast<std::size_t>(i));
      if (v > local.value ||
          (v == local.value && static_cast<std::size_t>(i) < local.index)) {
        local.value = v;
        local.index = static_cast<std::size_t>(i);
      }
    }
#pragma omp critical(overlapkit_scan_merge)
    {
      if (better(local, best)) best = local;
    }
  }
  return best;
#else
  return max_metric_serial(count, metric);
#endif
}

/// Default entry point: parallel kernel unless capped to one thread.
template <class Metric>
Extremum max_metric(std::size_t count, Metric&& metric) {
  if (resolved_threads() == 1) return max_metric_serial(count, metric);
  return max_metric_parallel(count, metric);
}

/// Indices where pred holds, in ascending order (deterministic under any
/// scheduling: per-thread chunks are sorted after the merge).
template <class Pred>
std::vector<std::size_t> collect_indices_serial(std::size_t count,
                                                Pred&& pred) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (pred(i)) out.push_back(i);
  }
  return out;
}

template <class Pred>
std::vector<std::size_t> collect_indices_parallel(std::size_t count,
                                                  Pred&& pred) {
#ifdef _OPENMP
  std::vector<std::size_t> out;
  const std::int64_t n = static_cast<std::int64_t>(count);
#pragma omp parallel num_threads(resolved_threads())
  {
    std::vector<std::size_t> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      if (pred(static_cast<std::size_t>(i))) {
        local.push_back(static_cast<std::size_t>(i));
      }
    }
#pragma omp critical(overlapkit_scan_collect)
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  return out;
#else
  return collect_indices_serial(count, pred);
#endif
}

template <class Pred>
std::vector<std::size_t> collect_indices(std::size_t count, Pred&& pred) {
  if (resolved_threads() == 1) return collect_indices_serial(count, pred);
  return collect_indices_parallel(count, pred);
}

}  // namespace overlapkit::scan
