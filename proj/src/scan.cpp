#include "overlapkit/scan.hpp"

#include <atomic>
#include <cstdlib>

namespace overlapkit::scan {

namespace {

int read_env_threads() {
  const char* raw = std::getenv("OVERLAPKIT_THREADS");
  if (!raw || !*raw) return 0;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (end == raw || v < 0) return 0;
  return static_cast<int>(v);
}

std::atomic<int> g_threads{-1};  // -1: not yet resolved

}  // namespace

int resolved_threads() {
  int t = g_threads.load(std::memory_order_relaxed);
  if (t < 0) {
    t = read_env_threads();
    g_threads.store(t, std::memory_order_relaxed);
  }
  if (t > 0) return t;
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int n) { g_threads.store(n < 0 ? 0 : n, std::memory_order_relaxed); }

}  // namespace overlapkit::scan
