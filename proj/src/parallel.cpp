#include "seqsel/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace seqsel {

namespace {
int g_workers = 0;  // 0 = not set explicitly

int env_workers() {
  const char* s = std::getenv("SEQSEL_WORKERS");
  if (s == nullptr || *s == '\0') return 0;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || v < 1) return 0;
  return static_cast<int>(v);
}
}  // namespace

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int worker_count() {
#ifdef _OPENMP
  if (g_workers > 0) return g_workers;
  int e = env_workers();
  if (e > 0) return e;
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_workers(int n) { g_workers = n > 0 ? n : 0; }

namespace detail {

void parallel_blocks(std::size_t n_blocks, void* ctx, void (*body)(void*, std::size_t)) {
#ifdef _OPENMP
  const int workers = worker_count();
  if (workers > 1 && n_blocks > 1) {
    const long long nb = static_cast<long long>(n_blocks);
#pragma omp parallel for schedule(static) num_threads(workers)
    for (long long b = 0; b < nb; ++b) {
      body(ctx, static_cast<std::size_t>(b));
    }
    return;
  }
#endif
  for (std::size_t b = 0; b < n_blocks; ++b) body(ctx, b);
}

}  // namespace detail
}  // namespace seqsel
