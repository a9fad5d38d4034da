#ifndef SEQSEL_PARALLEL_HPP
#define SEQSEL_PARALLEL_HPP

#include <cstddef>
#include <vector>

namespace seqsel {

// Worker-pool control shared by all OpenMP kernels. The effective count is,
// in order: set_workers() if called, the SEQSEL_WORKERS environment variable,
// then the OpenMP default. Builds without OpenMP always report 1.
int worker_count();
void set_workers(int n);
bool openmp_enabled();

namespace detail {
void parallel_blocks(std::size_t n_blocks, void* ctx, void (*body)(void*, std::size_t));
}

// Deterministic blocked map-reduce.
//
// The index range [0, n) is cut into fixed-size blocks, each block is mapped
// to a partial value (possibly on different threads), and the partials are
// folded serially in block order. The block grid depends only on `n` and
// `block`, never on the thread count, so results are bitwise identical for
// 1 worker and for N workers.
template <typename T, typename MapFn, typename JoinFn>
T blocked_reduce(std::size_t n, std::size_t block, T init, MapFn map_block, JoinFn join) {
  if (n == 0) return init;
  if (block == 0) block = 1;
  const std::size_t n_blocks = (n + block - 1) / block;
  std::vector<T> partials(n_blocks);

  struct Ctx {
    std::size_t n, block;
    std::vector<T>* partials;
    MapFn* map;
  } ctx{n, block, &partials, &map_block};

  detail::parallel_blocks(n_blocks, &ctx, [](void* p, std::size_t b) {
    Ctx& c = *static_cast<Ctx*>(p);
    const std::size_t lo = b * c.block;
    const std::size_t hi = lo + c.block < c.n ? lo + c.block : c.n;
    (*c.partials)[b] = (*c.map)(lo, hi);
  });

  T acc = init;
  for (std::size_t b = 0; b < n_blocks; ++b) acc = join(acc, partials[b]);
  return acc;
}

// Parallel for over [0, n): each index writes only its own outputs, so no
// reduction order is involved.
template <typename Fn>
void parallel_for(std::size_t n, Fn fn) {
  struct Ctx {
    Fn* fn;
  } ctx{&fn};
  detail::parallel_blocks(n, &ctx, [](void* p, std::size_t i) {
    (*static_cast<Ctx*>(p)->fn)(i);
  });
}

}  // namespace seqsel

#endif  // SEQSEL_PARALLEL_HPP
