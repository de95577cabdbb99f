#ifndef QUE_PARALLEL_HPP
#define QUE_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace que {

// Global thread cap set by the CLI (--threads).  Work is always partitioned
// into the same index blocks and reduced in index order, so results are
// bit-identical for every cap value.
inline int& thread_cap_ref() {
  static int cap = 1;
  return cap;
}
inline int thread_cap() { return thread_cap_ref(); }
inline void set_thread_cap(int n) { thread_cap_ref() = n < 1 ? 1 : n; }

// Runs fn(i) for i in [0, count) across at most thread_cap() threads.
// fn must only write to per-index state.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  int nthreads = thread_cap();
  if (nthreads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t nt = std::min<std::size_t>(nthreads, count);
  for (std::size_t t = 0; t < nt; ++t) {
    pool.emplace_back([&, t]() {
      for (std::size_t i = t; i < count; i += nt) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

// Fixed-order pairwise (tree) reduction: combine(slot[0..count)) independent
// of thread count.  T must be default-constructible via init.
template <typename T, typename Combine>
T tree_reduce(std::vector<T>& slots, T init, Combine combine) {
  if (slots.empty()) return init;
  std::size_t n = slots.size();
  while (n > 1) {
    std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i + half < n; ++i) {
      slots[i] = combine(slots[i], slots[i + half]);
    }
    n = half;
  }
  return combine(init, slots[0]);
}

}  // namespace que

#endif
