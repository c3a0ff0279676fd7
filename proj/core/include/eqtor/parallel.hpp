#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace eqtor {

// Worker count: hardware concurrency, capped by EQTOR_THREADS when set.
inline unsigned thread_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* e = std::getenv("EQTOR_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(e, &end, 10);
    if (end != e && v > 0) n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  return n;
}

// Runs f(i) for i in [0, n). Each index is handled by exactly one worker, so
// results written to slot i are deterministic regardless of scheduling.
template <class F>
void parallel_for(std::size_t n, F&& f) {
  const unsigned T = std::min<std::size_t>(thread_count(), std::max<std::size_t>(n, 1));
  if (T <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(T);
  for (unsigned t = 0; t < T; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += T) f(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace eqtor
