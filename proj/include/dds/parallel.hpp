#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace dds {

// Caps and worker count shared by every exhaustive state sweep.
struct SweepOptions {
  unsigned workers = 1;
  std::uint64_t state_cap = std::uint64_t{1} << 24;
};

// Splits [0, n) into `workers` contiguous chunks and runs body(chunk, begin, end)
// on each. Chunk boundaries depend only on n and workers, so callers that
// merge per-chunk results in chunk order get worker-independent output.
template <class Body>
void parallel_chunks(std::uint64_t n, unsigned workers, Body&& body) {
  workers = std::max(1u, workers);
  if (workers == 1 || n < 2 * workers) {
    body(0u, std::uint64_t{0}, n);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  const std::uint64_t step = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min(n, w * step);
    const std::uint64_t end = std::min(n, begin + step);
    threads.emplace_back([&, w, begin, end] {
      try {
        body(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace dds
