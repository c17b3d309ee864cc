#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace semipredual {

/// Runs body(i) for i in [0, count) on up to `jobs` threads. Iterations are
/// assigned in contiguous blocks; body must only touch per-index state.
template <typename Body>
void parallel_for(std::size_t count, std::size_t jobs, Body&& body) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      body(i);
    }
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  std::size_t const block = (count + jobs - 1) / jobs;
  for (std::size_t j = 0; j < jobs; ++j) {
    std::size_t const begin = j * block;
    std::size_t const end   = std::min(count, begin + block);
    if (begin >= end) {
      break;
    }
    workers.emplace_back([begin, end, &body] {
      for (std::size_t i = begin; i < end; ++i) {
        body(i);
      }
    });
  }
  for (auto& w : workers) {
    w.join();
  }
}

}  // namespace semipredual
