#ifndef SKIPVEC_PARALLEL_HPP
#define SKIPVEC_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace skipvec {

/// Worker count: SKIPVEC_THREADS if set (>= 1), else hardware concurrency.
std::size_t worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. Callers write
/// results into per-index slots, so output never depends on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace skipvec

#endif  // SKIPVEC_PARALLEL_HPP
