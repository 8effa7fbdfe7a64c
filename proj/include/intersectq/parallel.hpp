#ifndef INTERSECTQ_PARALLEL_HPP
#define INTERSECTQ_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <functional>

namespace intersectq {

/// Worker count: INTERSECTQ_THREADS if set, else hardware concurrency.
std::size_t thread_count();

/**
 * Runs body(i) for i in [0, n) on up to thread_count() threads.
 * Indices are split into contiguous blocks; callers write results by index,
 * so output does not depend on the thread count. The first exception thrown
 * by any worker is rethrown.
 */
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace intersectq

#endif
