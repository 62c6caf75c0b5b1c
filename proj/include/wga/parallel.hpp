#pragma once

// Worker-count policy and loop helper for the OpenMP grid kernels.
// WGA_THREADS, when set to a positive integer, caps the number of threads.

#include <cstddef>
#include <exception>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wga {

int worker_count();

inline bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

/// Runs body(i) for i in [0, n) across worker_count() threads. Each index is
/// independent and writes only its own output slot. If any iteration throws,
/// the exception from the lowest failing index is rethrown after the loop,
/// so error reporting does not depend on scheduling.
template <class Body>
void parallel_for(std::ptrdiff_t n, Body&& body) {
  std::exception_ptr first_error;
  std::ptrdiff_t first_index = std::numeric_limits<std::ptrdiff_t>::max();
#pragma omp parallel for schedule(dynamic, 4) num_threads(worker_count())
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(wga_parallel_for_error)
      {
        if (i < first_index) {
          first_index = i;
          first_error = std::current_exception();
        }
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace wga
