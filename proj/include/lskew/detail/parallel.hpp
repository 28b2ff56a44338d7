#pragma once

#include <cstddef>
#include <exception>

namespace lskew::detail {

/// OpenMP parallel loop over [0, n); a plain loop when OpenMP is absent.
/// Exceptions thrown by the body are captured (first one wins) and rethrown
/// after the loop so they never cross a parallel region boundary.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
  std::exception_ptr error = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical(lskew_parallel_for_error)
#endif
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace lskew::detail
