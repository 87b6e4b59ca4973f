#pragma once

#include <cstddef>
#include <exception>

namespace ves::detail {

// Runs body(i) for i in [0, n) under OpenMP (serial without it) and rethrows
// the first captured exception once the loop has drained.  Bodies must write
// only to their own index so parallel and serial runs produce identical
// results.
template <typename Body>
void parallel_index_for(std::size_t n, Body&& body) {
  std::exception_ptr first_error = nullptr;
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(ves_parallel_for_error)
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace ves::detail
