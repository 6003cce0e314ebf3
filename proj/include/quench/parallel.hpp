#ifndef QUENCH_PARALLEL_HPP
#define QUENCH_PARALLEL_HPP

// Grid-fill kernels. Every sampled quantity in the library is produced by one
// of these: a plain loop kept as the reference implementation, and an OpenMP
// loop that must produce bit-identical output.

#include <cstddef>
#include <exception>
#include <span>

namespace quench {

enum class Exec { Serial, Parallel };

template <class F>
void fill_serial(std::span<double> out, F&& value_at) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = value_at(i);
}

template <class F>
void fill_parallel(std::span<double> out, F&& value_at) {
  std::exception_ptr failure = nullptr;
  const auto n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = value_at(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(quench_fill_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

template <class F>
void fill(std::span<double> out, F&& value_at, Exec exec) {
  if (exec == Exec::Parallel) {
    fill_parallel(out, value_at);
  } else {
    fill_serial(out, value_at);
  }
}

/// Number of OpenMP threads a parallel fill would use (1 without OpenMP).
int max_threads();

}  // namespace quench

#endif  // QUENCH_PARALLEL_HPP
