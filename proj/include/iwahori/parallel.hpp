#pragma once

#include <cstddef>
#include <exception>
#include <type_traits>
#include <vector>

namespace iwahori {

enum class Backend { Serial, OpenMP };

/// Number of OpenMP threads used by parallel_map; 0 leaves the runtime default.
void set_jobs(int jobs);
int max_jobs();

/// out[i] = f(i) for i in [0, n).  Results are stored by index, so the output
/// never depends on the backend or the schedule.  If any call throws, the
/// exception from the smallest index is rethrown after all calls finish.
template <class F>
auto parallel_map(std::size_t n, F&& f, Backend backend = Backend::OpenMP)
    -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<R> out(n);
  std::vector<std::exception_ptr> errors(n);
  if (backend == Backend::Serial) {
    for (std::size_t i = 0; i < n; ++i) {
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < count; ++i) {
      const auto k = static_cast<std::size_t>(i);
      try {
        out[k] = f(k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace iwahori
