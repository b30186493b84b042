#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <vector>

#include "tamb/config.hpp"

namespace tamb {

// Evaluates fn(i) for i in [0, n) and returns the results in index order.
// With ExecPolicy::parallel the loop runs under OpenMP; the first exception
// thrown by any iteration is rethrown after the loop. Output order never
// depends on the schedule.
template <typename R, typename Fn>
std::vector<R> indexed_map(std::size_t n, ExecPolicy policy, Fn&& fn) {
  std::vector<R> out(n);
  if (policy == ExecPolicy::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::exception_ptr err;
  std::mutex err_mu;
  const long long count = static_cast<long long>(n);
#if defined(TAMB_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(err_mu);
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace tamb
