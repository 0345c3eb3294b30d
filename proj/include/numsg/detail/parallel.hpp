// numsg - enumeration of numerical semigroups by multiplicity and Frobenius
// number.
//
// Minimal fork/join helper used by the enumeration routines.

#ifndef NUMSG_DETAIL_PARALLEL_HPP_
#define NUMSG_DETAIL_PARALLEL_HPP_

#include <algorithm>    // for min
#include <cstddef>      // for size_t
#include <exception>    // for exception_ptr, rethrow_exception
#include <thread>       // for thread
#include <type_traits>  // for invoke_result_t
#include <vector>       // for vector

namespace numsg::detail {

  // out[i] = fn(in[i]), computed by up to `workers` threads over contiguous
  // chunks. The output order matches the input order regardless of the
  // number of workers. The first exception thrown by any worker is rethrown.
  template <typename T, typename Fn>
  auto parallel_map(std::vector<T> const& in, unsigned workers, Fn&& fn)
      -> std::vector<std::invoke_result_t<Fn&, T const&>> {
    using R = std::invoke_result_t<Fn&, T const&>;
    std::vector<R> out(in.size());
    std::size_t const n = in.size();
    std::size_t const nthreads
        = std::min<std::size_t>(workers == 0 ? 1 : workers, n);
    if (nthreads <= 1) {
      for (std::size_t i = 0; i < n; ++i) {
        out[i] = fn(in[i]);
      }
      return out;
    }
    std::vector<std::exception_ptr> errors(nthreads);
    std::vector<std::thread>        threads;
    threads.reserve(nthreads);
    std::size_t const chunk = (n + nthreads - 1) / nthreads;
    for (std::size_t t = 0; t < nthreads; ++t) {
      threads.emplace_back([&, t] {
        try {
          std::size_t const last = std::min(n, (t + 1) * chunk);
          for (std::size_t i = t * chunk; i < last; ++i) {
            out[i] = fn(in[i]);
          }
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : threads) {
      th.join();
    }
    for (auto const& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
    return out;
  }

}  // namespace numsg::detail

#endif  // NUMSG_DETAIL_PARALLEL_HPP_
