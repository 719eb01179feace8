// Copyright 2026 The Tetherpower Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Data-parallel loop helper shared by the sweep kernels.

#ifndef TETHERPOWER_PARALLEL_HPP_
#define TETHERPOWER_PARALLEL_HPP_

#include <omp.h>

#include <cstddef>
#include <exception>
#include <mutex>

namespace tetherpower {

inline int resolve_workers(int workers) {
  return workers > 0 ? workers : omp_get_max_threads();
}

// Calls fn(i) for i in [0, n) on `workers` threads. Iterations must write
// only to their own output slot. The first exception thrown by any
// iteration is rethrown after the loop.
template <class Fn>
void parallel_for(std::size_t n, int workers, Fn&& fn) {
  const int threads = resolve_workers(workers);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long long i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace tetherpower

#endif  // TETHERPOWER_PARALLEL_HPP_
