// Copyright 2026 The iprev Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "iprev/batch.hpp"

#include <exception>
#include <mutex>

namespace iprev {

void for_each_index(std::size_t n, Execution mode, const std::function<void(std::size_t)>& fn) {
  if (mode == Execution::serial || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }

  // Exceptions must not escape an OpenMP region; capture the first one and
  // rethrow after the join.
  std::exception_ptr first_error;
  std::mutex error_mutex;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long i = 0; i < static_cast<long>(n); ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace iprev
