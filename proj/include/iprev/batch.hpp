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

#ifndef IPREV_BATCH_HPP
#define IPREV_BATCH_HPP

#include <cstddef>
#include <functional>

namespace iprev {

/// Execution policy for batch evaluations. All batched work is a loop of
/// independent pure calls, so `parallel` fans iterations out with OpenMP;
/// `serial` is the reference implementation and the fallback when the
/// build has no OpenMP. Results are identical either way.
enum class Execution { serial, parallel };

/// Runs fn(0..n-1). With Execution::parallel the iterations run on OpenMP
/// threads; the first exception thrown by any iteration is rethrown on the
/// calling thread after the loop joins.
void for_each_index(std::size_t n, Execution mode, const std::function<void(std::size_t)>& fn);

}  // namespace iprev

#endif  // IPREV_BATCH_HPP
