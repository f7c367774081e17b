// Copyright 2026 The spinphase Authors
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

#ifndef SPINPHASE_PARALLEL_H_
#define SPINPHASE_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace spinphase {

/// Worker count: hardware concurrency, capped by SPINPHASE_THREADS if set.
std::size_t max_threads();

/// Calls fn(i) for i in [0, n). Iterations must be independent; fn must not
/// throw across threads (the first exception is rethrown on the caller).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace spinphase

#endif  // SPINPHASE_PARALLEL_H_
