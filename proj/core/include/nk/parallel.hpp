// Copyright 2026 The native_kernels Authors
// SPDX-License-Identifier: Apache-2.0
//
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

#pragma once

// Minimal fork-join helper. Work is split into contiguous index blocks so
// that every index is written by exactly one worker; results therefore do
// not depend on the number of threads.

#include <cstddef>
#include <functional>

namespace nk {

/// Number of workers: NATIVE_KERNELS_THREADS when set to a positive
/// integer, otherwise the hardware concurrency (at least 1).
int worker_count();

/// Calls body(begin, end) on disjoint blocks covering [0, n). `threads` ≤ 0
/// means worker_count(). The first exception (by block order) is rethrown
/// after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body, int threads = 0);

}  // namespace nk
