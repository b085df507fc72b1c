// Copyright 2026 The bfcurve Authors.
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

#ifndef BFCURVE_PARALLEL_H_
#define BFCURVE_PARALLEL_H_

#include <cstdint>
#include <functional>

namespace bfcurve {

// BFCURVE_WORKERS if set to a positive integer, else hardware concurrency
// (at least 1).
unsigned default_workers();

// Runs fn(begin, end, worker) over contiguous chunks covering [0, n), with
// at most `workers` threads (0 means default_workers()). Chunk boundaries
// depend only on n and the worker count. If any chunk throws, the exception
// from the lowest-numbered failing chunk is rethrown after all threads join.
void parallel_for(
    uint64_t n, unsigned workers,
    const std::function<void(uint64_t begin, uint64_t end, unsigned worker)>&
        fn);

}  // namespace bfcurve

#endif  // BFCURVE_PARALLEL_H_
