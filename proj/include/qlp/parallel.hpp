// Copyright 2026 The qlp Authors
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

#ifndef QLP_PARALLEL_HPP_
#define QLP_PARALLEL_HPP_

#include <cstdint>
#include <functional>

namespace qlp {

std::uint64_t splitmix64(std::uint64_t x);

// Independent per-task seed stream: results of task `index` depend only on
// (master, index), never on the thread schedule.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

int hardware_jobs();

// Runs fn(i) for i in [0, n). jobs == 1 is the serial reference path;
// jobs <= 0 uses all hardware threads. Callers must write results into
// caller-owned per-index slots so the schedule cannot affect the output.
// The first exception thrown by any task is rethrown after the loop.
void run_indexed(int n, const std::function<void(int)>& fn, int jobs);

// Serial reference implementation, kept as a separate entry point so tests
// and the benchmark can compare it against the OpenMP path.
void run_indexed_serial(int n, const std::function<void(int)>& fn);

}  // namespace qlp

#endif  // QLP_PARALLEL_HPP_
