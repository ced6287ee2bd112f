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

// Timing comparison of the serial reference path (jobs = 1) against the
// OpenMP path (jobs = 0) on the two parallel kernels: optimizer restarts and
// random entropy trials. Results must be bit-identical across job counts;
// the program exits nonzero if they are not.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "qlp/capacities.hpp"
#include "qlp/channels.hpp"
#include "qlp/mixed_norms.hpp"
#include "qlp/parallel.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    int rc = 0;
    std::printf("hardware jobs: %d\n", qlp::hardware_jobs());

    {
        const qlp::QuantumChannel ch = qlp::depolarizing_channel(3, 0.35);
        qlp::OptimOptions opts;
        opts.restarts = 64;
        opts.seed = 11;

        opts.jobs = 1;
        auto t0 = clock::now();
        const auto serial = qlp::channel_d_norm(ch, 3, qlp::Exponent(2.0), opts);
        const double t_serial = seconds_since(t0);

        opts.jobs = 0;
        t0 = clock::now();
        const auto parallel = qlp::channel_d_norm(ch, 3, qlp::Exponent(2.0), opts);
        const double t_parallel = seconds_since(t0);

        const bool same = serial.value == parallel.value &&
                          serial.restarts_used == parallel.restarts_used;
        std::printf(
            "d-norm restarts (n=3 d=3 p=2, 64 restarts): serial %.3fs, openmp %.3fs, "
            "speedup %.2fx, identical: %s\n",
            t_serial, t_parallel, t_serial / t_parallel, same ? "yes" : "NO");
        if (!same) rc = 1;
    }

    {
        const int trials = 400;
        auto t0 = clock::now();
        const auto serial = qlp::ssa_check(2, 3, 2, trials, 17, 1e-9, 1);
        const double t_serial = seconds_since(t0);

        t0 = clock::now();
        const auto parallel = qlp::ssa_check(2, 3, 2, trials, 17, 1e-9, 0);
        const double t_parallel = seconds_since(t0);

        const bool same = serial.worst_margin == parallel.worst_margin &&
                          serial.failures == parallel.failures;
        std::printf(
            "ssa trials (2,3,2) x %d: serial %.3fs, openmp %.3fs, speedup %.2fx, "
            "identical: %s\n",
            trials, t_serial, t_parallel, t_serial / t_parallel, same ? "yes" : "NO");
        if (!same) rc = 1;
    }

    return rc;
}
