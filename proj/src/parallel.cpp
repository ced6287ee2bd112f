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

#include "qlp/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>

#ifdef QLP_HAVE_OPENMP
#include <omp.h>
#endif

namespace qlp {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

int hardware_jobs() {
#ifdef QLP_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void run_indexed_serial(int n, const std::function<void(int)>& fn) {
    for (int i = 0; i < n; ++i) fn(i);
}

void run_indexed(int n, const std::function<void(int)>& fn, int jobs) {
    if (n <= 0) return;
    if (jobs <= 0) jobs = hardware_jobs();
    if (jobs == 1 || n == 1) {
        run_indexed_serial(n, fn);
        return;
    }
#ifdef QLP_HAVE_OPENMP
    std::exception_ptr first_error = nullptr;
    std::mutex error_mutex;
    std::atomic<bool> failed{false};
#pragma omp parallel for num_threads(jobs) schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        if (failed.load(std::memory_order_relaxed)) continue;
        try {
            fn(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
            failed.store(true, std::memory_order_relaxed);
        }
    }
    if (first_error) std::rethrow_exception(first_error);
#else
    run_indexed_serial(n, fn);
#endif
}

}  // namespace qlp
