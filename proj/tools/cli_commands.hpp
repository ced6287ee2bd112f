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

#ifndef QLP_TOOLS_CLI_COMMANDS_HPP_
#define QLP_TOOLS_CLI_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

// Command implementations behind the qlp executable. Each returns the
// process exit code: 0 success, 1 assertion failure, 2 usage error. All
// output is deterministic for a fixed config: rows are computed in parallel
// but buffered and emitted in grid order.

namespace qlp::cli {

struct NormConfig {
    std::string channel;            // depolarizing | erasure
    int n = 0;
    int d = 1;
    std::vector<double> lambdas;    // explicit values; or use sweep
    std::string sweep;              // "start:stop:step"
    std::vector<std::string> ps;    // exponents, "inf" allowed
    int restarts = 32;
    double tol = 1e-8;
    std::uint64_t seed = 1;
    int jobs = 0;
};

struct CapacityConfig {
    std::string channel;
    int n = 0;
    int d = 1;
    std::vector<double> lambdas;
    std::string sweep;
    std::string base = "bits";      // bits | nats (tol always in bits)
    int restarts = 32;
    double tol = 1e-3;
    std::uint64_t seed = 1;
    int jobs = 0;
};

struct GapConfig {
    int n = 0;
    int d = 0;
    int d_hi = 0;                   // 0: use d*d (requires d*d <= n)
    std::vector<double> lambdas;
    std::string sweep;
    std::string assert_sign = "none";  // positive | negative | none
    double tol = 1e-12;             // endpoint |f| tolerance
    bool report_peak = false;       // print peak row to the log stream
};

struct VerifyConfig {
    std::string suite = "all";
    int n = 0;                      // 0: suite default dimension list
    std::vector<int> dims;          // ssa factor dims, default 2,2,2
    int trials = 100;
    double tol = 0.0;               // 0: per-check default
    int restarts = 32;
    std::uint64_t seed = 1;
    int jobs = 0;
};

// CSV rows to `out`, diagnostics to `log`.
int cmd_norm(const NormConfig& cfg, std::ostream& out, std::ostream& log);
int cmd_capacity(const CapacityConfig& cfg, std::ostream& out, std::ostream& log);
int cmd_gap(const GapConfig& cfg, std::ostream& out, std::ostream& log);
int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& log);

// "start:stop:step" or explicit list -> grid; throws std::invalid_argument
// on empty/ill-formed input or values outside [0, 1].
std::vector<double> lambda_grid(const std::vector<double>& lambdas,
                                const std::string& sweep);

// 17-significant-digit decimal form, round-trip exact for float64.
std::string fmt17(double x);

}  // namespace qlp::cli

#endif  // QLP_TOOLS_CLI_COMMANDS_HPP_
