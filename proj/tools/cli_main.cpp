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

#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cli_commands.hpp"

namespace {

// CSV goes to stdout or --out; diagnostics go to stderr.
int with_output(const std::string& path, const std::function<int(std::ostream&)>& fn) {
    if (path.empty()) return fn(std::cout);
    std::ofstream file(path, std::ios::binary);  // binary: LF endings everywhere
    if (!file) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return 2;
    }
    return fn(file);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "qlp: embeddings, d-norms and restricted-entanglement capacities for "
        "depolarizing and erasure channels"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "write CSV/report to this path instead of stdout")
        ->capture_default_str();

    qlp::cli::NormConfig norm;
    CLI::App* norm_cmd = app.add_subcommand(
        "norm", "closed-form channel d-norms against the pure-state optimizer");
    norm_cmd->add_option("--channel", norm.channel, "depolarizing | erasure")
        ->required();
    norm_cmd->add_option("--n", norm.n, "channel dimension")->required();
    norm_cmd->add_option("--d", norm.d, "assistance dimension, 1 <= d <= n")
        ->capture_default_str();
    norm_cmd->add_option("--lambda", norm.lambdas, "lambda values in [0,1]")
        ->delimiter(',');
    norm_cmd->add_option("--sweep", norm.sweep, "lambda grid start:stop:step");
    norm_cmd->add_option("--p", norm.ps, "Schatten exponents >= 1, 'inf' allowed")
        ->required()
        ->delimiter(',');
    norm_cmd->add_option("--restarts", norm.restarts, "optimizer random restarts")
        ->capture_default_str();
    norm_cmd->add_option("--tol", norm.tol, "exit-code tolerance on closed vs numeric")
        ->capture_default_str();
    norm_cmd->add_option("--seed", norm.seed, "master RNG seed")
        ->envname("QLP_SEED")
        ->capture_default_str();
    norm_cmd->add_option("--jobs", norm.jobs, "parallel jobs; 1 = serial, 0 = all")
        ->capture_default_str();

    qlp::cli::CapacityConfig capacity;
    CLI::App* capacity_cmd = app.add_subcommand(
        "capacity", "closed-form capacities against the d-norm derivative path");
    capacity_cmd->add_option("--channel", capacity.channel, "depolarizing | erasure")
        ->required();
    capacity_cmd->add_option("--n", capacity.n, "channel dimension")->required();
    capacity_cmd->add_option("--d", capacity.d, "assistance dimension, 1 <= d <= n")
        ->capture_default_str();
    capacity_cmd->add_option("--lambda", capacity.lambdas, "lambda values in [0,1]")
        ->delimiter(',');
    capacity_cmd->add_option("--sweep", capacity.sweep, "lambda grid start:stop:step");
    capacity_cmd->add_option("--base", capacity.base, "bits | nats output units")
        ->capture_default_str();
    capacity_cmd
        ->add_option("--restarts", capacity.restarts, "optimizer random restarts")
        ->capture_default_str();
    capacity_cmd
        ->add_option("--tol", capacity.tol, "exit-code tolerance in bits")
        ->capture_default_str();
    capacity_cmd->add_option("--seed", capacity.seed, "master RNG seed")
        ->envname("QLP_SEED")
        ->capture_default_str();
    capacity_cmd->add_option("--jobs", capacity.jobs, "parallel jobs; 1 = serial, 0 = all")
        ->capture_default_str();

    qlp::cli::GapConfig gap;
    CLI::App* gap_cmd = app.add_subcommand(
        "gap", "capacity combination C^dhi + C^1 - 2 C^d of the depolarizing channel");
    gap_cmd->add_option("--n", gap.n, "channel dimension")->required();
    gap_cmd->add_option("--d", gap.d, "middle assistance dimension")->required();
    gap_cmd->add_option("--dhi", gap.d_hi, "top assistance dimension (default d^2)")
        ->capture_default_str();
    gap_cmd->add_option("--lambda", gap.lambdas, "lambda values in [0,1]")
        ->delimiter(',');
    gap_cmd->add_option("--sweep", gap.sweep, "lambda grid start:stop:step");
    gap_cmd
        ->add_option("--assert", gap.assert_sign,
                     "positive | negative | none; endpoints pass when |f| <= tol")
        ->capture_default_str();
    gap_cmd->add_option("--tol", gap.tol, "endpoint zero tolerance")
        ->capture_default_str();
    gap_cmd->add_flag("--peak", gap.report_peak, "report the grid peak to stderr");

    qlp::cli::VerifyConfig verify;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify",
        "property suites: weyl, teleport, superdense, directsum, factorization, "
        "ssa, erasure-add, fannes, all");
    verify_cmd->add_option("suite", verify.suite, "suite name")->required();
    verify_cmd->add_option("--n", verify.n, "dimension (0 = suite default)")
        ->capture_default_str();
    verify_cmd->add_option("--dims", verify.dims, "ssa factor dims a,b,c")
        ->delimiter(',');
    verify_cmd->add_option("--trials", verify.trials, "random trials per check")
        ->capture_default_str();
    verify_cmd
        ->add_option("--tol", verify.tol,
                     "entropy-margin tolerance (0 = default 1e-9)")
        ->capture_default_str();
    verify_cmd->add_option("--seed", verify.seed, "master RNG seed")
        ->envname("QLP_SEED")
        ->capture_default_str();
    verify_cmd->add_option("--jobs", verify.jobs, "parallel jobs; 1 = serial, 0 = all")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // help text, exit 0
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        std::cerr << "run with --help for usage\n";
        return 2;
    }

    if (norm_cmd->parsed()) {
        return with_output(out_path, [&](std::ostream& out) {
            return qlp::cli::cmd_norm(norm, out, std::cerr);
        });
    }
    if (capacity_cmd->parsed()) {
        return with_output(out_path, [&](std::ostream& out) {
            return qlp::cli::cmd_capacity(capacity, out, std::cerr);
        });
    }
    if (gap_cmd->parsed()) {
        return with_output(out_path, [&](std::ostream& out) {
            return qlp::cli::cmd_gap(gap, out, std::cerr);
        });
    }
    return with_output(out_path, [&](std::ostream& out) {
        return qlp::cli::cmd_verify(verify, out, std::cerr);
    });
}
