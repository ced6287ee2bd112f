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

#ifndef QLP_OPTIMIZE_HPP_
#define QLP_OPTIMIZE_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "qlp/parallel.hpp"

namespace qlp {

struct NelderMeadResult {
    double value = 0.0;
    Eigen::VectorXd point;
    int iterations = 0;
    bool converged = false;
};

// Derivative-free simplex maximization. Convergence is declared when the
// value spread across the simplex drops below tol * (1 + |best|).
inline NelderMeadResult nelder_mead_maximize(
    const std::function<double(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& start, double initial_step, int max_iterations, double tol) {
    const int dim = static_cast<int>(start.size());
    std::vector<Eigen::VectorXd> pts(dim + 1, start);
    std::vector<double> vals(dim + 1);
    for (int i = 0; i < dim; ++i) pts[i + 1][i] += initial_step;
    for (int i = 0; i <= dim; ++i) vals[i] = f(pts[i]);

    std::vector<int> order(dim + 1);
    NelderMeadResult result;
    int iter = 0;
    for (; iter < max_iterations; ++iter) {
        for (int i = 0; i <= dim; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) { return vals[a] > vals[b]; });
        const int best = order[0], lousy = order[dim - 1], worst = order[dim];

        if (vals[best] - vals[worst] <= tol * (1.0 + std::abs(vals[best]))) {
            result.converged = true;
            break;
        }

        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(dim);
        for (int i = 0; i <= dim; ++i) {
            if (i != worst) centroid += pts[i];
        }
        centroid /= dim;

        const Eigen::VectorXd reflected = centroid + (centroid - pts[worst]);
        const double fr = f(reflected);
        if (fr > vals[best]) {
            const Eigen::VectorXd expanded = centroid + 2.0 * (centroid - pts[worst]);
            const double fe = f(expanded);
            if (fe > fr) {
                pts[worst] = expanded;
                vals[worst] = fe;
            } else {
                pts[worst] = reflected;
                vals[worst] = fr;
            }
        } else if (fr > vals[lousy]) {
            pts[worst] = reflected;
            vals[worst] = fr;
        } else {
            const Eigen::VectorXd contracted =
                fr > vals[worst] ? centroid + 0.5 * (reflected - centroid)
                                 : centroid + 0.5 * (pts[worst] - centroid);
            const double fc = f(contracted);
            if (fc > std::min(fr, vals[worst])) {
                pts[worst] = contracted;
                vals[worst] = fc;
            } else {
                for (int i = 0; i <= dim; ++i) {
                    if (i == best) continue;
                    pts[i] = pts[best] + 0.5 * (pts[i] - pts[best]);
                    vals[i] = f(pts[i]);
                }
            }
        }
    }

    int best = 0;
    for (int i = 1; i <= dim; ++i) {
        if (vals[i] > vals[best]) best = i;
    }
    result.value = vals[best];
    result.point = pts[best];
    result.iterations = iter;
    return result;
}

struct MultistartOptions {
    int max_iterations = 2000;
    double tol = 1e-9;
    std::uint64_t seed = 1;
    int jobs = 0;
    double initial_step = 0.5;
};

struct MultistartResult {
    double value = 0.0;
    Eigen::VectorXd point;
    bool converged = false;
    long total_iterations = 0;
    int restarts_used = 0;
    int best_index = 0;
};

// Refines every fixed start plus `random_starts` sampled ones, in parallel.
// Start i uses the seed stream derive_seed(opts.seed, i), so the outcome is
// identical for any job count; ties pick the lowest start index.
inline MultistartResult multistart_maximize(
    const std::function<double(const Eigen::VectorXd&)>& objective, int dim,
    const std::vector<Eigen::VectorXd>& fixed_starts, int random_starts,
    const std::function<Eigen::VectorXd(std::mt19937_64&)>& sample_start,
    const MultistartOptions& opts) {
    for (const auto& s : fixed_starts) {
        if (s.size() != dim) throw std::invalid_argument("fixed start has wrong dimension");
    }
    const int total = static_cast<int>(fixed_starts.size()) + random_starts;
    std::vector<NelderMeadResult> results(total);
    run_indexed(
        total,
        [&](int i) {
            Eigen::VectorXd start;
            if (i < static_cast<int>(fixed_starts.size())) {
                start = fixed_starts[i];
            } else {
                std::mt19937_64 rng(derive_seed(opts.seed, static_cast<std::uint64_t>(i)));
                start = sample_start(rng);
            }
            results[i] = nelder_mead_maximize(objective, start, opts.initial_step,
                                              opts.max_iterations, opts.tol);
        },
        opts.jobs);

    MultistartResult out;
    out.restarts_used = total;
    int best = 0;
    for (int i = 0; i < total; ++i) {
        out.total_iterations += results[i].iterations;
        if (results[i].value > results[best].value) best = i;
    }
    out.best_index = best;
    out.value = results[best].value;
    out.point = results[best].point;
    out.converged = results[best].converged;
    return out;
}

}  // namespace qlp

#endif  // QLP_OPTIMIZE_HPP_
