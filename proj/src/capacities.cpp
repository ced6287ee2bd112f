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

#include "qlp/capacities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "qlp/parallel.hpp"

namespace qlp {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

double xlnx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

void check_nd_lambda(int n, double lambda, int d, const char* what) {
    require(n >= 1, std::string(what) + ": n must be >= 1");
    require(d >= 1 && d <= n, std::string(what) + ": need 1 <= d <= n");
    require(lambda >= 0.0 && lambda <= 1.0,
            std::string(what) + ": lambda must be in [0, 1]");
}

// Summary statistics of per-trial slack values; pass if none dips below -tol.
TrialCheckReport summarize(const std::vector<double>& margins, double tol) {
    TrialCheckReport rep;
    rep.trials = static_cast<int>(margins.size());
    rep.worst_margin = std::numeric_limits<double>::infinity();
    for (double m : margins) {
        rep.worst_margin = std::min(rep.worst_margin, m);
        if (m < -tol) ++rep.failures;
    }
    rep.pass = rep.failures == 0;
    return rep;
}

void subsets_of_size(int k, int s, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    const std::function<void(int)> walk = [&](int next) {
        if (static_cast<int>(cur.size()) == s) {
            out.push_back(cur);
            return;
        }
        if (k - next < s - static_cast<int>(cur.size())) return;
        for (int i = next; i < k; ++i) {
            cur.push_back(i);
            walk(i + 1);
            cur.pop_back();
        }
    };
    walk(0);
}

}  // namespace

double von_neumann_entropy(const Matrix& rho, LogBase base) {
    require(rho.rows() == rho.cols() && rho.rows() >= 1,
            "von_neumann_entropy: square matrix required");
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > 1e-8 || std::abs(rho.trace().imag()) > 1e-8) {
        throw std::invalid_argument("von_neumann_entropy: trace must be 1 within 1e-8");
    }
    const RealVector eigs = hermitian_eigenvalues(rho);
    double h = 0.0;
    for (Eigen::Index i = 0; i < eigs.size(); ++i) {
        double x = eigs(i);
        if (x < -1e-8) {
            throw std::invalid_argument(
                "von_neumann_entropy: eigenvalue below -1e-8, not a state");
        }
        x = std::clamp(x, 0.0, 1.0);
        h -= xlnx(x);
    }
    return base == LogBase::nats ? h : h / kLn2;
}

double binary_entropy(double x, LogBase base) {
    require(x >= -1e-12 && x <= 1.0 + 1e-12, "binary_entropy: x must be in [0, 1]");
    x = std::clamp(x, 0.0, 1.0);
    const double h = -xlnx(x) - xlnx(1.0 - x);
    return base == LogBase::nats ? h : h / kLn2;
}

double dnorm_depolarizing_closed(int n, double lambda, int d, Exponent p) {
    check_nd_lambda(n, lambda, d, "dnorm_depolarizing_closed");
    const double big = lambda * d + (1.0 - lambda) / n;
    const double small = (1.0 - lambda) / n;
    if (p.is_inf()) return std::max(big, small);
    const double pv = p.value();
    return std::pow(std::pow(big, pv) / d + std::pow(small, pv) * (n - 1.0 / d),
                    1.0 / pv);
}

double dnorm_erasure_closed(int n, double lambda, int d, Exponent p) {
    check_nd_lambda(n, lambda, d, "dnorm_erasure_closed");
    if (p.is_inf()) return std::max(lambda * d, 1.0 - lambda);
    const double pv = p.value();
    return std::pow(std::pow(lambda, pv) * std::pow(d, pv - 1.0) +
                        std::pow(1.0 - lambda, pv),
                    1.0 / pv);
}

double capacity_depolarizing(int n, double lambda, int d) {
    check_nd_lambda(n, lambda, d, "capacity_depolarizing");
    const double nd = static_cast<double>(n) * d;
    const double mu = lambda + (1.0 - lambda) / nd;
    const double rest = (1.0 - lambda) / nd;
    return (std::log(nd) + xlnx(mu) + (nd - 1.0) * xlnx(rest)) / kLn2;
}

double capacity_erasure(int n, double lambda, int d) {
    check_nd_lambda(n, lambda, d, "capacity_erasure");
    return lambda * std::log(static_cast<double>(n) * d) / kLn2;
}

BoundsReport depolarizing_bounds_check(int n, int d, double lambda) {
    check_nd_lambda(n, lambda, d, "depolarizing_bounds_check");
    const double nd = static_cast<double>(n) * d;
    const double mu = lambda + (1.0 - lambda) / nd;
    BoundsReport rep;
    rep.capacity_bits = capacity_depolarizing(n, lambda, d);
    rep.upper_bits = lambda * std::log(nd) / kLn2;
    rep.width_bits = binary_entropy(mu, LogBase::bits);
    rep.lower_bits = rep.upper_bits - rep.width_bits;
    const double tol = 1e-12;
    rep.pass = rep.lower_bits - tol <= rep.capacity_bits &&
               rep.capacity_bits <= rep.upper_bits + tol &&
               rep.width_bits <= 1.0 + tol;
    return rep;
}

double gap_combination(int n, int d_hi, int d_mid, double lambda) {
    return capacity_depolarizing(n, lambda, d_hi) + capacity_depolarizing(n, lambda, 1) -
           2.0 * capacity_depolarizing(n, lambda, d_mid);
}

double gap_f(int n, int d, double lambda) {
    require(d >= 1 && d * d <= n, "gap_f: requires d^2 <= n");
    return gap_combination(n, d * d, d, lambda);
}

TrialCheckReport ssa_check(int dim_a, int dim_b, int dim_c, int trials,
                           std::uint64_t seed, double tol, int jobs) {
    require(dim_a >= 1 && dim_b >= 1 && dim_c >= 1, "ssa_check: dims must be >= 1");
    require(trials >= 1, "ssa_check: trials must be >= 1");
    const std::vector<int> dims = {dim_a, dim_b, dim_c};
    const int total = dim_a * dim_b * dim_c;
    std::vector<double> margins(trials);
    run_indexed(trials, [&](int t) {
        const Matrix rho = random_density(total, total, derive_seed(seed, t));
        const double s_abc = von_neumann_entropy(rho);
        const double s_ab = von_neumann_entropy(partial_trace(rho, dims, {0, 1}));
        const double s_bc = von_neumann_entropy(partial_trace(rho, dims, {1, 2}));
        const double s_b = von_neumann_entropy(partial_trace(rho, dims, {1}));
        margins[t] = s_ab + s_bc - s_abc - s_b;
    }, jobs);
    return summarize(margins, tol);
}

TrialCheckReport erasure_component_check(int n, int k, int s, int trials,
                                         std::uint64_t seed, double tol, int jobs) {
    require(n >= 1 && k >= 1, "erasure_component_check: need n, k >= 1");
    require(s >= 0 && s <= k, "erasure_component_check: need 0 <= s <= k");
    require(trials >= 1, "erasure_component_check: trials must be >= 1");
    int total = 1;
    for (int i = 0; i < k; ++i) total *= n;
    const std::vector<int> dims(k, n);
    std::vector<std::vector<int>> subsets;
    subsets_of_size(k, s, subsets);
    std::vector<double> margins(trials);
    run_indexed(trials, [&](int t) {
        const Matrix rho = random_density(total, total, derive_seed(seed, t));
        const double s_full = von_neumann_entropy(rho);
        double mean = 0.0;
        for (const auto& keep : subsets) {
            mean += von_neumann_entropy(partial_trace(rho, dims, keep));
        }
        mean /= static_cast<double>(subsets.size());
        margins[t] = mean - (static_cast<double>(s) / k) * s_full;
    }, jobs);
    return summarize(margins, tol);
}

TrialCheckReport fannes_check(int n, int trials, std::uint64_t seed, double tol,
                              int jobs) {
    require(n >= 2, "fannes_check: n must be >= 2");
    require(trials >= 1, "fannes_check: trials must be >= 1");
    std::vector<double> margins(trials);
    run_indexed(trials, [&](int t) {
        const Matrix rho = random_density(n, n, derive_seed(seed, 2 * t));
        const Matrix sigma = random_density(n, n, derive_seed(seed, 2 * t + 1));
        const double tdist =
            0.5 * schatten_norm_hermitian(rho - sigma, Exponent(1.0));
        const double bound = tdist * std::log(static_cast<double>(n - 1)) +
                             binary_entropy(std::min(tdist, 1.0), LogBase::nats);
        const double diff =
            std::abs(von_neumann_entropy(rho) - von_neumann_entropy(sigma));
        margins[t] = bound - diff;
    }, jobs);
    return summarize(margins, tol);
}

CapacityReport capacity_via_derivative(const QuantumChannel& ch, int d,
                                       const OptimOptions& opts) {
    require(ch.unitarily_covariant,
            "capacity_via_derivative: channel must be unitarily covariant");
    require(d >= 1 && d <= ch.in_dim,
            "capacity_via_derivative: need 1 <= d <= in_dim");
    CapacityReport rep;

    double block_term = 0.0;
    for (const auto& b : ch.out_blocks) block_term += b.weight * std::log(b.dim);
    for (const auto& b : ch.out_blocks) block_term -= xlnx(b.weight);
    rep.block_term_nats = block_term;

    rep.derivative = derivative_at_one(
        [&](double p) { return channel_d_norm(ch, d, Exponent(p), opts).value; }, 1.0);
    rep.numeric_bits = (block_term + rep.derivative) / kLn2;

    switch (ch.family) {
        case ChannelFamily::depolarizing:
            rep.closed_bits = capacity_depolarizing(ch.in_dim, ch.lambda, d);
            break;
        case ChannelFamily::erasure:
            rep.closed_bits = capacity_erasure(ch.in_dim, ch.lambda, d);
            break;
        default:
            rep.closed_bits = std::numeric_limits<double>::quiet_NaN();
            break;
    }
    rep.deviation = std::abs(rep.closed_bits - rep.numeric_bits);
    return rep;
}

PowerBounds erasure_power_capacity_bounds(int n, int d, double lambda, int k) {
    check_nd_lambda(n, lambda, d, "erasure_power_capacity_bounds");
    require(n >= 2, "erasure_power_capacity_bounds: n must be >= 2");
    require(k >= 1, "erasure_power_capacity_bounds: k must be >= 1");

    QuantumChannel power = erasure_channel(n, lambda);
    for (int i = 1; i < k; ++i) power = tensor(power, erasure_channel(n, lambda));

    // Each output block keeps some subset of the k factors; the kept count is
    // recovered from the block dimension. Assistance contributes d per kept
    // factor.
    double upper = 0.0;
    for (const auto& b : power.out_blocks) {
        const int kept = static_cast<int>(
            std::lround(std::log(static_cast<double>(b.dim)) / std::log(n)));
        upper += b.weight * kept * (std::log(static_cast<double>(n)) +
                                    std::log(static_cast<double>(d)));
    }

    PowerBounds bounds;
    bounds.upper_bits = upper / kLn2;
    bounds.lower_bits = k * capacity_erasure(n, lambda, d);
    return bounds;
}

}  // namespace qlp
