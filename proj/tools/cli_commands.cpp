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

#include "cli_commands.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "qlp/capacities.hpp"
#include "qlp/channels.hpp"
#include "qlp/embeddings.hpp"
#include "qlp/exponent.hpp"
#include "qlp/matrix.hpp"
#include "qlp/mixed_norms.hpp"
#include "qlp/parallel.hpp"
#include "qlp/weyl.hpp"

namespace qlp::cli {

namespace {

constexpr double kLn2 = 0.69314718055994530942;
const double kPi = std::acos(-1.0);

Exponent parse_exponent(const std::string& s) {
    if (s == "inf" || s == "Inf" || s == "INF") return Exponent::inf();
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad exponent '" + s + "'");
    }
    if (used != s.size()) throw std::invalid_argument("bad exponent '" + s + "'");
    return Exponent(v);  // validates finite >= 1
}

std::string exponent_str(const Exponent& p) {
    return p.is_inf() ? std::string("inf") : fmt17(p.value());
}

QuantumChannel make_channel(const std::string& family, int n, double lambda) {
    if (family == "depolarizing") return depolarizing_channel(n, lambda);
    if (family == "erasure") return erasure_channel(n, lambda);
    throw std::invalid_argument("unknown channel '" + family +
                                "' (expected depolarizing or erasure)");
}

double closed_dnorm(const std::string& family, int n, double lambda, int d,
                    const Exponent& p) {
    return family == "depolarizing" ? dnorm_depolarizing_closed(n, lambda, d, p)
                                    : dnorm_erasure_closed(n, lambda, d, p);
}

// Per-check reporting for `verify`: one PASS/FAIL line per check.
struct CheckSink {
    std::ostream& out;
    int checks = 0;
    int failures = 0;

    void line(const std::string& label, const char* kind, double measured,
              const char* limit_name, double limit, bool pass) {
        ++checks;
        if (!pass) ++failures;
        char value[64];
        std::snprintf(value, sizeof value, "%.3e", measured);
        char bound[64];
        std::snprintf(bound, sizeof bound, "%.1e", limit);
        out << (pass ? "PASS " : "FAIL ") << label << ' ' << kind << '=' << value
            << ' ' << limit_name << '=' << bound << '\n';
    }
    // Pass when a residual stays at or below its ceiling.
    void residual(const std::string& label, double measured, double tol) {
        line(label, "residual", measured, "tol", tol, measured <= tol);
    }
    // Pass when a slack term stays above -tol.
    void margin(const std::string& label, double worst, double tol) {
        line(label, "worst_margin", worst, "bound", -tol, worst >= -tol);
    }
};

const std::vector<std::pair<Exponent, Exponent>>& pq_pairs() {
    static const std::vector<std::pair<Exponent, Exponent>> pairs = {
        {Exponent(1.0), Exponent(1.0)}, {Exponent(1.0), Exponent(2.0)},
        {Exponent(2.0), Exponent(2.0)}, {Exponent(1.0), Exponent::inf()},
        {Exponent(2.0), Exponent::inf()},
    };
    return pairs;
}

std::string pq_label(const Exponent& p, const Exponent& q) {
    return "p=" + exponent_str(p) + ",q=" + exponent_str(q);
}

double choi_min_eig(const LinearMatrixMap& map) {
    const RealVector eigs = hermitian_eigenvalues(choi_matrix(map));
    return eigs(eigs.size() - 1);
}

std::vector<int> dims_or_default(int n, std::vector<int> fallback) {
    if (n > 0) return {n};
    return fallback;
}

void suite_weyl(const std::vector<int>& ns, int trials, std::uint64_t seed,
                CheckSink& sink) {
    for (int n : ns) {
        const std::string tag = "weyl n=" + std::to_string(n);

        double worst = 0.0;
        for (int p = 1; p <= n; ++p) {
            Complex sum(0.0, 0.0);
            for (int k = 1; k <= n; ++k) {
                sum += std::polar(1.0,
                                  2.0 * kPi * ((static_cast<long long>(k) * p) % n) / n);
            }
            worst = std::max(worst, std::abs(sum - Complex(p == n ? n : 0, 0.0)));
        }
        sink.residual(tag + " roots_of_unity", worst, 1e-12);

        worst = 0.0;
        for (int k = 1; k <= n; ++k) {
            for (int l = 1; l <= n; ++l) {
                const Complex phase = std::polar(
                    1.0, 2.0 * kPi * ((static_cast<long long>(k) * l) % n) / n);
                worst = std::max(worst, (weyl_u(n, k) * weyl_v(n, l) -
                                         phase * weyl_v(n, l) * weyl_u(n, k))
                                            .norm());
            }
        }
        sink.residual(tag + " commutation", worst, 1e-12);

        worst = 0.0;
        for (int j = 1; j <= n; ++j) {
            for (int k = 1; k <= n; ++k) {
                Vector lhs = Vector::Zero(n * n);
                lhs((j - 1) * n + (k - 1)) = 1.0;
                Vector rhs = Vector::Zero(n * n);
                for (int s = 1; s <= n; ++s) {
                    const Complex coeff = std::polar(
                        1.0 / std::sqrt(static_cast<double>(n)),
                        -2.0 * kPi * ((static_cast<long long>(s) * j) % n) / n);
                    rhs += coeff * eta_state(n, s, k - j);
                }
                worst = std::max(worst, (lhs - rhs).norm());
            }
        }
        sink.residual(tag + " basis_expansion", worst, 1e-12);

        const auto etas = eta_basis(n);
        worst = 0.0;
        for (std::size_t a = 0; a < etas.size(); ++a) {
            for (std::size_t b = 0; b < etas.size(); ++b) {
                const Complex g = etas[a].dot(etas[b]);
                worst = std::max(worst, std::abs(g - Complex(a == b ? 1.0 : 0.0, 0.0)));
            }
        }
        sink.residual(tag + " eta_gram", worst, 1e-12);

        worst = 0.0;
        {
            Vector e1 = Vector::Zero(n);
            e1(0) = 1.0;
            worst = teleport_identity_residual(n, e1);
        }
        for (int t = 0; t < trials; ++t) {
            const Vector h = random_pure_state(n, derive_seed(seed, 100 + t));
            worst = std::max(worst, teleport_identity_residual(n, h));
        }
        sink.residual(tag + " teleport_identity", worst, 1e-12);

        worst = 0.0;
        for (int t = 0; t < std::min(trials, 20); ++t) {
            const Matrix rho = random_matrix(n, n, derive_seed(seed, 300 + t));
            Matrix acc = Matrix::Zero(n, n);
            for (int k = 1; k <= n; ++k) {
                for (int l = 1; l <= n; ++l) {
                    const Matrix t_kl = shift_op(n, k, l);
                    acc += t_kl * rho * t_kl.adjoint();
                }
            }
            acc /= static_cast<double>(n) * n;
            const Matrix target =
                rho.trace() / static_cast<double>(n) * Matrix::Identity(n, n);
            worst = std::max(worst, (acc - target).norm());
        }
        sink.residual(tag + " twirl", worst, 1e-12);

        worst = 0.0;
        for (int p = 0; p < n; ++p) {
            for (int q = 0; q < n; ++q) {
                Matrix acc = Matrix::Zero(n, n);
                for (int k = 1; k <= n; ++k) {
                    for (int l = 1; l <= n; ++l) {
                        const Matrix t_kl = shift_op(n, k, l);
                        acc += t_kl.col(p) * t_kl.col(q).adjoint();
                    }
                }
                const Matrix target =
                    (p == q ? static_cast<double>(n) : 0.0) * Matrix::Identity(n, n);
                worst = std::max(worst, (acc - target).norm());
            }
        }
        sink.residual(tag + " shift_sum", worst, 1e-12);

        worst = 0.0;
        for (int k = 1; k <= n; ++k) {
            for (int l = 1; l <= n; ++l) {
                const Matrix t_kl = shift_op(n, k, l);
                worst = std::max(
                    worst, (t_kl.adjoint() * t_kl - Matrix::Identity(n, n)).norm());
            }
        }
        worst = std::max(worst, (shift_op(n, n, n) - Matrix::Identity(n, n)).norm());
        sink.residual(tag + " shift_unitarity", worst, 1e-12);
    }
}

void suite_teleport(const std::vector<int>& ns, int trials, std::uint64_t seed,
                    CheckSink& sink) {
    for (int n : ns) {
        const std::string tag = "teleport n=" + std::to_string(n);
        const EmbeddingPair base = teleport_pair(n, Exponent(1.0), Exponent(1.0));
        sink.margin(tag + " embed_choi_min_eig", choi_min_eig(base.embed), 1e-10);
        sink.margin(tag + " project_choi_min_eig", choi_min_eig(base.project), 1e-10);
        int idx = 0;
        for (const auto& [p, q] : pq_pairs()) {
            const EmbeddingPair pair = teleport_pair(n, p, q);
            sink.residual(tag + " " + pq_label(p, q) + " left_inverse",
                          identity_residual(pair, trials, derive_seed(seed, idx++)),
                          1e-12);
        }
    }
}

void suite_superdense(const std::vector<int>& ns, int trials, std::uint64_t seed,
                      CheckSink& sink) {
    for (int n : ns) {
        const std::string tag = "superdense n=" + std::to_string(n);
        int idx = 0;
        for (const auto& [p, q] : pq_pairs()) {
            const EmbeddingPair pair = superdense_pair(n, p, q);
            double worst = 0.0;
            for (int c = 0; c < n * n; ++c) {
                Matrix x = Matrix::Zero(n * n, n * n);
                x(c, c) = 1.0;
                worst = std::max(worst, (pair.project.fn(pair.embed.fn(x)) - x).norm());
            }
            sink.residual(tag + " " + pq_label(p, q) + " basis_exact", worst, 1e-13);
            sink.residual(tag + " " + pq_label(p, q) + " left_inverse",
                          identity_residual(pair, trials, derive_seed(seed, idx++)),
                          1e-12);
        }
    }
}

void suite_directsum(int trials, std::uint64_t seed, CheckSink& sink) {
    const std::vector<std::vector<int>> dim_sets = {{2, 3}, {2, 4}};
    int idx = 0;
    for (const auto& dims : dim_sets) {
        std::string tag = "directsum dims=";
        for (std::size_t i = 0; i < dims.size(); ++i) {
            tag += (i ? "," : "") + std::to_string(dims[i]);
        }
        for (const auto& [p, q] : pq_pairs()) {
            const EmbeddingPair pair = direct_sum_pair(dims, p, q);
            sink.residual(tag + " " + pq_label(p, q) + " left_inverse",
                          identity_residual(pair, trials, derive_seed(seed, idx++)),
                          1e-12);
        }
    }
}

void suite_factorization(int trials, std::uint64_t seed, CheckSink& sink) {
    const std::vector<std::pair<int, int>> nds = {{2, 2}, {4, 2}, {6, 3}};
    const std::vector<double> lambdas = {0.0, 0.5, 1.0};
    const std::vector<double> ps = {1.0, 2.0, 4.0};
    int idx = 0;
    for (const auto& [n, d] : nds) {
        for (double lambda : lambdas) {
            for (double p : ps) {
                const std::string tag = "factorization n=" + std::to_string(n) +
                                        " d=" + std::to_string(d) +
                                        " lambda=" + fmt17(lambda) + " p=" + fmt17(p);
                sink.residual(tag,
                              factorization_residual(n, d, lambda, Exponent(p), trials,
                                                     derive_seed(seed, idx++)),
                              1e-12);
            }
        }
    }

    // Norm of the classical comparison map versus direct maximization over
    // basis inputs; equality is exact up to roundoff.
    const std::vector<Exponent> psi_ps = {Exponent(1.0), Exponent(2.0), Exponent(4.0),
                                          Exponent::inf()};
    for (int d : {2, 3}) {
        const Matrix coeffs = random_matrix(3, 2, derive_seed(seed, 7000 + d));
        for (int rep = 0; rep < 2; ++rep) {
            const Complex alpha = coeffs(0, rep);
            const Complex beta = coeffs(1, rep);
            const Complex delta = coeffs(2, rep);
            const LinearMatrixMap map = psi_map(d, alpha, beta, delta);
            for (const Exponent& p : psi_ps) {
                double best = 0.0;
                for (int c = 0; c < d * d; ++c) {
                    Matrix x = Matrix::Zero(d * d, d * d);
                    x(c, c) = 1.0;
                    best = std::max(best, schatten_norm(map.fn(x), p));
                }
                const double formula = psi_norm(d, alpha, beta, delta, p);
                const double rel =
                    std::abs(best - formula) / std::max(1.0, std::abs(formula));
                sink.residual("factorization psi_norm d=" + std::to_string(d) +
                                  " rep=" + std::to_string(rep) + " p=" + exponent_str(p),
                              rel, 1e-13);
            }
        }
    }
}

void suite_ssa(const std::vector<int>& dims, int trials, std::uint64_t seed,
               double tol, int jobs, CheckSink& sink) {
    if (dims.size() != 3) throw std::invalid_argument("ssa needs exactly 3 dims");
    const auto rep = ssa_check(dims[0], dims[1], dims[2], trials, seed, tol, jobs);
    sink.margin("ssa dims=" + std::to_string(dims[0]) + "," + std::to_string(dims[1]) +
                    "," + std::to_string(dims[2]) + " trials=" + std::to_string(trials),
                rep.worst_margin, tol);
}

void suite_erasure_add(int n, int trials, std::uint64_t seed, double tol, int jobs,
                       CheckSink& sink) {
    const int k = 3;
    for (int s : {1, 2}) {
        const auto rep = erasure_component_check(n, k, s, trials,
                                                 derive_seed(seed, s), tol, jobs);
        sink.margin("erasure-add n=" + std::to_string(n) + " k=" + std::to_string(k) +
                        " s=" + std::to_string(s) + " trials=" + std::to_string(trials),
                    rep.worst_margin, tol);
    }
}

void suite_fannes(int n, int trials, std::uint64_t seed, double tol, int jobs,
                  CheckSink& sink) {
    const auto rep = fannes_check(n, trials, seed, tol, jobs);
    sink.margin("fannes n=" + std::to_string(n) + " trials=" + std::to_string(trials),
                rep.worst_margin, tol);

    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const int dim = 2 + (t % 7);
        const Matrix rho = random_density(dim, dim, derive_seed(seed, 5000 + t));
        worst = std::max(worst, std::abs(entropy_quotient_F(rho, 1.0 + 1e-6) -
                                         von_neumann_entropy(rho)));
    }
    sink.residual("fannes entropy_quotient_limit trials=" + std::to_string(trials),
                  worst, 1e-4);
}

}  // namespace

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<double> lambda_grid(const std::vector<double>& lambdas,
                                const std::string& sweep) {
    if (!lambdas.empty() && !sweep.empty()) {
        throw std::invalid_argument("give either --lambda or --sweep, not both");
    }
    std::vector<double> grid;
    if (!sweep.empty()) {
        double a = 0.0, b = 0.0, step = 0.0;
        char tail = 0;
        if (std::sscanf(sweep.c_str(), "%lf:%lf:%lf%c", &a, &b, &step, &tail) != 3) {
            throw std::invalid_argument("bad sweep '" + sweep +
                                        "' (expected start:stop:step)");
        }
        if (!(step > 0.0) || a > b) {
            throw std::invalid_argument("bad sweep: need step > 0 and start <= stop");
        }
        for (int i = 0;; ++i) {
            const double v = a + i * step;
            if (v >= b - 1e-12) {
                grid.push_back(b);
                break;
            }
            grid.push_back(v);
        }
    } else {
        grid = lambdas;
    }
    if (grid.empty()) throw std::invalid_argument("empty lambda grid");
    for (double v : grid) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw std::invalid_argument("lambda values must lie in [0, 1]");
        }
    }
    return grid;
}

int cmd_norm(const NormConfig& cfg, std::ostream& out, std::ostream& log) {
    std::vector<double> grid;
    std::vector<Exponent> ps;
    try {
        grid = lambda_grid(cfg.lambdas, cfg.sweep);
        if (cfg.ps.empty()) throw std::invalid_argument("need at least one --p");
        for (const auto& s : cfg.ps) ps.push_back(parse_exponent(s));
        if (cfg.n < 1) throw std::invalid_argument("need --n >= 1");
        if (cfg.d < 1 || cfg.d > cfg.n) throw std::invalid_argument("need 1 <= d <= n");
        make_channel(cfg.channel, cfg.n, 0.0);
        if (cfg.restarts < 0) throw std::invalid_argument("need --restarts >= 0");
    } catch (const std::invalid_argument& e) {
        log << "error: " << e.what() << '\n';
        return 2;
    }

    struct Row {
        double lambda = 0.0;
        Exponent p = Exponent(1.0);
        double closed = 0.0, numeric = 0.0, witness = 0.0;
    };
    const int n_rows = static_cast<int>(grid.size() * ps.size());
    std::vector<Row> rows(n_rows);
    run_indexed(
        n_rows,
        [&](int i) {
            Row& row = rows[i];
            row.lambda = grid[i / ps.size()];
            row.p = ps[i % ps.size()];
            row.closed = closed_dnorm(cfg.channel, cfg.n, row.lambda, cfg.d, row.p);
            const QuantumChannel ch = make_channel(cfg.channel, cfg.n, row.lambda);
            OptimOptions opts;
            opts.restarts = cfg.restarts;
            opts.seed = derive_seed(cfg.seed, i);
            opts.jobs = cfg.jobs;
            const OptimizationReport rep = channel_d_norm(ch, cfg.d, row.p, opts);
            row.numeric = rep.value;
            row.witness = rep.canonical_start_value;
        },
        cfg.jobs);

    out << "n,d,lambda,p,closed_form,numeric_lower_bound,witness_value,gap\n";
    bool ok = true;
    for (const Row& row : rows) {
        out << cfg.n << ',' << cfg.d << ',' << fmt17(row.lambda) << ','
            << exponent_str(row.p) << ',' << fmt17(row.closed) << ','
            << fmt17(row.numeric) << ',' << fmt17(row.witness) << ','
            << fmt17(row.closed - row.numeric) << '\n';
        if (std::abs(row.closed - row.witness) > cfg.tol) ok = false;
        if (row.numeric > row.closed + cfg.tol) ok = false;
    }
    return ok ? 0 : 1;
}

int cmd_capacity(const CapacityConfig& cfg, std::ostream& out, std::ostream& log) {
    std::vector<double> grid;
    try {
        grid = lambda_grid(cfg.lambdas, cfg.sweep);
        if (cfg.n < 1) throw std::invalid_argument("need --n >= 1");
        if (cfg.d < 1 || cfg.d > cfg.n) throw std::invalid_argument("need 1 <= d <= n");
        make_channel(cfg.channel, cfg.n, 0.0);
        if (cfg.base != "bits" && cfg.base != "nats") {
            throw std::invalid_argument("--base must be bits or nats");
        }
    } catch (const std::invalid_argument& e) {
        log << "error: " << e.what() << '\n';
        return 2;
    }

    struct Row {
        double lambda = 0.0;
        double closed_bits = 0.0, numeric_bits = 0.0;
    };
    const int n_rows = static_cast<int>(grid.size());
    std::vector<Row> rows(n_rows);
    run_indexed(
        n_rows,
        [&](int i) {
            Row& row = rows[i];
            row.lambda = grid[i];
            const QuantumChannel ch = make_channel(cfg.channel, cfg.n, row.lambda);
            OptimOptions opts;
            opts.restarts = cfg.restarts;
            opts.seed = derive_seed(cfg.seed, i);
            opts.jobs = cfg.jobs;
            const CapacityReport rep = capacity_via_derivative(ch, cfg.d, opts);
            row.closed_bits = rep.closed_bits;
            row.numeric_bits = rep.numeric_bits;
        },
        cfg.jobs);

    const double scale = cfg.base == "nats" ? kLn2 : 1.0;
    out << (cfg.base == "nats" ? "n,d,lambda,closed_nats,derivative_nats,abs_gap"
                               : "n,d,lambda,closed_bits,derivative_bits,abs_gap")
        << '\n';
    bool ok = true;
    for (const Row& row : rows) {
        const double gap_bits = std::abs(row.closed_bits - row.numeric_bits);
        out << cfg.n << ',' << cfg.d << ',' << fmt17(row.lambda) << ','
            << fmt17(row.closed_bits * scale) << ',' << fmt17(row.numeric_bits * scale)
            << ',' << fmt17(gap_bits * scale) << '\n';
        if (!(gap_bits <= cfg.tol)) ok = false;  // tol is always in bits
    }
    return ok ? 0 : 1;
}

int cmd_gap(const GapConfig& cfg, std::ostream& out, std::ostream& log) {
    std::vector<double> grid;
    int d_hi = cfg.d_hi;
    try {
        grid = lambda_grid(cfg.lambdas, cfg.sweep);
        if (cfg.n < 1) throw std::invalid_argument("need --n >= 1");
        if (cfg.d < 1 || cfg.d > cfg.n) throw std::invalid_argument("need 1 <= d <= n");
        if (d_hi == 0) {
            if (cfg.d * cfg.d > cfg.n) {
                throw std::invalid_argument("default d_hi = d^2 needs d^2 <= n; "
                                            "pass --dhi explicitly otherwise");
            }
            d_hi = cfg.d * cfg.d;
        }
        if (d_hi < 1 || d_hi > cfg.n) throw std::invalid_argument("need 1 <= dhi <= n");
        if (cfg.assert_sign != "positive" && cfg.assert_sign != "negative" &&
            cfg.assert_sign != "none") {
            throw std::invalid_argument("--assert must be positive, negative or none");
        }
    } catch (const std::invalid_argument& e) {
        log << "error: " << e.what() << '\n';
        return 2;
    }

    out << "lambda,f_bits\n";
    bool ok = true;
    double peak_lambda = grid.front();
    double peak_f = -std::numeric_limits<double>::infinity();
    for (double lambda : grid) {
        const double f = gap_combination(cfg.n, d_hi, cfg.d, lambda);
        out << fmt17(lambda) << ',' << fmt17(f) << '\n';
        if (f > peak_f) {
            peak_f = f;
            peak_lambda = lambda;
        }
        if (cfg.assert_sign == "none") continue;
        const bool endpoint = lambda <= 0.0 || lambda >= 1.0;
        const bool sign_ok =
            cfg.assert_sign == "positive" ? f > 0.0 : f < 0.0;
        if (endpoint ? !(sign_ok || std::abs(f) <= cfg.tol) : !sign_ok) ok = false;
    }
    if (cfg.report_peak) {
        log << "peak lambda=" << fmt17(peak_lambda) << " f_bits=" << fmt17(peak_f)
            << '\n';
    }
    return ok ? 0 : 1;
}

int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& log) {
    static const std::vector<std::string> known = {
        "weyl",      "teleport", "superdense", "directsum", "factorization",
        "ssa",       "erasure-add", "fannes",  "all"};
    if (std::find(known.begin(), known.end(), cfg.suite) == known.end()) {
        log << "error: unknown suite '" << cfg.suite << "'\n";
        return 2;
    }
    const bool all = cfg.suite == "all";
    const double margin_tol = cfg.tol > 0.0 ? cfg.tol : 1e-9;
    CheckSink sink{out};
    try {
        if (all || cfg.suite == "weyl") {
            suite_weyl(dims_or_default(cfg.n, {2, 3, 4, 5}), cfg.trials, cfg.seed, sink);
        }
        if (all || cfg.suite == "teleport") {
            suite_teleport(dims_or_default(cfg.n, {2, 3, 4, 5}), cfg.trials, cfg.seed,
                           sink);
        }
        if (all || cfg.suite == "superdense") {
            suite_superdense(dims_or_default(cfg.n, {2, 3, 4, 5}), cfg.trials, cfg.seed,
                             sink);
        }
        if (all || cfg.suite == "directsum") {
            suite_directsum(cfg.trials, cfg.seed, sink);
        }
        if (all || cfg.suite == "factorization") {
            suite_factorization(cfg.trials, cfg.seed, sink);
        }
        if (all || cfg.suite == "ssa") {
            std::vector<int> dims = cfg.dims.empty() ? std::vector<int>{2, 2, 2} : cfg.dims;
            suite_ssa(dims, cfg.trials, cfg.seed, margin_tol, cfg.jobs, sink);
        }
        if (all || cfg.suite == "erasure-add") {
            suite_erasure_add(cfg.n > 0 ? cfg.n : 2, cfg.trials, cfg.seed, margin_tol,
                              cfg.jobs, sink);
        }
        if (all || cfg.suite == "fannes") {
            suite_fannes(cfg.n > 0 ? cfg.n : 4, cfg.trials, cfg.seed, margin_tol,
                         cfg.jobs, sink);
        }
    } catch (const std::invalid_argument& e) {
        log << "error: " << e.what() << '\n';
        return 2;
    }
    out << "verify " << cfg.suite << ": checks=" << sink.checks
        << " failures=" << sink.failures << '\n';
    return sink.failures == 0 ? 0 : 1;
}

}  // namespace qlp::cli
