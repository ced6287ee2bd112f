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

#include "qlp/mixed_norms.hpp"

#include <cmath>
#include <stdexcept>

#include "qlp/optimize.hpp"

namespace qlp {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Hermitian matrix from dim^2 real parameters: diagonal first, then
// (re, im) per upper off-diagonal entry.
Matrix hermitian_from_params(const Eigen::VectorXd& h, int dim) {
    Matrix m = Matrix::Zero(dim, dim);
    int idx = 0;
    for (int i = 0; i < dim; ++i) m(i, i) = h[idx++];
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            const Complex v(h[idx], h[idx + 1]);
            idx += 2;
            m(i, j) = v;
            m(j, i) = std::conj(v);
        }
    }
    return m;
}

struct PositiveFactor {
    Matrix a;      // exp(H) normalized to ||a||_{2r} = 1
    Matrix a_inv;  // inverse of a
};

// exp(H) built from the eigendecomposition, shifted so the largest exponent
// is 0 and clamped to a spread of 60 to keep the inverse finite.
PositiveFactor positive_from_params(const Eigen::VectorXd& h, int dim, Exponent two_r) {
    const Matrix m = hermitian_from_params(h, dim);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    RealVector w = solver.eigenvalues();
    const double top = w.maxCoeff();
    RealVector e(dim), e_inv(dim);
    for (int i = 0; i < dim; ++i) {
        const double shifted = std::max(w[i] - top, -60.0);
        e[i] = std::exp(shifted);
        e_inv[i] = std::exp(-shifted);
    }
    double nrm;
    if (two_r.is_inf()) {
        nrm = e.maxCoeff();
    } else {
        const double pv = two_r.value();
        double acc = 0.0;
        for (int i = 0; i < dim; ++i) acc += std::pow(e[i], pv);
        nrm = std::pow(acc, 1.0 / pv);
    }
    PositiveFactor f;
    const Matrix& v = solver.eigenvectors();
    f.a = v * (e / nrm).asDiagonal() * v.adjoint();
    f.a_inv = v * (e_inv * nrm).asDiagonal() * v.adjoint();
    return f;
}

double psd_check_scale(const Matrix& x) {
    return std::max(1.0, x.cwiseAbs().maxCoeff());
}

Vector vector_from_params(const Eigen::VectorXd& v, int dim) {
    Vector psi(dim);
    for (int i = 0; i < dim; ++i) psi[i] = Complex(v[i], v[dim + i]);
    return psi;
}

Eigen::VectorXd params_from_vector(const Vector& psi) {
    const int dim = static_cast<int>(psi.size());
    Eigen::VectorXd v(2 * dim);
    for (int i = 0; i < dim; ++i) {
        v[i] = psi[i].real();
        v[dim + i] = psi[i].imag();
    }
    return v;
}

// (id_d (x) tr_n)(psi psi*) for unit psi in C^(d n).
Matrix state_marginal(const Vector& psi, int d, int n) {
    Matrix m = Matrix::Zero(d, d);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b <= a; ++b) {
            Complex acc(0.0, 0.0);
            for (int j = 0; j < n; ++j) {
                acc += psi[static_cast<Eigen::Index>(a) * n + j] *
                       std::conj(psi[static_cast<Eigen::Index>(b) * n + j]);
            }
            m(a, b) = acc;
            m(b, a) = std::conj(acc);
        }
    }
    return m;
}

Matrix rank_one_output(const std::vector<Matrix>& kraus, const Vector& psi) {
    const Eigen::Index out = kraus[0].rows();
    Matrix acc = Matrix::Zero(out, out);
    for (const auto& k : kraus) {
        const Vector w = k * psi;
        acc.noalias() += w * w.adjoint();
    }
    return acc;
}

// Maximally entangled start across C^d (x) C^n with rank min(d, n).
Vector canonical_entangled(int d, int n) {
    const int r = std::min(d, n);
    Vector psi = Vector::Zero(static_cast<Eigen::Index>(d) * n);
    const double a = 1.0 / std::sqrt(static_cast<double>(r));
    for (int i = 0; i < r; ++i) psi[static_cast<Eigen::Index>(i) * n + i] = a;
    return psi;
}

double entropy_nats_clamped(const RealVector& eigs) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < eigs.size(); ++i) {
        const double x = eigs[i];
        if (x > 0.0) s -= x * std::log(x);
    }
    return s;
}

// Shared multistart scaffolding for objectives over pure states in C^(d n).
OptimizationReport optimize_over_states(
    const std::function<double(const Vector&)>& state_objective, int d, int n,
    const OptimOptions& opts) {
    const int dim = 2 * d * n;
    auto objective = [&](const Eigen::VectorXd& v) {
        Vector psi = vector_from_params(v, d * n);
        const double nrm = psi.norm();
        if (nrm < 1e-9) return -1e9;
        psi /= nrm;
        return state_objective(psi);
    };

    const Vector canon = canonical_entangled(d, n);
    const double canon_value = state_objective(canon);

    MultistartOptions mopts;
    mopts.max_iterations = opts.max_iterations;
    mopts.tol = opts.tol;
    mopts.seed = opts.seed;
    mopts.jobs = opts.jobs;
    mopts.initial_step = 0.35;
    auto sampler = [dim](std::mt19937_64& rng) {
        std::normal_distribution<double> dist(0.0, 1.0);
        Eigen::VectorXd v(dim);
        for (int i = 0; i < dim; ++i) v[i] = dist(rng);
        return v;
    };
    const MultistartResult ms = multistart_maximize(
        objective, dim, {params_from_vector(canon)}, opts.restarts, sampler, mopts);

    OptimizationReport report;
    report.bound = BoundKind::lower;
    report.canonical_start_value = canon_value;
    report.restarts_used = ms.restarts_used;
    report.iterations = ms.total_iterations;
    report.converged = ms.converged;
    if (ms.value > canon_value) {
        report.value = ms.value;
        Vector psi = vector_from_params(ms.point, d * n);
        report.witness_state = psi / psi.norm();
    } else {
        report.value = canon_value;
        report.witness_state = canon;
    }
    return report;
}

}  // namespace

OptimizationReport mixed_norm_positive(const Matrix& x, const MixedNormSpec& spec,
                                       const OptimOptions& opts) {
    require(spec.outer_dim >= 1 && spec.inner_dim >= 1,
            "mixed_norm_positive: dimensions must be >= 1");
    const Eigen::Index total = static_cast<Eigen::Index>(spec.outer_dim) * spec.inner_dim;
    require(x.rows() == total && x.cols() == total,
            "mixed_norm_positive: matrix size must equal outer_dim * inner_dim");
    const RealVector eigs = hermitian_eigenvalues(x);
    if (eigs[eigs.size() - 1] < -1e-10 * psd_check_scale(x)) {
        throw std::invalid_argument("mixed_norm_positive: input is not PSD within tolerance");
    }

    const Exponent p = spec.outer_p;
    const Exponent q = spec.inner_q;
    OptimizationReport report;

    // Degenerate cases are plain Schatten norms, no optimization involved.
    if (p == q || spec.outer_dim == 1 || spec.inner_dim == 1) {
        Exponent which = p == q ? p : (spec.outer_dim == 1 ? q : p);
        report.value = schatten_norm_hermitian(x, which);
        report.bound = BoundKind::exact;
        report.witness_matrix = Matrix::Identity(spec.outer_dim, spec.outer_dim);
        report.converged = true;
        return report;
    }

    const double rr = std::abs(p.reciprocal() - q.reciprocal());
    const Exponent two_r = rr == 0.0 ? Exponent::inf() : Exponent(2.0 / rr);
    const int n = spec.outer_dim;
    const Matrix inner_eye = Matrix::Identity(spec.inner_dim, spec.inner_dim);
    const bool sup_form = q < p;  // outer exponent above inner: sup, lower bound

    auto conjugated = [&](const Matrix& a) {
        const Matrix s = kron(a, inner_eye);
        return schatten_norm_hermitian(s * x * s, q);
    };
    auto objective = [&](const Eigen::VectorXd& h) {
        const PositiveFactor f = positive_from_params(h, n, two_r);
        return sup_form ? conjugated(f.a) : -conjugated(f.a_inv);
    };

    MultistartOptions mopts;
    mopts.max_iterations = opts.max_iterations;
    mopts.tol = opts.tol;
    mopts.seed = opts.seed;
    mopts.jobs = opts.jobs;
    mopts.initial_step = 0.4;
    const int dim = n * n;
    auto sampler = [dim](std::mt19937_64& rng) {
        std::normal_distribution<double> dist(0.0, 0.7);
        Eigen::VectorXd v(dim);
        for (int i = 0; i < dim; ++i) v[i] = dist(rng);
        return v;
    };
    const MultistartResult ms = multistart_maximize(
        objective, dim, {Eigen::VectorXd::Zero(dim)}, opts.restarts, sampler, mopts);

    report.value = sup_form ? ms.value : -ms.value;
    report.bound = sup_form ? BoundKind::lower : BoundKind::upper;
    report.witness_matrix = positive_from_params(ms.point, n, two_r).a;
    report.restarts_used = ms.restarts_used;
    report.iterations = ms.total_iterations;
    report.converged = ms.converged;
    return report;
}

OptimizationReport channel_d_norm(const QuantumChannel& ch, int d, Exponent p,
                                  const OptimOptions& opts) {
    require(d >= 1, "channel_d_norm: d must be >= 1");
    const int n = ch.in_dim;

    if (p == Exponent(1.0)) {
        // Trace preserving: every state has output trace norm equal to the
        // input trace norm, so the ratio is identically 1.
        OptimizationReport report;
        report.value = 1.0;
        report.bound = BoundKind::exact;
        report.witness_state = canonical_entangled(d, n);
        report.canonical_start_value = 1.0;
        report.converged = true;
        return report;
    }

    const std::vector<Matrix> ext = extended_kraus(ch, d);
    auto state_objective = [&](const Vector& psi) {
        const double in_norm = schatten_norm_hermitian(state_marginal(psi, d, n), p);
        const double out_norm = schatten_norm_hermitian(rank_one_output(ext, psi), p);
        return out_norm / in_norm;
    };
    return optimize_over_states(state_objective, d, n, opts);
}

OptimizationReport s_d(const QuantumChannel& ch, int d, const OptimOptions& opts) {
    require(d >= 1, "s_d: d must be >= 1");
    const int n = ch.in_dim;
    const std::vector<Matrix> ext = extended_kraus(ch, d);
    auto state_objective = [&](const Vector& psi) {
        const double s_in = entropy_nats_clamped(hermitian_eigenvalues(state_marginal(psi, d, n)));
        const double s_out = entropy_nats_clamped(hermitian_eigenvalues(rank_one_output(ext, psi)));
        return s_in - s_out;
    };
    return optimize_over_states(state_objective, d, n, opts);
}

double entropy_quotient_F(const Matrix& rho, double p) {
    require(std::isfinite(p) && p > 1.0, "entropy_quotient_F: p must be finite and > 1");
    require(rho.rows() == rho.cols(), "entropy_quotient_F: rho must be square");
    if (std::abs(rho.trace().real() - 1.0) > 1e-8 || std::abs(rho.trace().imag()) > 1e-8) {
        throw std::invalid_argument("entropy_quotient_F: rho must have unit trace");
    }
    return (1.0 - schatten_norm_hermitian(rho, Exponent(p))) / (p - 1.0);
}

double derivative_at_one(const std::function<double(double)>& f, double f_at_one) {
    // One-sided first differences at h, h/2, h/4; two Richardson stages kill
    // the O(h) and O(h^2) error terms.
    const double h = 1e-3;
    const double d0 = (f(1.0 + h) - f_at_one) / h;
    const double d1 = (f(1.0 + h / 2) - f_at_one) / (h / 2);
    const double d2 = (f(1.0 + h / 4) - f_at_one) / (h / 4);
    const double r0 = 2.0 * d1 - d0;
    const double r1 = 2.0 * d2 - d1;
    return (4.0 * r1 - r0) / 3.0;
}

}  // namespace qlp
