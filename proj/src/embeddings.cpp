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

#include "qlp/embeddings.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qlp/parallel.hpp"
#include "qlp/weyl.hpp"

namespace qlp {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void check_order(Exponent p, Exponent q, const char* what) {
    if (!(p <= q)) {
        throw std::invalid_argument(std::string(what) +
                                    ": requires p <= q; for p > q apply the dual pair with "
                                    "parameters (q', p')");
    }
}

std::vector<Matrix> shift_family(int n) {
    std::vector<Matrix> ts;
    ts.reserve(static_cast<std::size_t>(n) * n);
    for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) ts.push_back(shift_op(n, k, l));
    }
    return ts;
}

}  // namespace

EmbeddingPair teleport_pair(int n, Exponent p, Exponent q) {
    require(n >= 1, "teleport_pair: n must be >= 1");
    check_order(p, q, "teleport_pair");

    const auto ts = shift_family(n);
    const double embed_scale = std::pow(n, 1.0 - p.reciprocal() - q.reciprocal());
    const double project_scale = 1.0 / embed_scale;
    const Eigen::Index out_dim = static_cast<Eigen::Index>(n) * n * n;

    EmbeddingPair pair{{}, {}, embed_scale, project_scale, p, q, {n}, false, ""};
    pair.contract =
        "embed: complete isometry S_p^n -> S_q^n(l_p^{n^2}); project: complete "
        "contraction with project . embed = id";

    pair.embed.in_dim = n;
    pair.embed.out_dim = static_cast<int>(out_dim);
    pair.embed.out_block_dims.assign(static_cast<std::size_t>(n) * n, n);
    pair.embed.fn = [n, ts, embed_scale, out_dim](const Matrix& rho) {
        Matrix out = Matrix::Zero(out_dim, out_dim);
        const double c = embed_scale / n;
        for (std::size_t s = 0; s < ts.size(); ++s) {
            const Eigen::Index off = static_cast<Eigen::Index>(s) * n;
            out.block(off, off, n, n) = c * (ts[s] * rho * ts[s].adjoint());
        }
        return out;
    };

    pair.project.in_dim = static_cast<int>(out_dim);
    pair.project.out_dim = n;
    pair.project.out_block_dims = {n};
    pair.project.fn = [n, ts, project_scale](const Matrix& x) {
        Matrix acc = Matrix::Zero(n, n);
        for (std::size_t s = 0; s < ts.size(); ++s) {
            const Eigen::Index off = static_cast<Eigen::Index>(s) * n;
            acc += ts[s].adjoint() * x.block(off, off, n, n) * ts[s];
        }
        return Matrix(project_scale / n * acc);
    };
    return pair;
}

EmbeddingPair superdense_pair(int n, Exponent p, Exponent q) {
    require(n >= 1, "superdense_pair: n must be >= 1");
    check_order(p, q, "superdense_pair");

    const auto etas = eta_basis(n);
    const double embed_scale = std::pow(n, p.reciprocal() - 1.0 - q.reciprocal());
    const double project_scale = 1.0 / embed_scale;
    const int classical = n * n;

    EmbeddingPair pair{{}, {}, embed_scale, project_scale, p, q, {classical}, true, ""};
    pair.contract =
        "embed: complete isometry l_p^{n^2} -> S_q^n(S_p^n); project: complete "
        "contraction with project . embed = id";

    pair.embed.in_dim = classical;
    pair.embed.out_dim = classical;
    pair.embed.out_block_dims = {classical};
    pair.embed.fn = [n, etas, embed_scale, classical](const Matrix& x) {
        Matrix out = Matrix::Zero(classical, classical);
        for (int c = 0; c < classical; ++c) {
            out.noalias() += (embed_scale * n * x(c, c)) * (etas[c] * etas[c].adjoint());
        }
        return out;
    };

    pair.project.in_dim = classical;
    pair.project.out_dim = classical;
    pair.project.out_block_dims = {classical};
    pair.project.fn = [n, etas, project_scale, classical](const Matrix& rho) {
        Matrix out = Matrix::Zero(classical, classical);
        for (int c = 0; c < classical; ++c) {
            out(c, c) = project_scale / n * etas[c].dot(rho * etas[c]);
        }
        return out;
    };
    return pair;
}

EmbeddingPair direct_sum_pair(const std::vector<int>& dims, Exponent p, Exponent q) {
    require(!dims.empty(), "direct_sum_pair: need at least one block");
    for (int nb : dims) require(nb >= 1, "direct_sum_pair: block dimensions must be >= 1");
    check_order(p, q, "direct_sum_pair");

    long long d = 1;
    for (int nb : dims) d = std::lcm(d, static_cast<long long>(nb));
    const int dd = static_cast<int>(d);

    struct Block {
        int n = 0;        // block dimension
        int mult = 0;     // ancilla multiplicity d/n
        int in_off = 0;
        int out_off = 0;  // offset of the block's n^2 classical slots of size d
        std::vector<Matrix> ts;
    };
    std::vector<Block> blocks;
    int in_total = 0, out_total = 0;
    for (int nb : dims) {
        Block b;
        b.n = nb;
        b.mult = dd / nb;
        b.in_off = in_total;
        b.out_off = out_total;
        b.ts = shift_family(nb);
        in_total += nb;
        out_total += nb * nb * dd;
        blocks.push_back(std::move(b));
    }

    const double rp = p.reciprocal();
    const double rpc = 1.0 - rp;  // 1/p'
    const double rq = q.reciprocal();
    const double embed_front = std::pow(dd, -rq);
    const double project_front = std::pow(dd, rq - 1.0);

    EmbeddingPair pair{{}, {}, 1.0, 1.0, p, q, dims, false, ""};
    pair.contract =
        "embed: complete isometry (+)_p S_p^{n_b} -> S_q^d(l_p^{sum n_b^2}); project: "
        "complete contraction with project . embed = id";

    pair.embed.in_dim = in_total;
    pair.embed.out_dim = out_total;
    for (const auto& b : blocks) {
        pair.embed.out_block_dims.insert(pair.embed.out_block_dims.end(),
                                         static_cast<std::size_t>(b.n) * b.n, dd);
    }
    pair.embed.fn = [blocks, dd, rp, embed_front, out_total](const Matrix& x) {
        Matrix out = Matrix::Zero(out_total, out_total);
        for (const auto& b : blocks) {
            const Matrix rho = x.block(b.in_off, b.in_off, b.n, b.n);
            const double c = embed_front * std::pow(b.n, -rp);
            const Matrix pad = Matrix::Identity(b.mult, b.mult);
            for (std::size_t s = 0; s < b.ts.size(); ++s) {
                const Eigen::Index off = b.out_off + static_cast<Eigen::Index>(s) * dd;
                out.block(off, off, dd, dd) =
                    c * kron(b.ts[s] * rho * b.ts[s].adjoint(), pad);
            }
        }
        return out;
    };

    pair.project.in_dim = out_total;
    pair.project.out_dim = in_total;
    pair.project.out_block_dims = dims;
    pair.project.fn = [blocks, dd, rpc, project_front, in_total](const Matrix& y) {
        Matrix out = Matrix::Zero(in_total, in_total);
        for (const auto& b : blocks) {
            Matrix acc = Matrix::Zero(b.n, b.n);
            for (std::size_t s = 0; s < b.ts.size(); ++s) {
                const Eigen::Index off = b.out_off + static_cast<Eigen::Index>(s) * dd;
                const Matrix slot = y.block(off, off, dd, dd);
                const Matrix reduced =
                    partial_trace(slot, {b.n, b.mult}, std::vector<int>{0});
                acc += b.ts[s].adjoint() * reduced * b.ts[s];
            }
            out.block(b.in_off, b.in_off, b.n, b.n) =
                project_front * std::pow(b.n, -rpc) * acc;
        }
        return out;
    };
    return pair;
}

double identity_residual(const EmbeddingPair& pair, int probes, std::uint64_t seed) {
    require(probes >= 1, "identity_residual: probes must be >= 1");
    int in_total = 0;
    for (int b : pair.domain_blocks) in_total += b;
    double worst = 0.0;
    for (int t = 0; t < probes; ++t) {
        Matrix x = Matrix::Zero(in_total, in_total);
        int off = 0;
        for (std::size_t b = 0; b < pair.domain_blocks.size(); ++b) {
            const int nb = pair.domain_blocks[b];
            Matrix blk = random_matrix(nb, nb, derive_seed(seed, t * 97 + b));
            if (pair.domain_diagonal) blk = Matrix(blk.diagonal().asDiagonal());
            x.block(off, off, nb, nb) = blk;
            off += nb;
        }
        x /= x.norm();
        const Matrix y = pair.project.fn(pair.embed.fn(x));
        worst = std::max(worst, (y - x).norm());
    }
    return worst;
}

LinearMatrixMap psi_map(int d, Complex alpha, Complex beta, Complex delta) {
    require(d >= 1, "psi_map: d must be >= 1");
    const int classical = d * d;
    LinearMatrixMap map;
    map.in_dim = classical;
    map.out_dim = 2 * classical;
    map.out_block_dims = {classical, classical};
    map.fn = [classical, alpha, beta, delta](const Matrix& x) {
        Complex total(0.0, 0.0);
        for (int c = 0; c < classical; ++c) total += x(c, c);
        Matrix out = Matrix::Zero(2 * classical, 2 * classical);
        for (int c = 0; c < classical; ++c) {
            out(c, c) = alpha * x(c, c) + beta * total;
            out(classical + c, classical + c) = delta * total;
        }
        return out;
    };
    return map;
}

double psi_norm(int d, Complex alpha, Complex beta, Complex delta, Exponent p) {
    require(d >= 1, "psi_norm: d must be >= 1");
    const double head = std::abs(alpha + beta);
    const double mid = std::abs(beta);
    const double tail = std::abs(delta);
    if (p.is_inf()) return std::max({head, mid, tail});
    const double pv = p.value();
    const double dd = static_cast<double>(d) * d;
    return std::pow(std::pow(head, pv) + (dd - 1.0) * std::pow(mid, pv) + dd * std::pow(tail, pv),
                    1.0 / pv);
}

double factorization_residual(int n, int d, double lambda, Exponent p, int probes,
                              std::uint64_t seed) {
    require(n >= 1 && d >= 1 && d <= n, "factorization_residual: need 1 <= d <= n");
    require(lambda >= 0.0 && lambda <= 1.0, "factorization_residual: lambda must be in [0, 1]");
    require(!p.is_inf(), "factorization_residual: p must be finite");
    require(probes >= 1, "factorization_residual: probes must be >= 1");

    const double rp = p.reciprocal();
    const Complex alpha = lambda * std::pow(d, 1.0 - rp);
    const Complex beta = (1.0 - lambda) / (std::pow(d, rp) * n);
    const Complex delta = beta * std::pow(static_cast<double>(n - d) / d, rp);

    // Left route: j_1 (teleportation at (1, inf)) followed by Psi acting on
    // the classical factor with M_d coefficients.
    const EmbeddingPair tele = teleport_pair(d, Exponent(1.0), Exponent::inf());
    const int classical = d * d;
    auto psi_on_blocks = [&](const Matrix& x) {
        Matrix total = Matrix::Zero(d, d);
        for (int c = 0; c < classical; ++c) {
            total += x.block(static_cast<Eigen::Index>(c) * d, static_cast<Eigen::Index>(c) * d, d, d);
        }
        Matrix out = Matrix::Zero(2 * static_cast<Eigen::Index>(classical) * d,
                                  2 * static_cast<Eigen::Index>(classical) * d);
        for (int c = 0; c < classical; ++c) {
            const Eigen::Index off1 = static_cast<Eigen::Index>(c) * d;
            const Eigen::Index off2 = (static_cast<Eigen::Index>(classical) + c) * d;
            out.block(off1, off1, d, d) =
                alpha * x.block(off1, off1, d, d) + beta * total;
            out.block(off2, off2, d, d) = delta * total;
        }
        return out;
    };

    // Right route: theta into two d-blocks, then the two-block teleportation
    // embedding at (p, inf).
    const LinearMatrixMap theta = theta_map(n, d, lambda, p);
    const EmbeddingPair direct = direct_sum_pair({d, d}, p, Exponent::inf());

    double worst = 0.0;
    for (int t = 0; t < probes; ++t) {
        const Matrix rho = random_density(d, d, derive_seed(seed, t));
        const Matrix lhs = psi_on_blocks(tele.embed.fn(rho));
        const Matrix rhs = direct.embed.fn(theta.fn(rho));
        worst = std::max(worst, (lhs - rhs).norm());
    }
    return worst;
}

}  // namespace qlp
