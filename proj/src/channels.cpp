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

#include "qlp/channels.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "qlp/parallel.hpp"
#include "qlp/weyl.hpp"

namespace qlp {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void check_lambda(double lambda) {
    require(lambda >= 0.0 && lambda <= 1.0, "channel parameter lambda must lie in [0, 1]");
}

int blocks_total(const std::vector<OutBlock>& blocks) {
    int total = 0;
    for (const auto& b : blocks) total += b.dim;
    return total;
}

int block_offset(const std::vector<OutBlock>& blocks, int index) {
    int off = 0;
    for (int i = 0; i < index; ++i) off += blocks[i].dim;
    return off;
}

void validate_channel(const QuantumChannel& ch) {
    require(ch.in_dim >= 1 && ch.out_dim >= 1, "channel dimensions must be >= 1");
    require(!ch.kraus.empty(), "channel needs at least one Kraus operator");
    for (const auto& k : ch.kraus) {
        require(k.rows() == ch.out_dim && k.cols() == ch.in_dim,
                "Kraus operator has wrong shape");
    }
    require(!ch.out_blocks.empty(), "channel needs an output block structure");
    require(blocks_total(ch.out_blocks) == ch.out_dim,
            "output blocks must partition the output dimension");

    Matrix tp = Matrix::Zero(ch.in_dim, ch.in_dim);
    for (const auto& k : ch.kraus) tp += k.adjoint() * k;
    tp -= Matrix::Identity(ch.in_dim, ch.in_dim);
    if (tp.cwiseAbs().maxCoeff() > kTracePreservingTol) {
        throw std::invalid_argument("channel is not trace preserving within tolerance");
    }

    double wsum = 0.0;
    for (const auto& b : ch.out_blocks) {
        require(b.dim >= 1, "output block dimensions must be >= 1");
        require(b.weight >= -kWeightSumTol, "output block weights must be nonnegative");
        wsum += b.weight;
    }
    if (std::abs(wsum - 1.0) > kWeightSumTol) {
        throw std::invalid_argument("output block weights must sum to 1");
    }

    const RealVector eigs = hermitian_eigenvalues(choi_matrix(ch));
    if (eigs[eigs.size() - 1] < -kChoiPsdTol) {
        throw std::invalid_argument("channel Choi matrix is not PSD within tolerance");
    }
}

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            entries.push_back({m(i, j).real(), m(i, j).imag()});
        }
    }
    return entries;
}

Matrix matrix_from_json(const nlohmann::json& entries, int rows, int cols) {
    require(entries.is_array() && entries.size() == static_cast<std::size_t>(rows) * cols,
            "channel JSON: kraus entry count does not match dimensions");
    Matrix m(rows, cols);
    std::size_t idx = 0;
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j, ++idx) {
            const auto& e = entries[idx];
            require(e.is_array() && e.size() == 2, "channel JSON: entries must be [re, im] pairs");
            m(i, j) = Complex(e[0].get<double>(), e[1].get<double>());
        }
    }
    return m;
}

std::string family_name(ChannelFamily f) {
    switch (f) {
        case ChannelFamily::depolarizing: return "depolarizing";
        case ChannelFamily::erasure: return "erasure";
        case ChannelFamily::erasure_component: return "erasure_component";
        case ChannelFamily::tensor_product: return "tensor_product";
        case ChannelFamily::custom: return "custom";
    }
    return "custom";
}

ChannelFamily family_from_name(const std::string& s) {
    if (s == "depolarizing") return ChannelFamily::depolarizing;
    if (s == "erasure") return ChannelFamily::erasure;
    if (s == "erasure_component") return ChannelFamily::erasure_component;
    if (s == "tensor_product") return ChannelFamily::tensor_product;
    return ChannelFamily::custom;
}

}  // namespace

QuantumChannel depolarizing_channel(int n, double lambda) {
    require(n >= 1, "depolarizing_channel: n must be >= 1");
    check_lambda(lambda);
    QuantumChannel ch;
    ch.in_dim = n;
    ch.out_dim = n;
    const double uniform = (1.0 - lambda) / (static_cast<double>(n) * n);
    // Weyl twirl form: weight lambda + (1-lambda)/n^2 on T_{n,n} = I, and
    // (1-lambda)/n^2 on every other shift.
    for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
            double c = uniform;
            if (k == n && l == n) c += lambda;
            if (c > 0.0) ch.kraus.push_back(std::sqrt(c) * shift_op(n, k, l));
        }
    }
    ch.out_blocks = {OutBlock{n, 1.0}};
    ch.family = ChannelFamily::depolarizing;
    ch.unitarily_covariant = true;
    ch.lambda = lambda;
    ch.name = "depolarizing(n=" + std::to_string(n) + ")";
    validate_channel(ch);
    return ch;
}

QuantumChannel erasure_channel(int n, double lambda) {
    require(n >= 1, "erasure_channel: n must be >= 1");
    check_lambda(lambda);
    QuantumChannel ch;
    ch.in_dim = n;
    ch.out_dim = n + 1;
    if (lambda > 0.0) {
        Matrix keep = Matrix::Zero(n + 1, n);
        keep.topRows(n) = std::sqrt(lambda) * Matrix::Identity(n, n);
        ch.kraus.push_back(keep);
    }
    if (lambda < 1.0) {
        for (int i = 0; i < n; ++i) {
            Matrix drop = Matrix::Zero(n + 1, n);
            drop(n, i) = std::sqrt(1.0 - lambda);
            ch.kraus.push_back(drop);
        }
    }
    ch.out_blocks = {OutBlock{n, lambda}, OutBlock{1, 1.0 - lambda}};
    ch.family = ChannelFamily::erasure;
    ch.unitarily_covariant = true;
    ch.lambda = lambda;
    ch.name = "erasure(n=" + std::to_string(n) + ")";
    validate_channel(ch);
    return ch;
}

QuantumChannel erasure_component(int n, int k, const std::vector<int>& keep) {
    require(n >= 1 && k >= 1, "erasure_component: n and k must be >= 1");
    for (std::size_t i = 0; i < keep.size(); ++i) {
        require(keep[i] >= 0 && keep[i] < k, "erasure_component: keep index out of range");
        require(i == 0 || keep[i] > keep[i - 1], "erasure_component: keep must be strictly increasing");
    }
    const int s = static_cast<int>(keep.size());
    long long in_dim = 1, out_dim = 1, traced_dim = 1;
    for (int f = 0; f < k; ++f) in_dim *= n;
    for (int f = 0; f < s; ++f) out_dim *= n;
    traced_dim = in_dim / out_dim;

    std::vector<int> traced;
    for (int f = 0; f < k; ++f) {
        bool kept = false;
        for (int g : keep) kept |= (g == f);
        if (!kept) traced.push_back(f);
    }
    std::vector<long long> stride(k, 1);
    for (int f = k - 2; f >= 0; --f) stride[f] = stride[f + 1] * n;

    QuantumChannel ch;
    ch.in_dim = static_cast<int>(in_dim);
    ch.out_dim = static_cast<int>(out_dim);
    for (long long m = 0; m < traced_dim; ++m) {
        long long trace_off = 0;
        long long rem = m;
        for (int f = static_cast<int>(traced.size()) - 1; f >= 0; --f) {
            trace_off += (rem % n) * stride[traced[f]];
            rem /= n;
        }
        Matrix op = Matrix::Zero(out_dim, in_dim);
        for (long long r = 0; r < out_dim; ++r) {
            long long keep_off = 0;
            long long rr = r;
            for (int f = s - 1; f >= 0; --f) {
                keep_off += (rr % n) * stride[keep[f]];
                rr /= n;
            }
            op(r, keep_off + trace_off) = 1.0;
        }
        ch.kraus.push_back(op);
    }
    ch.out_blocks = {OutBlock{static_cast<int>(out_dim), 1.0}};
    ch.family = ChannelFamily::erasure_component;
    ch.name = "partial_trace(k=" + std::to_string(k) + ",|A|=" + std::to_string(s) + ")";
    validate_channel(ch);
    return ch;
}

QuantumChannel tensor(const QuantumChannel& a, const QuantumChannel& b) {
    QuantumChannel ch;
    ch.in_dim = a.in_dim * b.in_dim;
    ch.out_dim = a.out_dim * b.out_dim;

    // Permutation moving the interleaved product blocks to contiguous ranges,
    // lexicographic in (block of a, block of b).
    std::vector<int> perm(static_cast<std::size_t>(ch.out_dim));
    int new_off = 0;
    for (std::size_t i = 0; i < a.out_blocks.size(); ++i) {
        const int oa = block_offset(a.out_blocks, static_cast<int>(i));
        const int da = a.out_blocks[i].dim;
        for (std::size_t j = 0; j < b.out_blocks.size(); ++j) {
            const int ob = block_offset(b.out_blocks, static_cast<int>(j));
            const int db = b.out_blocks[j].dim;
            for (int alpha = 0; alpha < da; ++alpha) {
                for (int beta = 0; beta < db; ++beta) {
                    const int old_index = (oa + alpha) * b.out_dim + (ob + beta);
                    perm[old_index] = new_off + alpha * db + beta;
                }
            }
            ch.out_blocks.push_back(OutBlock{da * db, a.out_blocks[i].weight * b.out_blocks[j].weight});
            new_off += da * db;
        }
    }

    for (const auto& ka : a.kraus) {
        for (const auto& kb : b.kraus) {
            const Matrix prod = kron(ka, kb);
            Matrix moved = Matrix::Zero(ch.out_dim, ch.in_dim);
            for (int r = 0; r < ch.out_dim; ++r) moved.row(perm[r]) = prod.row(r);
            ch.kraus.push_back(std::move(moved));
        }
    }

    ch.family = ChannelFamily::tensor_product;
    ch.unitarily_covariant = false;
    ch.name = a.name + " (x) " + b.name;
    validate_channel(ch);
    return ch;
}

Matrix apply_channel(const QuantumChannel& ch, const Matrix& rho) {
    require(rho.rows() == ch.in_dim && rho.cols() == ch.in_dim,
            "apply: input must be in_dim x in_dim");
    Matrix out = Matrix::Zero(ch.out_dim, ch.out_dim);
    for (const auto& k : ch.kraus) out += k * rho * k.adjoint();
    return out;
}

Matrix apply_via_choi(const QuantumChannel& ch, const Matrix& rho) {
    require(rho.rows() == ch.in_dim && rho.cols() == ch.in_dim,
            "apply_via_choi: input must be in_dim x in_dim");
    const Matrix c = choi_matrix(ch);
    Matrix out = Matrix::Zero(ch.out_dim, ch.out_dim);
    for (int i = 0; i < ch.in_dim; ++i) {
        for (int j = 0; j < ch.in_dim; ++j) {
            if (rho(i, j) == Complex(0.0, 0.0)) continue;
            out += rho(i, j) * c.block(static_cast<Eigen::Index>(i) * ch.out_dim,
                                       static_cast<Eigen::Index>(j) * ch.out_dim,
                                       ch.out_dim, ch.out_dim);
        }
    }
    return out;
}

Matrix choi_matrix(const QuantumChannel& ch) {
    const Eigen::Index d = static_cast<Eigen::Index>(ch.in_dim) * ch.out_dim;
    Matrix c = Matrix::Zero(d, d);
    // ch(e_ij) = sum_K (K e_i)(K e_j)^*; assembled per Kraus operator.
    for (const auto& k : ch.kraus) {
        for (int i = 0; i < ch.in_dim; ++i) {
            for (int j = 0; j < ch.in_dim; ++j) {
                c.block(static_cast<Eigen::Index>(i) * ch.out_dim,
                        static_cast<Eigen::Index>(j) * ch.out_dim, ch.out_dim, ch.out_dim) +=
                    k.col(i) * k.col(j).adjoint();
            }
        }
    }
    return c;
}

std::vector<Matrix> extended_kraus(const QuantumChannel& ch, int d) {
    require(d >= 1, "extended_kraus: d must be >= 1");
    std::vector<Matrix> out;
    out.reserve(ch.kraus.size());
    const Matrix eye = Matrix::Identity(d, d);
    for (const auto& k : ch.kraus) out.push_back(kron(eye, k));
    return out;
}

Matrix apply_kraus(const std::vector<Matrix>& kraus, const Matrix& rho) {
    require(!kraus.empty(), "apply_kraus: empty Kraus list");
    Matrix out = Matrix::Zero(kraus[0].rows(), kraus[0].rows());
    for (const auto& k : kraus) out += k * rho * k.adjoint();
    return out;
}

Matrix output_block(const QuantumChannel& ch, const Matrix& out, int index) {
    require(index >= 0 && index < static_cast<int>(ch.out_blocks.size()),
            "output_block: block index out of range");
    require(out.rows() == ch.out_dim && out.cols() == ch.out_dim,
            "output_block: matrix does not match the output dimension");
    const int off = block_offset(ch.out_blocks, index);
    return out.block(off, off, ch.out_blocks[index].dim, ch.out_blocks[index].dim);
}

CertifyReport certify(const QuantumChannel& ch, std::uint64_t seed) {
    CertifyReport report;

    Matrix tp = Matrix::Zero(ch.in_dim, ch.in_dim);
    for (const auto& k : ch.kraus) tp += k.adjoint() * k;
    report.tp_residual = (tp - Matrix::Identity(ch.in_dim, ch.in_dim)).cwiseAbs().maxCoeff();

    const RealVector eigs = hermitian_eigenvalues(choi_matrix(ch));
    report.choi_min_eigenvalue = eigs[eigs.size() - 1];

    double wsum = 0.0;
    for (const auto& b : ch.out_blocks) wsum += b.weight;
    report.weight_sum_deviation = std::abs(wsum - 1.0);

    // Outputs must carry no mass outside the declared blocks.
    double off_block = 0.0;
    for (int t = 0; t < 10; ++t) {
        const Matrix rho = random_density(ch.in_dim, ch.in_dim, derive_seed(seed, 1000 + t));
        Matrix out = apply_channel(ch, rho);
        int off = 0;
        for (const auto& b : ch.out_blocks) {
            out.block(off, off, b.dim, b.dim).setZero();
            off += b.dim;
        }
        off_block = std::max(off_block, out.cwiseAbs().maxCoeff());
    }
    report.block_diag_residual = off_block;

    if (ch.unitarily_covariant) {
        const int samples = 50;
        report.covariance_samples = samples;
        double worst = 0.0;
        for (int t = 0; t < samples; ++t) {
            const Matrix u = haar_unitary(ch.in_dim, derive_seed(seed, 2000 + 2 * t));
            const Matrix rho = random_density(ch.in_dim, ch.in_dim, derive_seed(seed, 2001 + 2 * t));
            // B(U) acts as U on blocks of the input size and as identity on
            // the rest (classical flags are unitarily invariant).
            Matrix big_u = Matrix::Identity(ch.out_dim, ch.out_dim);
            int off = 0;
            for (const auto& b : ch.out_blocks) {
                if (b.dim == ch.in_dim) big_u.block(off, off, b.dim, b.dim) = u;
                off += b.dim;
            }
            const Matrix lhs = apply_channel(ch, Matrix(u.adjoint() * rho * u));
            const Matrix rhs = big_u.adjoint() * apply_channel(ch, rho) * big_u;
            worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
        }
        report.covariance_residual = worst;
    }

    report.pass = report.tp_residual <= kTracePreservingTol &&
                  report.choi_min_eigenvalue >= -kChoiPsdTol &&
                  report.weight_sum_deviation <= kWeightSumTol &&
                  report.block_diag_residual <= 1e-10 &&
                  report.covariance_residual <= 1e-9;
    return report;
}

std::string channel_to_json(const QuantumChannel& ch) {
    nlohmann::json j;
    j["in_dim"] = ch.in_dim;
    j["out_dim"] = ch.out_dim;
    nlohmann::json kraus = nlohmann::json::array();
    for (const auto& k : ch.kraus) kraus.push_back(matrix_to_json(k));
    j["kraus"] = std::move(kraus);
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : ch.out_blocks) blocks.push_back({b.dim, b.weight});
    j["out_blocks"] = std::move(blocks);
    j["family"] = family_name(ch.family);
    j["covariant"] = ch.unitarily_covariant;
    j["lambda"] = ch.lambda;
    j["name"] = ch.name;
    return j.dump();
}

QuantumChannel channel_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("channel JSON: parse error: ") + e.what());
    }
    require(j.contains("in_dim") && j.contains("kraus") && j.contains("out_blocks"),
            "channel JSON: in_dim, kraus and out_blocks are required");
    QuantumChannel ch;
    ch.in_dim = j["in_dim"].get<int>();
    require(ch.in_dim >= 1, "channel JSON: in_dim must be >= 1");
    for (const auto& b : j["out_blocks"]) {
        require(b.is_array() && b.size() == 2, "channel JSON: out_blocks entries must be [dim, weight]");
        ch.out_blocks.push_back(OutBlock{b[0].get<int>(), b[1].get<double>()});
    }
    ch.out_dim = j.contains("out_dim") ? j["out_dim"].get<int>() : blocks_total(ch.out_blocks);
    for (const auto& k : j["kraus"]) {
        ch.kraus.push_back(matrix_from_json(k, ch.out_dim, ch.in_dim));
    }
    if (j.contains("family")) ch.family = family_from_name(j["family"].get<std::string>());
    if (j.contains("covariant")) ch.unitarily_covariant = j["covariant"].get<bool>();
    if (j.contains("lambda")) ch.lambda = j["lambda"].get<double>();
    if (j.contains("name")) ch.name = j["name"].get<std::string>();
    validate_channel(ch);
    return ch;
}

Matrix apply_map(const LinearMatrixMap& map, const Matrix& x) {
    require(x.rows() == map.in_dim && x.cols() == map.in_dim,
            "apply: input must be in_dim x in_dim");
    return map.fn(x);
}

Matrix choi_matrix(const LinearMatrixMap& map) {
    const Eigen::Index d = static_cast<Eigen::Index>(map.in_dim) * map.out_dim;
    Matrix c = Matrix::Zero(d, d);
    Matrix basis = Matrix::Zero(map.in_dim, map.in_dim);
    for (int i = 0; i < map.in_dim; ++i) {
        for (int j = 0; j < map.in_dim; ++j) {
            basis(i, j) = 1.0;
            c.block(static_cast<Eigen::Index>(i) * map.out_dim,
                    static_cast<Eigen::Index>(j) * map.out_dim, map.out_dim, map.out_dim) =
                map.fn(basis);
            basis(i, j) = 0.0;
        }
    }
    return c;
}

double linearity_residual(const LinearMatrixMap& map, int probes, std::uint64_t seed) {
    require(probes >= 1, "linearity_residual: probes must be >= 1");
    double worst = 0.0;
    for (int t = 0; t < probes; ++t) {
        const Matrix x = random_matrix(map.in_dim, map.in_dim, derive_seed(seed, 2 * t));
        const Matrix y = random_matrix(map.in_dim, map.in_dim, derive_seed(seed, 2 * t + 1));
        const Complex a(0.7, -0.3), b(-0.4, 1.1);
        const Matrix lhs = map.fn(a * x + b * y);
        const Matrix rhs = a * map.fn(x) + b * map.fn(y);
        const double scale = std::max(1.0, std::max(lhs.cwiseAbs().maxCoeff(), rhs.cwiseAbs().maxCoeff()));
        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff() / scale);
    }
    return worst;
}

LinearMatrixMap theta_map(int n, int d, double lambda, Exponent p) {
    require(d >= 1 && d <= n, "theta_map: need 1 <= d <= n");
    check_lambda(lambda);
    require(!p.is_inf(), "theta_map: p must be finite");
    const double tail = std::pow(static_cast<double>(n - d) / d, p.reciprocal());
    const double uniform = (1.0 - lambda) / n;
    LinearMatrixMap map;
    map.in_dim = d;
    map.out_dim = 2 * d;
    map.out_block_dims = {d, d};
    map.fn = [n, d, lambda, uniform, tail](const Matrix& rho) {
        (void)n;
        const Complex tr = rho.trace();
        Matrix out = Matrix::Zero(2 * d, 2 * d);
        out.topLeftCorner(d, d) =
            lambda * rho + (uniform * tr) * Matrix::Identity(d, d);
        out.bottomRightCorner(d, d) = (uniform * tail * tr) * Matrix::Identity(d, d);
        return out;
    };
    return map;
}

}  // namespace qlp
