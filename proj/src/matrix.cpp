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

#include "qlp/matrix.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace qlp {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

std::mt19937_64 engine_for(std::uint64_t seed) { return std::mt19937_64(seed); }

Complex gaussian(std::mt19937_64& rng) {
    static thread_local std::normal_distribution<double> dist(0.0, 1.0);
    const double re = dist(rng);
    const double im = dist(rng);
    return Complex(re, im);
}

// (sum_i |s_i|^p)^(1/p) with the largest magnitude factored out so large p
// cannot overflow.
double p_sum(const RealVector& s, Exponent p) {
    const double top = s.size() == 0 ? 0.0 : s.cwiseAbs().maxCoeff();
    if (top == 0.0) return 0.0;
    if (p.is_inf()) return top;
    const double pv = p.value();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        acc += std::pow(std::abs(s[i]) / top, pv);
    }
    return top * std::pow(acc, 1.0 / pv);
}

}  // namespace

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Vector kron_vec(const Vector& a, const Vector& b) {
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a[i] * b;
    }
    return out;
}

Matrix partial_trace(const Matrix& x, const std::vector<int>& dims,
                     const std::vector<int>& keep) {
    require(x.rows() == x.cols(), "partial_trace: input must be square");
    long long total = 1;
    for (int d : dims) {
        require(d >= 1, "partial_trace: factor dimensions must be >= 1");
        total *= d;
    }
    require(total == x.rows(), "partial_trace: product of dims must match the matrix size");
    const int k = static_cast<int>(dims.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        require(keep[i] >= 0 && keep[i] < k, "partial_trace: keep index out of range");
        require(i == 0 || keep[i] > keep[i - 1], "partial_trace: keep must be strictly increasing");
    }

    std::vector<int> traced;
    for (int f = 0; f < k; ++f) {
        if (std::find(keep.begin(), keep.end(), f) == keep.end()) traced.push_back(f);
    }

    std::vector<long long> stride(k, 1);
    for (int f = k - 2; f >= 0; --f) stride[f] = stride[f + 1] * dims[f + 1];

    long long keep_dim = 1;
    for (int f : keep) keep_dim *= dims[f];
    long long trace_dim = 1;
    for (int f : traced) trace_dim *= dims[f];

    // Flat offsets contributed by each kept (resp. traced) multi-index.
    auto offsets = [&](const std::vector<int>& factors, long long count) {
        std::vector<long long> off(count, 0);
        for (long long idx = 0; idx < count; ++idx) {
            long long rem = idx;
            for (int f = static_cast<int>(factors.size()) - 1; f >= 0; --f) {
                const int d = dims[factors[f]];
                off[idx] += (rem % d) * stride[factors[f]];
                rem /= d;
            }
        }
        return off;
    };
    const std::vector<long long> keep_off = offsets(keep, keep_dim);
    const std::vector<long long> trace_off = offsets(traced, trace_dim);

    Matrix out = Matrix::Zero(keep_dim, keep_dim);
    for (long long i = 0; i < keep_dim; ++i) {
        for (long long j = 0; j < keep_dim; ++j) {
            Complex acc(0.0, 0.0);
            for (long long m = 0; m < trace_dim; ++m) {
                acc += x(keep_off[i] + trace_off[m], keep_off[j] + trace_off[m]);
            }
            out(i, j) = acc;
        }
    }
    return out;
}

Matrix swap_kron_factors(const Matrix& x, int dim_a, int dim_b) {
    require(dim_a >= 1 && dim_b >= 1, "swap_kron_factors: dimensions must be >= 1");
    const long long n = static_cast<long long>(dim_a) * dim_b;
    require(x.rows() == n && x.cols() == n, "swap_kron_factors: size must equal dim_a * dim_b");
    std::vector<long long> perm(n);
    for (long long i1 = 0; i1 < dim_a; ++i1) {
        for (long long i2 = 0; i2 < dim_b; ++i2) {
            perm[i1 * dim_b + i2] = i2 * dim_a + i1;
        }
    }
    Matrix out(n, n);
    for (long long i = 0; i < n; ++i) {
        for (long long j = 0; j < n; ++j) {
            out(perm[i], perm[j]) = x(i, j);
        }
    }
    return out;
}

RealVector hermitian_eigenvalues(const Matrix& x) {
    require(x.rows() == x.cols(), "hermitian_eigenvalues: input must be square");
    const double scale = std::max(1.0, x.cwiseAbs().maxCoeff());
    const double dev = (x - x.adjoint()).cwiseAbs().maxCoeff();
    if (dev > kHermitianTol * scale) {
        throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian (deviation " +
                                    std::to_string(dev) + ")");
    }
    const Matrix sym = 0.5 * (x + x.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eigenvalues: eigensolver failed to converge");
    }
    return solver.eigenvalues().reverse();
}

double schatten_norm(const Matrix& x, Exponent p) {
    Eigen::JacobiSVD<Matrix> svd(x);
    return p_sum(svd.singularValues(), p);
}

double schatten_norm_hermitian(const Matrix& x, Exponent p) {
    return p_sum(hermitian_eigenvalues(x), p);
}

Vector random_pure_state(int dim, std::uint64_t seed) {
    require(dim >= 1, "random_pure_state: dim must be >= 1");
    auto rng = engine_for(seed);
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v[i] = gaussian(rng);
    const double nrm = v.norm();
    if (nrm == 0.0) {
        v.setZero();
        v[0] = 1.0;
        return v;
    }
    return v / nrm;
}

Matrix random_density(int dim, int rank, std::uint64_t seed) {
    require(dim >= 1, "random_density: dim must be >= 1");
    require(rank >= 1 && rank <= dim, "random_density: rank must be in [1, dim]");
    auto rng = engine_for(seed);
    Matrix g(dim, rank);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < rank; ++j) g(i, j) = gaussian(rng);
    }
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return rho;
}

Matrix random_matrix(int rows, int cols, std::uint64_t seed) {
    require(rows >= 1 && cols >= 1, "random_matrix: dimensions must be >= 1");
    auto rng = engine_for(seed);
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) m(i, j) = gaussian(rng);
    }
    return m;
}

Matrix haar_unitary(int dim, std::uint64_t seed) {
    Matrix g = random_matrix(dim, dim, seed);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fixing the phases of R's diagonal makes the distribution Haar.
    for (int i = 0; i < dim; ++i) {
        const Complex d = r(i, i);
        q.col(i) *= (std::abs(d) < 1e-300) ? Complex(1.0, 0.0) : d / std::abs(d);
    }
    return q;
}

}  // namespace qlp
