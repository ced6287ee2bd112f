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

#include "qlp/weyl.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qlp {

namespace {

void check_n(int n) {
    if (n < 1) throw std::invalid_argument("weyl: n must be >= 1");
}

// Representative of x mod n in [0, n).
long long mod_n(long long x, int n) {
    long long r = x % n;
    return r < 0 ? r + n : r;
}

// exp(2 pi i num / n) from the reduced integer numerator.
Complex root_of_unity(int n, long long num) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(mod_n(num, n)) / n;
    return Complex(std::cos(angle), std::sin(angle));
}

}  // namespace

Matrix weyl_u(int n, long long k) {
    check_n(n);
    Matrix u = Matrix::Zero(n, n);
    for (int c = 0; c < n; ++c) {
        u(c, c) = root_of_unity(n, k * (c + 1));
    }
    return u;
}

Matrix weyl_v(int n, long long l) {
    check_n(n);
    Matrix v = Matrix::Zero(n, n);
    for (int c = 0; c < n; ++c) {
        v(mod_n(l + c, n), c) = 1.0;
    }
    return v;
}

Matrix shift_op(int n, long long k, long long l) {
    check_n(n);
    Matrix t = Matrix::Zero(n, n);
    for (int c = 0; c < n; ++c) {
        t(mod_n(l + c, n), c) = root_of_unity(n, -k * (c + 1));
    }
    return t;
}

Vector max_entangled(int n) {
    check_n(n);
    Vector psi = Vector::Zero(static_cast<Eigen::Index>(n) * n);
    const double a = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i) psi[static_cast<Eigen::Index>(i) * n + i] = a;
    return psi;
}

Vector eta_state(int n, long long k, long long l) {
    check_n(n);
    Vector eta = Vector::Zero(static_cast<Eigen::Index>(n) * n);
    const double a = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i) {
        // (u_k e_i) (x) (v_l e_i) = exp(2 pi i k (i+1) / n) e_i (x) e_{l+i}
        eta[static_cast<Eigen::Index>(i) * n + mod_n(l + i, n)] = a * root_of_unity(n, k * (i + 1));
    }
    return eta;
}

std::vector<Vector> eta_basis(int n) {
    check_n(n);
    std::vector<Vector> basis;
    basis.reserve(static_cast<std::size_t>(n) * n);
    for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
            basis.push_back(eta_state(n, k, l));
        }
    }
    return basis;
}

double teleport_identity_residual(int n, const Vector& h) {
    check_n(n);
    if (h.size() != n) throw std::invalid_argument("teleport_identity_residual: h must have length n");
    const Vector lhs = kron_vec(h, max_entangled(n));
    Vector rhs = Vector::Zero(lhs.size());
    for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
            rhs += kron_vec(eta_state(n, k, l), shift_op(n, k, l) * h);
        }
    }
    rhs /= static_cast<double>(n);
    return (lhs - rhs).norm();
}

}  // namespace qlp
