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

#ifndef QLP_WEYL_HPP_
#define QLP_WEYL_HPP_

#include <vector>

#include "qlp/matrix.hpp"

namespace qlp {

// Discrete Weyl operators on C^n. Public indices are 1-based and reduced
// mod n into 1..n, with negative indices meaning u_{-k} = u_{n-k}. Phases
// are computed from the exact integer angle 2*pi*((k*j) mod n)/n per entry,
// never by accumulated multiplication.

// u_k: e_j -> exp(2 pi i k j / n) e_j
Matrix weyl_u(int n, long long k);

// v_l: e_j -> e_{l+j mod n}
Matrix weyl_v(int n, long long l);

// T_{k,l} = v_l u_{-k}: e_j -> exp(-2 pi i k j / n) e_{l+j mod n}
Matrix shift_op(int n, long long k, long long l);

// (1/sqrt n) sum_i e_i (x) e_i
Vector max_entangled(int n);

// eta_{k,l} = (u_k (x) v_l) applied to the maximally entangled vector.
Vector eta_state(int n, long long k, long long l);

// All n^2 eta vectors in row-major (k, l) order, k = 1..n outer, l = 1..n inner.
std::vector<Vector> eta_basis(int n);

// || h (x) psi_n - (1/n) sum_{k,l} eta_{k,l} (x) T_{k,l} h ||_2, the exactness
// defect of the teleportation expansion; zero for every h up to roundoff.
double teleport_identity_residual(int n, const Vector& h);

}  // namespace qlp

#endif  // QLP_WEYL_HPP_
