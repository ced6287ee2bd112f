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

#ifndef QLP_MIXED_NORMS_HPP_
#define QLP_MIXED_NORMS_HPP_

#include <cstdint>
#include <functional>

#include "qlp/channels.hpp"
#include "qlp/exponent.hpp"
#include "qlp/matrix.hpp"

namespace qlp {

// Vector-valued Schatten space S_p^N(S_q^M): elements live in
// M_N (x) M_M with the outer factor first.
struct MixedNormSpec {
    Exponent outer_p;
    Exponent inner_q;
    int outer_dim = 0;
    int inner_dim = 0;
};

enum class BoundKind { exact, lower, upper };

struct OptimizationReport {
    double value = 0.0;
    BoundKind bound = BoundKind::exact;
    // Maximizing object: a positive matrix A for mixed-norm problems, a pure
    // state for d-norm and entropy problems. The unused one stays empty.
    Matrix witness_matrix;
    Vector witness_state;
    // Objective value at the canonical fixed start (the maximally entangled
    // state for d-norm problems), evaluated directly without optimization.
    double canonical_start_value = 0.0;
    int restarts_used = 0;
    long iterations = 0;
    bool converged = false;
};

struct OptimOptions {
    int restarts = 32;       // random restarts on top of the canonical starts
    int max_iterations = 2000;
    double tol = 1e-9;
    std::uint64_t seed = 1;
    int jobs = 0;            // <= 0: all hardware threads; 1: serial reference
};

// Norm of a PSD element x of S_p^N(S_q^M). Exact for p == q and for
// degenerate factors; otherwise a one-sided optimization over positive
// matrices A = exp(H)/||exp(H)||_{2r} with 1/r = |1/p - 1/q|:
//   p > q: sup over ||A||_{2r} = 1 of ||(A (x) I) x (A (x) I)||_q  (lower bound)
//   p < q: inf over the same family of ||(A^-1 (x) I) x (A^-1 (x) I)||_q (upper bound)
OptimizationReport mixed_norm_positive(const Matrix& x, const MixedNormSpec& spec,
                                       const OptimOptions& opts = {});

// ||id_d (x) ch : S_p^d(S_1^n) -> S_p^(dm)||, restricted to rank-one inputs:
// the supremum over unit vectors psi in C^(d n) of
//   ||(id_d (x) ch)(psi psi*)||_p / ||(id_d (x) tr)(psi psi*)||_p.
// The maximally entangled start is always included and evaluated exactly;
// p = 1 returns the exact value 1 for any trace preserving channel.
OptimizationReport channel_d_norm(const QuantumChannel& ch, int d, Exponent p,
                                  const OptimOptions& opts = {});

// sup over pure psi of S((id_d (x) tr)(psi psi*)) - S((id_d (x) ch)(psi psi*)),
// natural log.
OptimizationReport s_d(const QuantumChannel& ch, int d, const OptimOptions& opts = {});

// F(rho, p) = (1 - ||rho||_p)/(p - 1) for a density matrix rho and p > 1;
// converges to the von Neumann entropy (natural log) as p -> 1.
double entropy_quotient_F(const Matrix& rho, double p);

// One-sided derivative of f at 1 from samples at 1 + h, h in
// {1e-3, 5e-4, 2.5e-4}, Richardson-extrapolated to O(h^3). The caller supplies
// the exact value f(1) (1 for channel d-norms) so the noisy path is never
// evaluated at the base point.
double derivative_at_one(const std::function<double(double)>& f, double f_at_one);

}  // namespace qlp

#endif  // QLP_MIXED_NORMS_HPP_
