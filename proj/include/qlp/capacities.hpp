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

#ifndef QLP_CAPACITIES_HPP_
#define QLP_CAPACITIES_HPP_

#include <cstdint>

#include "qlp/channels.hpp"
#include "qlp/exponent.hpp"
#include "qlp/matrix.hpp"
#include "qlp/mixed_norms.hpp"

namespace qlp {

enum class LogBase { bits, nats };

// Entropy of a density matrix. Requires trace within 1e-8 of 1 and no
// eigenvalue below -1e-8; roundoff-level negative eigenvalues clamp to 0 and
// values above 1 clamp to 1.
double von_neumann_entropy(const Matrix& rho, LogBase base = LogBase::nats);

// -x log x - (1-x) log (1-x) on [0, 1], 0 at the endpoints.
double binary_entropy(double x, LogBase base = LogBase::bits);

// Closed-form d-norms ||id_d (x) ch : S_p^d(S_1^n) -> S_p^(dm)|| for
// 1 <= d <= n. Both families give exactly 1 at p = 1.
double dnorm_depolarizing_closed(int n, double lambda, int d, Exponent p);
double dnorm_erasure_closed(int n, double lambda, int d, Exponent p);

// Product capacities with entanglement assistance restricted to a d-dim
// ancilla, in bits; 1 <= d <= n.
double capacity_depolarizing(int n, double lambda, int d);
double capacity_erasure(int n, double lambda, int d);

struct BoundsReport {
    double capacity_bits = 0.0;
    double lower_bits = 0.0;   // lambda log2(nd) - H2(mu)
    double upper_bits = 0.0;   // lambda log2(nd)
    double width_bits = 0.0;   // H2(mu), never above 1
    bool pass = false;
};

// Sandwich of the depolarizing capacity between its erasure-style bounds,
// mu = lambda + (1-lambda)/(nd).
BoundsReport depolarizing_bounds_check(int n, int d, double lambda);

// C^{d_hi}(D_lambda) + C^1(D_lambda) - 2 C^{d_mid}(D_lambda) on M_n.
double gap_combination(int n, int d_hi, int d_mid, double lambda);

// gap_combination(n, d^2, d, lambda); requires d^2 <= n. A positive value
// exhibits non-additivity of the assistance dimension.
double gap_f(int n, int d, double lambda);

struct TrialCheckReport {
    int trials = 0;
    int failures = 0;
    // Smallest slack (bound minus tested quantity) seen across trials;
    // negative means a violation beyond roundoff.
    double worst_margin = 0.0;
    bool pass = false;
};

// S(AB) + S(BC) - S(ABC) - S(B) >= 0 on random tripartite densities.
TrialCheckReport ssa_check(int dim_a, int dim_b, int dim_c, int trials,
                           std::uint64_t seed, double tol = 1e-9, int jobs = 0);

// (s/k) S(rho) <= mean over |A| = s of S(N_A(rho)) on random densities of
// M_{n^k}, N_A the partial trace keeping the factors in A.
TrialCheckReport erasure_component_check(int n, int k, int s, int trials,
                                         std::uint64_t seed, double tol = 1e-9,
                                         int jobs = 0);

// |S(rho) - S(sigma)| <= T ln(n-1) + H(T), T = (1/2)||rho - sigma||_1,
// natural log, on random density pairs in M_n; requires n >= 2.
TrialCheckReport fannes_check(int n, int trials, std::uint64_t seed,
                              double tol = 1e-9, int jobs = 0);

struct CapacityReport {
    double closed_bits = 0.0;     // closed form; NaN for unrecognized families
    double numeric_bits = 0.0;
    double derivative = 0.0;      // d/dp of the d-norm at p = 1, natural log
    double block_term_nats = 0.0; // sum_j mu_j ln n_j + H(mu)
    double deviation = 0.0;       // |closed - numeric|
};

// Capacity recovered from the d-norm derivative at p = 1:
//   C ln 2 = sum_j mu_j ln n_j + H(mu) + d/dp ||ch||_d |_{p=1}
// with mu the output block weights. Requires a unitarily covariant channel
// and 1 <= d <= in_dim. The derivative samples the optimizer at
// p in {1 + 1e-3, 1 + 5e-4, 1 + 2.5e-4}.
CapacityReport capacity_via_derivative(const QuantumChannel& ch, int d,
                                       const OptimOptions& opts = {});

struct PowerBounds {
    double lower_bits = 0.0;  // k independent uses of the single-copy capacity
    double upper_bits = 0.0;  // blockwise pipeline bound on the k-fold power
};

// Capacity bounds for the k-th tensor power of the erasure channel on M_n
// with d-dim assistance per copy. The upper bound walks the constructed
// power's output blocks; both sides evaluate to k lambda log2(nd).
PowerBounds erasure_power_capacity_bounds(int n, int d, double lambda, int k);

}  // namespace qlp

#endif  // QLP_CAPACITIES_HPP_
