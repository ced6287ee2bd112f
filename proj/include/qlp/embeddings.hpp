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

#ifndef QLP_EMBEDDINGS_HPP_
#define QLP_EMBEDDINGS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "qlp/channels.hpp"
#include "qlp/exponent.hpp"
#include "qlp/matrix.hpp"

namespace qlp {

// Complementary pair embed/project with project . embed = id. Classical
// factors are diagonal matrices; in teleportation-style maps the classical
// index is the first tensor factor.
struct EmbeddingPair {
    LinearMatrixMap embed;
    LinearMatrixMap project;
    // The maps are stored with their norm-balancing scalar prefactors applied;
    // the factors are recorded here (product is always 1). Direct-sum pairs
    // scale per block, so these stay 1 and the block scales live in the maps.
    double embed_scale = 1.0;
    double project_scale = 1.0;
    Exponent p;
    Exponent q;
    // Shape of valid inputs for `embed`: block-diagonal with these blocks;
    // diagonal entries only if domain_diagonal.
    std::vector<int> domain_blocks;
    bool domain_diagonal = false;
    std::string contract;
};

// rho in M_n -> n^(1 - 1/p - 1/q) * (1/n) sum_{k,l} e_{k,l} (x) T_{k,l} rho T_{k,l}^*
// together with its left inverse. Requires 1 <= p <= q <= inf; for p > q the
// pair is not defined, use the dual parameters (q', p') instead.
EmbeddingPair teleport_pair(int n, Exponent p, Exponent q);

// Classical e_{k,l} -> n^(1/p - 1 - 1/q) * n |eta_{k,l}><eta_{k,l}| with its
// left inverse reading off eta diagonal coefficients. Requires p <= q.
EmbeddingPair superdense_pair(int n, Exponent p, Exponent q);

// Teleportation on a direct sum of blocks n_b, each padded by a multiplicity
// ancilla of dimension d/n_b with d = lcm(dims); ancilla indices are
// lexicographic. Requires p <= q.
EmbeddingPair direct_sum_pair(const std::vector<int>& dims, Exponent p, Exponent q);

// Max over random probes of || project(embed(x)) - x ||_2 on Frobenius-unit
// probes drawn from the pair's domain shape.
double identity_residual(const EmbeddingPair& pair, int probes, std::uint64_t seed);

// Psi_{alpha,beta,delta}: l_1^{d^2} -> l_p^{d^2} (+)_p l_p^{d^2},
//   e_{ij} -> alpha e_{ij;1} + beta sum_{kl} e_{kl;1} + delta sum_{kl} e_{kl;2}.
LinearMatrixMap psi_map(int d, Complex alpha, Complex beta, Complex delta);

// Norm of psi_map as a map into the l_p direct sum:
// (|alpha+beta|^p + (d^2-1)|beta|^p + d^2 |delta|^p)^(1/p).
double psi_norm(int d, Complex alpha, Complex beta, Complex delta, Exponent p);

// Largest Frobenius deviation, over random density probes, of
//   (Psi (x) id_d) . j_1  versus  J~_p . theta_lambda^{d,p}
// with the matched coefficients alpha = lambda d^(1/p'),
// beta = (1-lambda)/(d^(1/p) n), delta = beta ((n-d)/d)^(1/p).
double factorization_residual(int n, int d, double lambda, Exponent p, int probes,
                              std::uint64_t seed);

}  // namespace qlp

#endif  // QLP_EMBEDDINGS_HPP_
