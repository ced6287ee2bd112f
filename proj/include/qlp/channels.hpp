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

#ifndef QLP_CHANNELS_HPP_
#define QLP_CHANNELS_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qlp/exponent.hpp"
#include "qlp/matrix.hpp"

namespace qlp {

// One direct summand of a channel's output space, carrying the classical
// probability weight of that branch. Blocks are contiguous index ranges of
// the output dimension, in declaration order.
struct OutBlock {
    int dim = 0;
    double weight = 0.0;
};

enum class ChannelFamily {
    depolarizing,
    erasure,
    erasure_component,
    tensor_product,
    custom,
};

// Completely positive trace preserving map in Kraus form. Constructed
// channels are validated: trace preservation within 1e-10, Choi matrix PSD
// within 1e-10, block weights summing to 1 within 1e-12.
struct QuantumChannel {
    int in_dim = 0;
    int out_dim = 0;
    std::vector<Matrix> kraus;       // each out_dim x in_dim
    std::vector<OutBlock> out_blocks;

    ChannelFamily family = ChannelFamily::custom;
    // Declared full-unitary covariance: ch(U* rho U) = B(U)* ch(rho) B(U)
    // with B(U) acting as U on full-size blocks and trivially on the rest.
    bool unitarily_covariant = false;
    double lambda = 0.0;  // family parameter where applicable
    std::string name;
};

// Validation and tolerance constants for channel construction.
inline constexpr double kTracePreservingTol = 1e-10;
inline constexpr double kChoiPsdTol = 1e-10;
inline constexpr double kWeightSumTol = 1e-12;

QuantumChannel depolarizing_channel(int n, double lambda);
QuantumChannel erasure_channel(int n, double lambda);

// Partial-trace channel N_A keeping the 0-based factors in `keep` out of k
// factors of dimension n each.
QuantumChannel erasure_component(int n, int k, const std::vector<int>& keep);

// Tensor product with output indices permuted so the product blocks are
// contiguous, ordered lexicographically in the parent block indices.
QuantumChannel tensor(const QuantumChannel& a, const QuantumChannel& b);

Matrix apply_channel(const QuantumChannel& ch, const Matrix& rho);

// Independent application path through the Choi matrix; used to cross-check
// the Kraus path, never as an optimization.
Matrix apply_via_choi(const QuantumChannel& ch, const Matrix& rho);

Matrix choi_matrix(const QuantumChannel& ch);

// Kraus operators of id_d (x) ch.
std::vector<Matrix> extended_kraus(const QuantumChannel& ch, int d);
Matrix apply_kraus(const std::vector<Matrix>& kraus, const Matrix& rho);

// View of one output block of an output matrix of ch.
Matrix output_block(const QuantumChannel& ch, const Matrix& out, int index);

struct CertifyReport {
    double tp_residual = 0.0;
    double choi_min_eigenvalue = 0.0;
    double weight_sum_deviation = 0.0;
    double block_diag_residual = 0.0;   // off-block mass of outputs on sampled states
    double covariance_residual = 0.0;   // only if the channel declares covariance
    int covariance_samples = 0;
    bool pass = false;
};

CertifyReport certify(const QuantumChannel& ch, std::uint64_t seed);

// JSON round trip. Serialized float64 values survive bit-exactly.
std::string channel_to_json(const QuantumChannel& ch);
QuantumChannel channel_from_json(const std::string& text);

// General linear map between matrix spaces; no TP/CP contract. Maps with a
// classical (diagonal) domain read only the diagonal blocks of their input.
struct LinearMatrixMap {
    int in_dim = 0;
    int out_dim = 0;
    std::vector<int> out_block_dims;
    std::function<Matrix(const Matrix&)> fn;
};

Matrix apply_map(const LinearMatrixMap& map, const Matrix& x);
Matrix choi_matrix(const LinearMatrixMap& map);

// Largest deviation from linearity on `probes` random input pairs, relative
// to the probe scale. A correct map stays at roundoff level.
double linearity_residual(const LinearMatrixMap& map, int probes, std::uint64_t seed);

// rho in M_d -> (lambda rho + ((1-lambda)/n) tr(rho) I_d)
//              (+) ((1-lambda)/n) tr(rho) ((n-d)/d)^(1/p) I_d  in M_2d.
// Requires 1 <= d <= n, lambda in [0,1], finite p.
LinearMatrixMap theta_map(int n, int d, double lambda, Exponent p);

}  // namespace qlp

#endif  // QLP_CHANNELS_HPP_
