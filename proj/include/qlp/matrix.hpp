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

#ifndef QLP_MATRIX_HPP_
#define QLP_MATRIX_HPP_

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qlp/exponent.hpp"

namespace qlp {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Hermiticity slack accepted before a matrix is rejected as non-Hermitian,
// relative to max(1, max |entry|).
inline constexpr double kHermitianTol = 1e-10;

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron_vec(const Vector& a, const Vector& b);

// Partial trace of x acting on the tensor product with factor dimensions
// `dims` (product must equal the size of x). `keep` lists the 0-based factor
// positions that survive, strictly increasing; the rest are traced out.
// keep == all factors returns x; keep == {} returns the 1x1 trace.
Matrix partial_trace(const Matrix& x, const std::vector<int>& dims,
                     const std::vector<int>& keep);

// Swaps the tensor factors of x in M_a (x) M_b, returning the same operator
// viewed in M_b (x) M_a.
Matrix swap_kron_factors(const Matrix& x, int dim_a, int dim_b);

// Eigenvalues of a Hermitian matrix, descending. The input is symmetrized as
// (x + x^*)/2 after the Hermiticity check (tolerance kHermitianTol).
RealVector hermitian_eigenvalues(const Matrix& x);

// Schatten p-norm via singular values. p = inf gives the operator norm.
double schatten_norm(const Matrix& x, Exponent p);

// Schatten p-norm of a Hermitian matrix via |eigenvalues|; cheaper and
// slightly more accurate than the SVD route for Hermitian inputs.
double schatten_norm_hermitian(const Matrix& x, Exponent p);

// Deterministic per seed: the same seed always yields identical bits.
Vector random_pure_state(int dim, std::uint64_t seed);
Matrix random_density(int dim, int rank, std::uint64_t seed);
Matrix random_matrix(int rows, int cols, std::uint64_t seed);
Matrix haar_unitary(int dim, std::uint64_t seed);

}  // namespace qlp

#endif  // QLP_MATRIX_HPP_
