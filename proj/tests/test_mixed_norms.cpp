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

#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "qlp/capacities.hpp"
#include "qlp/channels.hpp"
#include "qlp/matrix.hpp"
#include "qlp/mixed_norms.hpp"
#include "qlp/parallel.hpp"
#include "qlp/weyl.hpp"

namespace {

using qlp::Exponent;
using qlp::Matrix;
using qlp::MixedNormSpec;
using qlp::OptimOptions;
using qlp::Vector;

OptimOptions fast_opts(int restarts = 16) {
    OptimOptions o;
    o.restarts = restarts;
    o.seed = 7;
    return o;
}

}  // namespace

TEST_CASE("mixed norm degenerates to schatten norms") {
    Matrix x = qlp::random_density(6, 6, 101);
    // Equal exponents: the space is a plain Schatten class.
    for (double p : {1.0, 2.0, 3.0}) {
        qlp::OptimizationReport rep = qlp::mixed_norm_positive(x, {p, p, 2, 3});
        CHECK(rep.bound == qlp::BoundKind::exact);
        CHECK(rep.value == doctest::Approx(qlp::schatten_norm_hermitian(x, p)).epsilon(1e-13));
    }
    // A trivial factor leaves only the other exponent.
    qlp::OptimizationReport outer1 = qlp::mixed_norm_positive(x, {2.0, 3.0, 1, 6});
    CHECK(outer1.bound == qlp::BoundKind::exact);
    CHECK(outer1.value == doctest::Approx(qlp::schatten_norm_hermitian(x, 3.0)).epsilon(1e-13));
    qlp::OptimizationReport inner1 = qlp::mixed_norm_positive(x, {2.0, 3.0, 6, 1});
    CHECK(inner1.value == doctest::Approx(qlp::schatten_norm_hermitian(x, 2.0)).epsilon(1e-13));

    Matrix neg = Matrix::Identity(6, 6);
    neg(0, 0) = -0.5;
    CHECK_THROWS_AS(qlp::mixed_norm_positive(neg, {2.0, 1.0, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(qlp::mixed_norm_positive(x, {2.0, 1.0, 2, 2}), std::invalid_argument);
}

TEST_CASE("inner trace norm reduces to the partial trace") {
    // For PSD x, || x ||_{S_p(S_1)} = || (id (x) tr) x ||_p. The optimizer
    // runs the sup form here, so its value is a lower bound that attains.
    for (double p : {1.5, 2.0}) {
        Matrix x = qlp::random_density(4, 4, 103);
        double exact = qlp::schatten_norm_hermitian(qlp::partial_trace(x, {2, 2}, {0}), p);
        qlp::OptimizationReport rep = qlp::mixed_norm_positive(x, {p, 1.0, 2, 2}, fast_opts());
        CHECK(rep.bound == qlp::BoundKind::lower);
        CHECK(rep.value <= exact + 1e-9);
        CHECK(rep.value >= exact - 1e-6 * exact);
    }

    // Maximally entangled projector: the partial trace is I/d, so the norm
    // is d^(1/p - 1).
    const int d = 2;
    Vector psi = qlp::max_entangled(d);
    Matrix proj = psi * psi.adjoint();
    qlp::OptimizationReport rep = qlp::mixed_norm_positive(proj, {2.0, 1.0, d, d}, fast_opts());
    const double expected = std::pow(static_cast<double>(d), 0.5 - 1.0);
    CHECK(rep.value == doctest::Approx(expected).epsilon(1e-6));
}

TEST_CASE("mixed norm is multiplicative on product inputs") {
    Matrix a = qlp::random_density(2, 2, 105);
    Matrix b = qlp::random_density(2, 2, 106);
    Matrix x = qlp::kron(a, b);

    // Sup form (outer exponent above inner): lower bound attaining the
    // product of the factor norms.
    {
        double exact = qlp::schatten_norm_hermitian(a, 2.0) * qlp::schatten_norm_hermitian(b, 1.0);
        qlp::OptimizationReport rep = qlp::mixed_norm_positive(x, {2.0, 1.0, 2, 2}, fast_opts());
        CHECK(rep.bound == qlp::BoundKind::lower);
        CHECK(rep.value <= exact + 1e-9);
        CHECK(rep.value >= exact - 1e-6);
    }
    // Inf form (outer exponent below inner): upper bound attaining it.
    {
        double exact = qlp::schatten_norm_hermitian(a, 1.0) * qlp::schatten_norm_hermitian(b, 2.0);
        qlp::OptimizationReport rep = qlp::mixed_norm_positive(x, {1.0, 2.0, 2, 2}, fast_opts());
        CHECK(rep.bound == qlp::BoundKind::upper);
        CHECK(rep.value >= exact - 1e-9);
        CHECK(rep.value <= exact + 1e-6);
    }
    // Witness is a positive matrix of the outer size.
    qlp::OptimizationReport rep = qlp::mixed_norm_positive(x, {2.0, 1.0, 2, 2}, fast_opts());
    REQUIRE(rep.witness_matrix.rows() == 2);
    qlp::RealVector ev = qlp::hermitian_eigenvalues(rep.witness_matrix);
    CHECK(ev(ev.size() - 1) >= -1e-12);
}

TEST_CASE("channel d-norm at p = 1 is exactly one") {
    qlp::OptimizationReport rep = qlp::channel_d_norm(qlp::depolarizing_channel(3, 0.3), 2, 1.0);
    CHECK(rep.value == 1.0);
    CHECK(rep.bound == qlp::BoundKind::exact);
    CHECK(rep.canonical_start_value == 1.0);
}

TEST_CASE("identity channel has d-norm d^(1 - 1/p)") {
    qlp::QuantumChannel id2 = qlp::depolarizing_channel(2, 1.0);
    for (Exponent p : {Exponent(1.5), Exponent(2.0), Exponent::inf()}) {
        qlp::OptimizationReport rep = qlp::channel_d_norm(id2, 2, p, fast_opts(8));
        const double expected = std::pow(2.0, 1.0 - p.reciprocal());
        CHECK(rep.value == doctest::Approx(expected).epsilon(1e-9));
        // The maximally entangled start is the maximizer here.
        CHECK(rep.canonical_start_value == doctest::Approx(expected).epsilon(1e-12));
        CHECK(rep.value >= rep.canonical_start_value);
    }
}

TEST_CASE("d-norm witness reproduces the reported value") {
    qlp::QuantumChannel ch = qlp::depolarizing_channel(2, 0.5);
    qlp::OptimizationReport rep = qlp::channel_d_norm(ch, 2, 2.0, fast_opts(8));
    REQUIRE(rep.witness_state.size() == 4);
    CHECK(std::abs(rep.witness_state.norm() - 1.0) < 1e-10);

    // Re-evaluate the defining ratio at the witness.
    Matrix rho = rep.witness_state * rep.witness_state.adjoint();
    Matrix out = qlp::apply_kraus(qlp::extended_kraus(ch, 2), rho);
    Matrix marg = qlp::partial_trace(rho, {2, 2}, {0});
    const double ratio =
        qlp::schatten_norm_hermitian(out, 2.0) / qlp::schatten_norm_hermitian(marg, 2.0);
    CHECK(ratio == doctest::Approx(rep.value).epsilon(1e-12));

    // Frozen value: sqrt(7/8) for this channel and exponent.
    CHECK(rep.value == doctest::Approx(std::sqrt(0.875)).epsilon(1e-10));
}

TEST_CASE("s_d matches closed values on covariant families") {
    // Identity channel: the entropy gain is ln d.
    qlp::OptimizationReport id_rep = qlp::s_d(qlp::depolarizing_channel(2, 1.0), 2, fast_opts(8));
    CHECK(id_rep.value == doctest::Approx(std::log(2.0)).epsilon(1e-9));

    // Fully depolarizing: output is always I/n, so the best gain is
    // ln d - ln n.
    qlp::OptimizationReport dep_rep = qlp::s_d(qlp::depolarizing_channel(2, 0.0), 1, fast_opts(8));
    CHECK(dep_rep.value == doctest::Approx(-std::log(2.0)).epsilon(1e-9));

    // Erasure: lambda ln d - h(lambda) with h the natural-log binary entropy.
    const double lambda = 0.3;
    qlp::OptimizationReport er_rep = qlp::s_d(qlp::erasure_channel(2, lambda), 2, fast_opts(8));
    const double expected = lambda * std::log(2.0) - qlp::binary_entropy(lambda, qlp::LogBase::nats);
    CHECK(er_rep.value == doctest::Approx(expected).epsilon(1e-9));
    CHECK(er_rep.value >= er_rep.canonical_start_value);
}

TEST_CASE("entropy quotient F converges to the entropy") {
    for (int n : {2, 3, 4, 5}) {
        Matrix mixed = Matrix::Identity(n, n) / static_cast<double>(n);
        CHECK(qlp::entropy_quotient_F(mixed, 2.0) ==
              doctest::Approx(1.0 - 1.0 / std::sqrt(static_cast<double>(n))).epsilon(1e-14));
    }
    Vector psi = qlp::random_pure_state(3, 107);
    Matrix pure = psi * psi.adjoint();
    CHECK(std::abs(qlp::entropy_quotient_F(pure, 3.0)) < 1e-12);

    for (int t = 0; t < 10; ++t) {
        Matrix rho = qlp::random_density(4, 4, qlp::derive_seed(11, static_cast<std::uint64_t>(t)));
        const double s = qlp::von_neumann_entropy(rho, qlp::LogBase::nats);
        CHECK(std::abs(qlp::entropy_quotient_F(rho, 1.0 + 1e-6) - s) < 1e-4);
    }

    CHECK_THROWS_AS(qlp::entropy_quotient_F(pure, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(qlp::entropy_quotient_F(Matrix(2.0 * pure), 2.0), std::invalid_argument);
}

TEST_CASE("derivative at one is exact on low-order polynomials") {
    CHECK(qlp::derivative_at_one([](double p) { return p; }, 1.0) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(qlp::derivative_at_one([](double p) { return p * p; }, 1.0) ==
          doctest::Approx(2.0).epsilon(1e-11));

    // d/dp ||rho||_p at 1 is minus the entropy.
    Matrix rho = qlp::random_density(4, 4, 109);
    const double s = qlp::von_neumann_entropy(rho, qlp::LogBase::nats);
    const double deriv = qlp::derivative_at_one(
        [&](double p) { return qlp::schatten_norm_hermitian(rho, p); }, 1.0);
    CHECK(deriv == doctest::Approx(-s).epsilon(1e-6));

    // d/dp of the identity-channel d-norm d^(1 - 1/p) at 1 is ln d.
    const double dd = 3.0;
    const double deriv2 = qlp::derivative_at_one(
        [&](double p) { return std::pow(dd, 1.0 - 1.0 / p); }, 1.0);
    CHECK(deriv2 == doctest::Approx(std::log(dd)).epsilon(1e-7));
}
