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
#include "qlp/parallel.hpp"

namespace {

using qlp::Exponent;
using qlp::LogBase;
using qlp::Matrix;
using qlp::Vector;

constexpr double kLn2 = 0.69314718055994530942;

}  // namespace

TEST_CASE("von neumann entropy on reference states") {
    Vector psi = qlp::random_pure_state(4, 201);
    Matrix pure = psi * psi.adjoint();
    CHECK(std::abs(qlp::von_neumann_entropy(pure)) < 1e-12);

    for (int n : {2, 3, 5}) {
        Matrix mixed = Matrix::Identity(n, n) / static_cast<double>(n);
        CHECK(qlp::von_neumann_entropy(mixed, LogBase::nats) ==
              doctest::Approx(std::log(static_cast<double>(n))).epsilon(1e-13));
        CHECK(qlp::von_neumann_entropy(mixed, LogBase::bits) ==
              doctest::Approx(std::log2(static_cast<double>(n))).epsilon(1e-13));
    }

    // Additive over tensor products.
    Matrix a = qlp::random_density(2, 2, 202);
    Matrix b = qlp::random_density(3, 3, 203);
    CHECK(qlp::von_neumann_entropy(qlp::kron(a, b)) ==
          doctest::Approx(qlp::von_neumann_entropy(a) + qlp::von_neumann_entropy(b))
              .epsilon(1e-12));

    CHECK_THROWS_AS(qlp::von_neumann_entropy(Matrix(2.0 * pure)), std::invalid_argument);
    Matrix indefinite = Matrix::Zero(2, 2);
    indefinite(0, 0) = 1.5;
    indefinite(1, 1) = -0.5;
    CHECK_THROWS_AS(qlp::von_neumann_entropy(indefinite), std::invalid_argument);
}

TEST_CASE("binary entropy frozen values and symmetry") {
    CHECK(qlp::binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(qlp::binary_entropy(0.25) == doctest::Approx(0.8112781244591328).epsilon(1e-15));
    CHECK(qlp::binary_entropy(0.0) == 0.0);
    CHECK(qlp::binary_entropy(1.0) == 0.0);
    for (double x : {0.1, 0.37, 0.62}) {
        CHECK(qlp::binary_entropy(x) == doctest::Approx(qlp::binary_entropy(1.0 - x)).epsilon(1e-14));
        CHECK(qlp::binary_entropy(x, LogBase::nats) ==
              doctest::Approx(qlp::binary_entropy(x) * kLn2).epsilon(1e-14));
    }
    CHECK_THROWS_AS(qlp::binary_entropy(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(qlp::binary_entropy(1.1), std::invalid_argument);
}

TEST_CASE("closed d-norms: normalization, frozen points, limits") {
    // p = 1 gives exactly 1 for every trace preserving member of both families.
    for (int n : {2, 3, 4}) {
        for (int d = 1; d <= n; ++d) {
            for (double lambda : {0.0, 0.3, 0.7, 1.0}) {
                CHECK(qlp::dnorm_depolarizing_closed(n, lambda, d, 1.0) ==
                      doctest::Approx(1.0).epsilon(1e-14));
                CHECK(qlp::dnorm_erasure_closed(n, lambda, d, 1.0) ==
                      doctest::Approx(1.0).epsilon(1e-14));
            }
        }
    }

    CHECK(qlp::dnorm_depolarizing_closed(2, 0.5, 2, 2.0) ==
          doctest::Approx(std::sqrt(0.875)).epsilon(1e-15));
    CHECK(qlp::dnorm_erasure_closed(3, 0.5, 2, 2.0) ==
          doctest::Approx(std::sqrt(0.75)).epsilon(1e-15));

    // p = inf takes the largest branch value.
    CHECK(qlp::dnorm_depolarizing_closed(2, 0.8, 2, qlp::Exponent::inf()) ==
          doctest::Approx(1.7).epsilon(1e-15));
    CHECK(qlp::dnorm_erasure_closed(2, 0.3, 2, qlp::Exponent::inf()) ==
          doctest::Approx(0.7).epsilon(1e-15));
    // Large finite p approaches the inf value from above: the power sum
    // (lambda d)^p / d + (1 - lambda)^p dominates max(lambda d, 1-lambda)^p
    // once lambda d <= 1 - lambda, here 0.6 vs 0.7.
    CHECK(qlp::dnorm_erasure_closed(2, 0.3, 2, 64.0) ==
          doctest::Approx(0.7).epsilon(0.05));
    CHECK(qlp::dnorm_erasure_closed(2, 0.3, 2, 64.0) >= 0.7 - 1e-12);

    // More assistance never shrinks the norm.
    for (double lambda : {0.2, 0.6, 1.0}) {
        for (double p : {1.5, 2.0, 4.0}) {
            for (int d = 1; d < 4; ++d) {
                CHECK(qlp::dnorm_depolarizing_closed(4, lambda, d + 1, p) >=
                      qlp::dnorm_depolarizing_closed(4, lambda, d, p) - 1e-12);
                CHECK(qlp::dnorm_erasure_closed(4, lambda, d + 1, p) >=
                      qlp::dnorm_erasure_closed(4, lambda, d, p) - 1e-12);
            }
        }
    }

    CHECK_THROWS_AS(qlp::dnorm_depolarizing_closed(2, 0.5, 3, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(qlp::dnorm_erasure_closed(2, 1.5, 2, 2.0), std::invalid_argument);
}

TEST_CASE("product capacities: endpoints, linearity, monotonicity") {
    // Erasure capacity is linear in lambda with slope log2(nd).
    for (int n : {2, 3}) {
        for (int d = 1; d <= n; ++d) {
            const double slope = std::log2(static_cast<double>(n) * d);
            for (double lambda : {0.0, 0.25, 0.5, 1.0}) {
                CHECK(qlp::capacity_erasure(n, lambda, d) ==
                      doctest::Approx(lambda * slope).epsilon(1e-14));
            }
        }
    }
    CHECK(qlp::capacity_erasure(2, 0.5, 2) == doctest::Approx(1.0).epsilon(1e-14));

    // Depolarizing endpoints: zero capacity at lambda = 0, log2(nd) at 1.
    for (int n : {2, 3, 4}) {
        for (int d = 1; d <= n; ++d) {
            CHECK(std::abs(qlp::capacity_depolarizing(n, 0.0, d)) < 1e-13);
            CHECK(qlp::capacity_depolarizing(n, 1.0, d) ==
                  doctest::Approx(std::log2(static_cast<double>(n) * d)).epsilon(1e-14));
        }
    }

    // Capacity grows with the assistance dimension.
    for (double lambda : {0.25, 0.5, 0.75}) {
        for (int d = 1; d < 4; ++d) {
            CHECK(qlp::capacity_depolarizing(4, lambda, d + 1) >=
                  qlp::capacity_depolarizing(4, lambda, d) - 1e-12);
            CHECK(qlp::capacity_erasure(4, lambda, d + 1) >=
                  qlp::capacity_erasure(4, lambda, d) - 1e-12);
        }
    }
}

TEST_CASE("depolarizing capacity sits between its erasure-style bounds") {
    for (int n : {2, 3}) {
        for (int d = 1; d <= n; ++d) {
            for (double lambda : {0.0, 0.2, 0.5, 0.8, 1.0}) {
                qlp::BoundsReport rep = qlp::depolarizing_bounds_check(n, d, lambda);
                CHECK(rep.pass);
                CHECK(rep.lower_bits <= rep.capacity_bits + 1e-12);
                CHECK(rep.capacity_bits <= rep.upper_bits + 1e-12);
                CHECK(rep.width_bits <= 1.0 + 1e-12);
                CHECK(rep.width_bits == doctest::Approx(rep.upper_bits - rep.lower_bits).epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("assistance gap: sign pattern and endpoints") {
    CHECK(std::abs(qlp::gap_f(4, 2, 0.0)) < 1e-12);
    CHECK(std::abs(qlp::gap_f(4, 2, 1.0)) < 1e-12);
    for (double lambda : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        CHECK(qlp::gap_f(4, 2, lambda) > 0.0);
        CHECK(qlp::gap_f(4, 2, lambda) ==
              doctest::Approx(qlp::gap_combination(4, 4, 2, lambda)).epsilon(1e-15));
    }
    // The (3; 3, 2) combination is strictly negative in the interior.
    for (double lambda : {0.25, 0.5, 0.75}) {
        CHECK(qlp::gap_combination(3, 3, 2, lambda) < 0.0);
    }
    CHECK_THROWS_AS(qlp::gap_f(3, 2, 0.5), std::invalid_argument);
}

TEST_CASE("strong subadditivity holds on random tripartite states") {
    qlp::TrialCheckReport rep = qlp::ssa_check(2, 2, 2, 100, 301);
    CHECK(rep.pass);
    CHECK(rep.trials == 100);
    CHECK(rep.failures == 0);
    CHECK(rep.worst_margin >= -1e-9);

    // Deterministic across job counts, bit for bit.
    qlp::TrialCheckReport serial = qlp::ssa_check(2, 2, 2, 50, 302, 1e-9, 1);
    qlp::TrialCheckReport parallel = qlp::ssa_check(2, 2, 2, 50, 302, 1e-9, 0);
    CHECK(serial.worst_margin == parallel.worst_margin);
    CHECK(serial.failures == parallel.failures);

    CHECK_THROWS_AS(qlp::ssa_check(0, 2, 2, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(qlp::ssa_check(2, 2, 2, 0, 1), std::invalid_argument);
}

TEST_CASE("mean subset entropy dominates its share of the total") {
    qlp::TrialCheckReport rep = qlp::erasure_component_check(2, 3, 1, 60, 303);
    CHECK(rep.pass);
    CHECK(rep.worst_margin >= -1e-9);
    qlp::TrialCheckReport rep2 = qlp::erasure_component_check(2, 3, 2, 60, 304);
    CHECK(rep2.pass);

    // Degenerate subset sizes give an exactly zero margin.
    CHECK(qlp::erasure_component_check(2, 2, 0, 5, 305).worst_margin == 0.0);
    CHECK(qlp::erasure_component_check(2, 2, 2, 5, 306).worst_margin == 0.0);

    CHECK_THROWS_AS(qlp::erasure_component_check(2, 2, 3, 5, 1), std::invalid_argument);
}

TEST_CASE("fannes-audenaert bound holds on random pairs") {
    for (int n : {2, 4}) {
        qlp::TrialCheckReport rep = qlp::fannes_check(n, 60, 307);
        CHECK(rep.pass);
        CHECK(rep.worst_margin >= -1e-9);
    }
    CHECK_THROWS_AS(qlp::fannes_check(1, 10, 1), std::invalid_argument);
}

TEST_CASE("derivative identity links the closed d-norm to the capacity") {
    // Erasure: d/dp of the closed norm at 1 is lambda ln d - h(lambda).
    const double lambda = 0.3;
    const double deriv_e = qlp::derivative_at_one(
        [&](double p) { return qlp::dnorm_erasure_closed(2, lambda, 2, p); }, 1.0);
    CHECK(deriv_e == doctest::Approx(lambda * std::log(2.0) -
                                     qlp::binary_entropy(lambda, LogBase::nats))
                         .epsilon(1e-6));

    // Depolarizing: the same identity rearranged, block term ln n.
    const double deriv_d = qlp::derivative_at_one(
        [&](double p) { return qlp::dnorm_depolarizing_closed(3, 0.6, 2, p); }, 1.0);
    CHECK(deriv_d == doctest::Approx(qlp::capacity_depolarizing(3, 0.6, 2) * kLn2 -
                                     std::log(3.0))
                         .epsilon(1e-6));
}

TEST_CASE("capacity recovered from the optimized d-norm derivative") {
    qlp::OptimOptions opts;
    opts.restarts = 8;
    opts.seed = 11;

    qlp::CapacityReport er = qlp::capacity_via_derivative(qlp::erasure_channel(2, 0.5), 2, opts);
    CHECK(er.closed_bits == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(er.deviation <= 1e-3);
    // Block term: lambda ln n plus the binary entropy of the branch weights.
    CHECK(er.block_term_nats ==
          doctest::Approx(0.5 * std::log(2.0) + qlp::binary_entropy(0.5, LogBase::nats))
              .epsilon(1e-13));

    qlp::CapacityReport dep = qlp::capacity_via_derivative(qlp::depolarizing_channel(2, 0.25), 1, opts);
    CHECK(dep.deviation <= 1e-3);

    // Tensor products do not declare covariance; the derivative route refuses.
    qlp::QuantumChannel prod = qlp::tensor(qlp::erasure_channel(2, 0.5), qlp::erasure_channel(2, 0.5));
    CHECK_THROWS_AS(qlp::capacity_via_derivative(prod, 1, opts), std::invalid_argument);
    CHECK_THROWS_AS(qlp::capacity_via_derivative(qlp::erasure_channel(2, 0.5), 3, opts),
                    std::invalid_argument);
}

TEST_CASE("erasure power bounds collapse to k lambda log2(nd)") {
    for (double lambda : {0.0, 0.35, 1.0}) {
        qlp::PowerBounds b2 = qlp::erasure_power_capacity_bounds(2, 2, lambda, 2);
        const double expected = 2.0 * lambda * std::log2(4.0);
        CHECK(std::abs(b2.upper_bits - b2.lower_bits) <= 1e-12);
        CHECK(b2.upper_bits == doctest::Approx(expected).epsilon(1e-13));
    }
    qlp::PowerBounds b3 = qlp::erasure_power_capacity_bounds(2, 1, 0.6, 3);
    CHECK(b3.lower_bits == doctest::Approx(1.8).epsilon(1e-13));
    CHECK(std::abs(b3.upper_bits - b3.lower_bits) <= 1e-12);
    qlp::PowerBounds b1 = qlp::erasure_power_capacity_bounds(3, 2, 0.4, 1);
    CHECK(b1.lower_bits == doctest::Approx(qlp::capacity_erasure(3, 0.4, 2)).epsilon(1e-15));

    CHECK_THROWS_AS(qlp::erasure_power_capacity_bounds(2, 3, 0.5, 2), std::invalid_argument);
    CHECK_THROWS_AS(qlp::erasure_power_capacity_bounds(2, 2, 0.5, 0), std::invalid_argument);
}
