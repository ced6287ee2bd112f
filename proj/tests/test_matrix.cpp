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
#include <vector>

#include <doctest.h>

#include "qlp/exponent.hpp"
#include "qlp/matrix.hpp"

namespace {

using qlp::Complex;
using qlp::Matrix;
using qlp::Vector;

double frob(const Matrix& x) { return x.norm(); }

}  // namespace

TEST_CASE("exponent basics") {
    qlp::Exponent two(2.0);
    CHECK(two.value() == 2.0);
    CHECK(!two.is_inf());
    CHECK(two.reciprocal() == 0.5);
    CHECK(two.conjugate() == qlp::Exponent(2.0));

    qlp::Exponent inf = qlp::Exponent::inf();
    CHECK(inf.is_inf());
    CHECK(inf.reciprocal() == 0.0);
    CHECK(inf.conjugate() == qlp::Exponent(1.0));
    CHECK(qlp::Exponent(1.0).conjugate().is_inf());
    CHECK_THROWS_AS(inf.value(), std::logic_error);

    // Conjugate of 1.5 is 3 and vice versa.
    CHECK(qlp::Exponent(1.5).conjugate().value() == doctest::Approx(3.0).epsilon(1e-15));

    CHECK(qlp::Exponent(1.0) < two);
    CHECK(two < inf);
    CHECK(two <= two);
    CHECK(!(inf < inf));

    CHECK_THROWS_AS(qlp::Exponent(0.5), std::invalid_argument);
    CHECK_THROWS_AS(qlp::Exponent(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(qlp::Exponent(std::nan("")), std::invalid_argument);
}

TEST_CASE("kron matches hand example and mixed-product rule") {
    Matrix a(2, 2), b(2, 2);
    a << 1.0, 2.0, 3.0, 4.0;
    b << 0.0, 1.0, 1.0, 0.0;
    Matrix k = qlp::kron(a, b);
    REQUIRE(k.rows() == 4);
    REQUIRE(k.cols() == 4);
    CHECK(k(0, 1) == Complex(1.0, 0.0));
    CHECK(k(0, 0) == Complex(0.0, 0.0));
    CHECK(k(0, 3) == Complex(2.0, 0.0));
    CHECK(k(3, 2) == Complex(4.0, 0.0));

    Matrix c = qlp::random_matrix(2, 2, 7);
    Matrix d = qlp::random_matrix(2, 2, 8);
    // (a (x) b)(c (x) d) = ac (x) bd
    CHECK(frob(qlp::kron(a, b) * qlp::kron(c, d) - qlp::kron(a * c, b * d)) < 1e-12);

    Vector u = qlp::random_pure_state(3, 1);
    Vector v = qlp::random_pure_state(2, 2);
    Matrix outer = qlp::kron_vec(u, v) * qlp::kron_vec(u, v).adjoint();
    Matrix outer2 = qlp::kron(Matrix(u * u.adjoint()), Matrix(v * v.adjoint()));
    CHECK(frob(outer - outer2) < 1e-14);
}

TEST_CASE("partial trace marginals and degenerate keeps") {
    Matrix a = qlp::random_density(3, 3, 11);
    Matrix b = qlp::random_density(2, 2, 12);
    Matrix ab = qlp::kron(a, b);

    Matrix ta = qlp::partial_trace(ab, {3, 2}, {0});
    Matrix tb = qlp::partial_trace(ab, {3, 2}, {1});
    CHECK(frob(ta - a) < 1e-13);
    CHECK(frob(tb - b) < 1e-13);

    // keep == all is the identity, keep == {} is the scalar trace.
    Matrix all = qlp::partial_trace(ab, {3, 2}, {0, 1});
    CHECK(frob(all - ab) == 0.0);
    Matrix none = qlp::partial_trace(ab, {3, 2}, {});
    REQUIRE(none.rows() == 1);
    CHECK(std::abs(none(0, 0) - ab.trace()) < 1e-13);

    // Tracing factors one at a time agrees with tracing them together.
    Matrix x = qlp::random_density(12, 12, 13);
    Matrix once = qlp::partial_trace(x, {2, 3, 2}, {1});
    Matrix twice = qlp::partial_trace(qlp::partial_trace(x, {2, 3, 2}, {1, 2}), {3, 2}, {0});
    CHECK(frob(once - twice) < 1e-13);

    CHECK_THROWS_AS(qlp::partial_trace(x, {2, 3}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(qlp::partial_trace(x, {2, 3, 2}, {2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(qlp::partial_trace(x, {2, 3, 2}, {3}), std::invalid_argument);
}

TEST_CASE("swap_kron_factors exchanges tensor factors") {
    Matrix a = qlp::random_matrix(3, 3, 21);
    Matrix b = qlp::random_matrix(2, 2, 22);
    CHECK(frob(qlp::swap_kron_factors(qlp::kron(a, b), 3, 2) - qlp::kron(b, a)) < 1e-13);

    // Involutive on a non-product matrix.
    Matrix x = qlp::random_matrix(6, 6, 23);
    CHECK(frob(qlp::swap_kron_factors(qlp::swap_kron_factors(x, 3, 2), 2, 3) - x) == 0.0);
}

TEST_CASE("hermitian eigenvalues are descending and validated") {
    Matrix d = Matrix::Zero(3, 3);
    d(0, 0) = 0.25;
    d(1, 1) = -1.5;
    d(2, 2) = 2.0;
    qlp::RealVector ev = qlp::hermitian_eigenvalues(d);
    REQUIRE(ev.size() == 3);
    CHECK(ev(0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(ev(1) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(ev(2) == doctest::Approx(-1.5).epsilon(1e-14));

    Matrix bad = qlp::random_matrix(3, 3, 31);
    bad(0, 1) += Complex(1.0, 0.0);  // ensure visibly non-Hermitian
    CHECK_THROWS_AS(qlp::hermitian_eigenvalues(bad), std::invalid_argument);
}

TEST_CASE("schatten norms against direct formulas") {
    Matrix x = qlp::random_matrix(4, 4, 41);

    // p = 2 is Frobenius, p = 1 on PSD is the trace, p = inf the top singular value.
    CHECK(qlp::schatten_norm(x, 2.0) == doctest::Approx(frob(x)).epsilon(1e-13));
    Matrix rho = qlp::random_density(4, 4, 42);
    CHECK(qlp::schatten_norm(rho, 1.0) == doctest::Approx(1.0).epsilon(1e-13));
    Eigen::JacobiSVD<Matrix> svd(x);
    CHECK(qlp::schatten_norm(x, qlp::Exponent::inf()) ==
          doctest::Approx(svd.singularValues()(0)).epsilon(1e-13));

    // General p from singular values.
    double p = 3.7;
    double acc = 0.0;
    for (int i = 0; i < svd.singularValues().size(); ++i) {
        acc += std::pow(svd.singularValues()(i), p);
    }
    CHECK(qlp::schatten_norm(x, p) == doctest::Approx(std::pow(acc, 1.0 / p)).epsilon(1e-13));

    // Hermitian fast path agrees with the SVD path.
    Matrix h = x + x.adjoint();
    for (double q : {1.0, 1.5, 2.0, 4.0}) {
        CHECK(qlp::schatten_norm_hermitian(h, q) ==
              doctest::Approx(qlp::schatten_norm(h, q)).epsilon(1e-12));
    }
    CHECK(qlp::schatten_norm_hermitian(h, qlp::Exponent::inf()) ==
          doctest::Approx(qlp::schatten_norm(h, qlp::Exponent::inf())).epsilon(1e-12));
}

TEST_CASE("random generators are deterministic and well formed") {
    CHECK(frob(qlp::random_matrix(3, 2, 5) - qlp::random_matrix(3, 2, 5)) == 0.0);
    CHECK(frob(qlp::random_matrix(3, 2, 5) - qlp::random_matrix(3, 2, 6)) > 1e-3);

    Vector psi = qlp::random_pure_state(5, 9);
    CHECK(std::abs(psi.norm() - 1.0) < 1e-14);

    Matrix rho = qlp::random_density(4, 2, 10);
    CHECK(std::abs(rho.trace().real() - 1.0) < 1e-13);
    CHECK(std::abs(rho.trace().imag()) < 1e-15);
    qlp::RealVector ev = qlp::hermitian_eigenvalues(rho);
    CHECK(ev(ev.size() - 1) > -1e-14);
    // rank 2 of 4: two eigenvalues are numerically zero.
    CHECK(std::abs(ev(2)) < 1e-13);
    CHECK(std::abs(ev(3)) < 1e-13);

    Matrix u = qlp::haar_unitary(4, 11);
    CHECK(frob(u.adjoint() * u - Matrix::Identity(4, 4)) < 1e-13);

    CHECK_THROWS_AS(qlp::random_density(4, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(qlp::random_density(4, 5, 1), std::invalid_argument);
}
