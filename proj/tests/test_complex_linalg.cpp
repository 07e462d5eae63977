#include <doctest.h>

#include <cmath>
#include <limits>

#include "qgames/complex_linalg.hpp"
#include "test_util.hpp"

using namespace qgames;
using namespace qgames::testutil;

TEST_CASE("tensor of identities is the identity") {
    CHECK(approx_equal(tensor(CMatrix::identity(2), CMatrix::identity(2)),
                       CMatrix::identity(4), 0.0));
}

TEST_CASE("tensor of bit flips maps |00> to |11>") {
    const CVector out = tensor(sigma_x(), sigma_x()) * ket(4, 0);
    CHECK(same_state(out, ket(4, 3), 1e-12));
}

TEST_CASE("I x sigma_x flips the second qubit of a Bell state") {
    const CVector bell = superpose(4, 0, 3);
    const CVector out = tensor(CMatrix::identity(2), sigma_x()) * bell;
    CHECK(same_state(out, superpose(4, 1, 2), 1e-12));
}

TEST_CASE("outer products") {
    SUBCASE("basis state") {
        const CMatrix m = outer(ket(2, 0));
        CHECK(m.at(0, 0) == Complex(1, 0));
        CHECK(m.at(1, 1) == Complex(0, 0));
        CHECK(m.at(0, 1) == Complex(0, 0));
    }
    SUBCASE("uniform superposition has all entries 1/2") {
        const CMatrix m = outer(superpose(2, 0, 1));
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c)
                CHECK(std::abs(m.at(r, c) - Complex(0.5, 0)) < 1e-12);
    }
    SUBCASE("two-qubit superposition fills the top-left block") {
        const CMatrix m = outer(superpose(4, 0, 1));
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) {
                const double want = (r < 2 && c < 2) ? 0.5 : 0.0;
                CHECK(std::abs(m.at(r, c) - Complex(want, 0)) < 1e-12);
            }
    }
}

TEST_CASE("conjugate_by") {
    const CMatrix rho = outer(superpose(4, 0, 3));
    SUBCASE("identity is a no-op") {
        CHECK(approx_equal(conjugate_by(CMatrix::identity(4), rho), rho, 1e-12));
    }
    SUBCASE("double bit flip moves |00><00| to |11><11|") {
        const CMatrix out = conjugate_by(tensor(sigma_x(), sigma_x()), outer(ket(4, 0)));
        CHECK(approx_equal(out, outer(ket(4, 3)), 1e-12));
    }
    SUBCASE("flipping a superposed qubit leaves the state unchanged") {
        const CMatrix in = outer(superpose(4, 0, 1));
        const CMatrix out = conjugate_by(tensor(CMatrix::identity(2), sigma_x()), in);
        CHECK(approx_equal(out, in, 1e-12));
    }
    SUBCASE("non-unitary operator is rejected") {
        CMatrix bad(4, 4);
        bad.at(0, 0) = Complex(2, 0);
        CHECK_THROWS_AS(conjugate_by(bad, rho), NotUnitary);
    }
    SUBCASE("dimension mismatch is rejected") {
        CHECK_THROWS_AS(conjugate_by(CMatrix::identity(2), rho), DimensionMismatch);
    }
}

TEST_CASE("trace_product") {
    CHECK(trace_product({1, 0, 0, 0}, outer(ket(4, 0))) == doctest::Approx(1.0));

    // 1/2 |00><00| + 1/2 |01><01| against diag(5,1,1,3).
    const CMatrix rho = outer(ket(4, 0)).scaled(0.5) + outer(ket(4, 1)).scaled(0.5);
    CHECK(trace_product({5, 1, 1, 3}, rho) == doctest::Approx(3.0));

    SUBCASE("all-ones diagonal recovers the trace of a random density matrix") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 10; ++trial) {
            const CMatrix d = random_density(4, rng);
            CHECK(trace_product({1, 1, 1, 1}, d) == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("length mismatch is rejected") {
        CHECK_THROWS_AS(trace_product({1, 2}, outer(ket(4, 0))), DimensionMismatch);
    }
}

TEST_CASE("tensor is associative on integer matrices") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coin(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        CMatrix a(2, 2), b(2, 3), c(3, 2);
        auto fill = [&](CMatrix& m) {
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t col = 0; col < m.cols(); ++col)
                    m.at(r, col) = Complex(coin(rng), coin(rng));
        };
        fill(a);
        fill(b);
        fill(c);
        CHECK(max_abs_diff(tensor(tensor(a, b), c), tensor(a, tensor(b, c))) == 0.0);
    }
}

TEST_CASE("conjugation by random shift-style unitaries preserves trace and Hermiticity") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const CMatrix rho = random_density(4, rng);
        // Random diagonal-phase unitary.
        CMatrix u(4, 4);
        std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
        for (std::size_t i = 0; i < 4; ++i) {
            const double a = angle(rng);
            u.at(i, i) = Complex(std::cos(a), std::sin(a));
        }
        const CMatrix out = conjugate_by(u, rho);
        CHECK(std::abs(out.trace() - rho.trace()) < 1e-12);
        CHECK(out.is_hermitian(1e-12));
    }
}

TEST_CASE("outer trace equals the squared norm") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const CVector v = random_state(5, rng);
        CHECK(std::abs(outer(v).trace().real() - v.norm() * v.norm()) < 1e-12);
    }
}

TEST_CASE("non-finite entries are rejected at construction") {
    CHECK_THROWS(CVector({Complex(std::numeric_limits<double>::quiet_NaN(), 0)}));
    CHECK_THROWS(CMatrix(1, 1, {Complex(std::numeric_limits<double>::infinity(), 0)}));
}

TEST_CASE("density-matrix check accepts random densities and rejects non-PSD") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        CHECK(is_density_matrix(random_density(4, rng), 1e-9));
    }
    CMatrix not_psd(2, 2);
    not_psd.at(0, 0) = Complex(1.5, 0);
    not_psd.at(1, 1) = Complex(-0.5, 0);
    CHECK_FALSE(is_density_matrix(not_psd, 1e-9));
    CMatrix indefinite(2, 2);
    indefinite.at(0, 0) = Complex(0.5, 0);
    indefinite.at(1, 1) = Complex(0.5, 0);
    indefinite.at(0, 1) = Complex(0.9, 0);
    indefinite.at(1, 0) = Complex(0.9, 0);
    CHECK_FALSE(is_density_matrix(indefinite, 1e-9));
}
