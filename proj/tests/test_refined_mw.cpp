#include <doctest.h>

#include <cmath>

#include "qgames/refined_mw.hpp"
#include "test_util.hpp"

using namespace qgames;
using namespace qgames::testutil;

TEST_CASE("two_param_unitary at the corners") {
    SUBCASE("theta = 0 gives diag(1, -1)") {
        const CMatrix u = two_param_unitary({0, 0}).matrix;
        CHECK(std::abs(u.at(0, 0) - Complex(1, 0)) < 1e-12);
        CHECK(std::abs(u.at(1, 1) - Complex(-1, 0)) < 1e-12);
        CHECK(std::abs(u.at(0, 1)) < 1e-12);
    }
    SUBCASE("theta = pi gives the bit flip") {
        CHECK(approx_equal(two_param_unitary({kPi, 0}).matrix, sigma_x(), 1e-12));
    }
    SUBCASE("theta = pi/2 gives the balanced operator") {
        const CMatrix u = two_param_unitary({kPi / 2, 0}).matrix;
        CHECK(std::abs(u.at(0, 0) - Complex(kInvSqrt2, 0)) < 1e-12);
        CHECK(std::abs(u.at(0, 1) - Complex(kInvSqrt2, 0)) < 1e-12);
        CHECK(std::abs(u.at(1, 0) - Complex(kInvSqrt2, 0)) < 1e-12);
        CHECK(std::abs(u.at(1, 1) - Complex(-kInvSqrt2, 0)) < 1e-12);
    }
    SUBCASE("out-of-range parameters are rejected") {
        CHECK_THROWS_AS(two_param_unitary(UnitaryParams(4.0, 0.0)), ParamOutOfRange);
        CHECK_THROWS_AS(two_param_unitary(UnitaryParams(1.0, -1.0)), ParamOutOfRange);
    }
}

TEST_CASE("companion_operator substitutions") {
    CHECK(approx_equal(companion_operator({kPi, kPi}).matrix,
                       two_param_unitary({0, 0}).matrix, 1e-12));
    CHECK(approx_equal(companion_operator({0, kPi}).matrix, sigma_x(), 1e-12));
}

TEST_CASE("the unitary family is unitary and Hermitian across the parameter range") {
    for (int it = 0; it <= 8; ++it) {
        for (int ip = 0; ip < 8; ++ip) {
            const UnitaryParams params{kPi * it / 8.0, 2.0 * kPi * ip / 8.0};
            const CMatrix u = two_param_unitary(params).matrix;
            CHECK(u.is_unitary(1e-12));
            CHECK(u.is_hermitian(1e-12));
        }
    }
}

TEST_CASE("the matching operator sends the qubit to |0>, its companion to |1>") {
    for (int it = 0; it <= 8; ++it) {
        for (int ip = 0; ip < 8; ++ip) {
            const SeparableQubitParams qp{kPi * it / 8.0, 2.0 * kPi * ip / 8.0};
            const CVector q = qubit_state(qp);
            const CVector u_out = two_param_unitary({qp.theta, qp.phi}).matrix * q;
            const CVector v_out = companion_operator({qp.theta, qp.phi}).matrix * q;
            CHECK(std::abs(u_out[1]) < 1e-12);
            CHECK(std::abs(v_out[0]) < 1e-12);
        }
    }
}

TEST_CASE("refined_final_state") {
    SUBCASE("matched separable parameters give the product-form diagonal") {
        const SeparableQubitParams a{kPi / 3, kPi / 5}, b{2 * kPi / 3, kPi / 2};
        const CVector psi = tensor(qubit_state(a), qubit_state(b));
        const double p = 0.7, q = 0.25;
        const CMatrix rho = refined_final_state(psi, {p, {a.theta, a.phi}},
                                                {q, {b.theta, b.phi}});
        const double want[] = {p * q, p * (1 - q), (1 - p) * q, (1 - p) * (1 - q)};
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) {
                const double expect = (r == c) ? want[r] : 0.0;
                CHECK(std::abs(rho.at(r, c) - Complex(expect, 0)) < 1e-9);
            }
    }
    SUBCASE("|00> with theta = 0 stays put") {
        const CMatrix rho = refined_final_state(ket(4, 0), {1, {0, 0}}, {1, {0, 0}});
        CHECK(approx_equal(rho, outer(ket(4, 0)), 1e-12));
    }
    SUBCASE("the balanced operator counters a superposed second qubit") {
        const CMatrix rho = refined_final_state(superpose(4, 0, 1), {1, {0, 0}},
                                                {1, {kPi / 2, 0}});
        CHECK(approx_equal(rho, outer(ket(4, 0)), 1e-12));
    }
    SUBCASE("entangled input is fine, unnormalized is not") {
        CHECK_NOTHROW(refined_final_state(superpose(4, 0, 3), {1, {0, 0}}, {1, {0, 0}}));
        const CVector bad({Complex(1, 0), Complex(1, 0), Complex(0, 0), Complex(0, 0)});
        CHECK_THROWS_AS(refined_final_state(bad, {1, {0, 0}}, {1, {0, 0}}), NotNormalized);
    }
}

TEST_CASE("classical_recovery_params") {
    SUBCASE("|00>") {
        const auto [a, b] = classical_recovery_params(ket(4, 0));
        CHECK(a.theta == doctest::Approx(0));
        CHECK(b.theta == doctest::Approx(0));
        CHECK(a.phi == 0);
        CHECK(b.phi == 0);
    }
    SUBCASE("balanced first qubit") {
        const CVector psi = tensor(superpose(2, 0, 1), ket(2, 0));
        const auto [a, b] = classical_recovery_params(psi);
        CHECK(a.theta == doctest::Approx(kPi / 2));
        CHECK(a.phi == doctest::Approx(0));
        CHECK(b.theta == doctest::Approx(0));
    }
    SUBCASE("imaginary relative phase") {
        const CVector q2({Complex(kInvSqrt2, 0), Complex(0, kInvSqrt2)});
        const auto [a, b] = classical_recovery_params(tensor(ket(2, 0), q2));
        CHECK(a.theta == doctest::Approx(0));
        CHECK(b.theta == doctest::Approx(kPi / 2));
        CHECK(b.phi == doctest::Approx(kPi / 2));
    }
    SUBCASE("entangled states are rejected") {
        CHECK_THROWS_AS(classical_recovery_params(superpose(4, 0, 3)), NotSeparable);
    }
}

TEST_CASE("recovered parameters reconstruct the classical diagonal on a grid") {
    const double ps[] = {0.0, 1.0 / 3.0, 1.0};
    for (int it1 = 0; it1 <= 4; ++it1) {
        for (int ip1 = 0; ip1 < 4; ++ip1) {
            for (int it2 = 0; it2 <= 4; ++it2) {
                const SeparableQubitParams a{kPi * it1 / 4.0, 2.0 * kPi * ip1 / 4.0};
                const SeparableQubitParams b{kPi * it2 / 4.0, kPi / 3.0};
                const CVector psi = tensor(qubit_state(a), qubit_state(b));
                const auto [ra, rb] = classical_recovery_params(psi);
                for (double p : ps) {
                    for (double q : ps) {
                        const CMatrix rho = refined_final_state(
                            psi, {p, {ra.theta, ra.phi}}, {q, {rb.theta, rb.phi}});
                        const double want[] = {p * q, p * (1 - q), (1 - p) * q,
                                               (1 - p) * (1 - q)};
                        for (std::size_t r = 0; r < 4; ++r)
                            for (std::size_t c = 0; c < 4; ++c) {
                                const double expect = (r == c) ? want[r] : 0.0;
                                CHECK(std::abs(rho.at(r, c) - Complex(expect, 0)) < 1e-9);
                            }
                    }
                }
            }
        }
    }
}

TEST_CASE("refined final states are density matrices") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const CMatrix rho = refined_final_state(
            random_state(4, rng), {unit(rng), {unit(rng) * kPi, unit(rng) * 2 * kPi}},
            {unit(rng), {unit(rng) * kPi, unit(rng) * 2 * kPi}});
        CHECK(is_density_matrix(rho, 1e-9));
    }
}
