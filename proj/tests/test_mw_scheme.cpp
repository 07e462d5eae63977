#include <doctest.h>

#include <cmath>

#include "qgames/mw_scheme.hpp"
#include "test_util.hpp"

using namespace qgames;
using namespace qgames::testutil;

TEST_CASE("payoff_operator_from orders entries row-major") {
    SUBCASE("2x2") {
        const PayoffOperator x = payoff_operator_from(bos());
        REQUIRE(x.dim() == 4);
        CHECK(x.entries[0].p1 == 5);
        CHECK(x.entries[1].p1 == 1);
        CHECK(x.entries[3].p2 == 5);
    }
    SUBCASE("1x1") {
        const PayoffOperator x = payoff_operator_from(BimatrixGame({{{7, 9}}}));
        REQUIRE(x.dim() == 1);
        CHECK(x.entries[0].p1 == 7);
        CHECK(x.entries[0].p2 == 9);
    }
    SUBCASE("2x3") {
        std::mt19937_64 rng(1);
        const BimatrixGame g = random_game(2, 3, rng);
        const PayoffOperator x = payoff_operator_from(g);
        REQUIRE(x.dim() == 6);
        CHECK(x.entries[1 * 3 + 2].p1 == g.at(1, 2).p1);
    }
}

TEST_CASE("shift_operator") {
    CHECK(approx_equal(shift_operator(0, 5).matrix, CMatrix::identity(5), 0.0));
    CHECK(approx_equal(shift_operator(1, 2).matrix, sigma_x(), 0.0));
    // (2 + 2) mod 3 = 1
    CHECK(same_state(shift_operator(2, 3).matrix * ket(3, 2), ket(3, 1), 1e-12));
    CHECK_THROWS_AS(shift_operator(3, 3), IndexOutOfRange);
}

TEST_CASE("mw_final_state") {
    const auto ops = shift_family(2);
    SUBCASE("identity profile keeps |00>") {
        const CMatrix rho = mw_final_state(ket(4, 0), MixedStrategy::pure(2, 0),
                                           MixedStrategy::pure(2, 0), ops, ops);
        CHECK(approx_equal(rho, outer(ket(4, 0)), 1e-12));
    }
    SUBCASE("double bit flip yields |11>") {
        const CMatrix rho = mw_final_state(ket(4, 0), MixedStrategy::pure(2, 1),
                                           MixedStrategy::pure(2, 1), ops, ops);
        CHECK(approx_equal(rho, outer(ket(4, 3)), 1e-12));
    }
    SUBCASE("a superposed second qubit makes player 2 powerless") {
        const CVector psi = superpose(4, 0, 1);
        const CMatrix base = mw_final_state(psi, MixedStrategy::pure(2, 0),
                                            MixedStrategy::pure(2, 0), ops, ops);
        std::mt19937_64 rng(6);
        for (int trial = 0; trial < 10; ++trial) {
            const CMatrix other = mw_final_state(psi, MixedStrategy::pure(2, 0),
                                                 random_mixed(2, rng), ops, ops);
            CHECK(max_abs_diff(base, other) < 1e-12);
        }
    }
    SUBCASE("unnormalized input is rejected, not renormalized") {
        const CVector bad({Complex(1, 0), Complex(1, 0), Complex(0, 0), Complex(0, 0)});
        CHECK_THROWS_AS(mw_final_state(bad, MixedStrategy::pure(2, 0),
                                       MixedStrategy::pure(2, 0), ops, ops),
                        NotNormalized);
    }
}

TEST_CASE("mw_payoff on the worked 2x2 example") {
    const BimatrixGame g = bos();
    const CVector psi = superpose(4, 0, 1);
    SUBCASE("identity row") {
        const PayoffPair p =
            mw_payoff(g, psi, MixedStrategy::pure(2, 0), MixedStrategy::pure(2, 0));
        CHECK(p.p1 == doctest::Approx(3));
        CHECK(p.p2 == doctest::Approx(2));
    }
    SUBCASE("flip row, any column") {
        std::mt19937_64 rng(8);
        for (int trial = 0; trial < 5; ++trial) {
            const PayoffPair p =
                mw_payoff(g, psi, MixedStrategy::pure(2, 1), random_mixed(2, rng));
            CHECK(p.p1 == doctest::Approx(2));
            CHECK(p.p2 == doctest::Approx(3));
        }
    }
    SUBCASE("basis initial state reproduces the input entry") {
        std::mt19937_64 rng(9);
        const BimatrixGame r = random_game(2, 2, rng);
        const PayoffPair p =
            mw_payoff(r, ket(4, 0), MixedStrategy::pure(2, 0), MixedStrategy::pure(2, 0));
        CHECK(p.p1 == doctest::Approx(r.at(0, 0).p1));
        CHECK(p.p2 == doctest::Approx(r.at(0, 0).p2));
    }
}

TEST_CASE("mw_output_game") {
    SUBCASE("the worked example's full table") {
        const BimatrixGame out = mw_output_game(bos(), superpose(4, 0, 1));
        const BimatrixGame want({{{3, 2}, {3, 2}}, {{2, 3}, {2, 3}}});
        CHECK(out.same_payoffs(want, 1e-9));
    }
    SUBCASE("|00> reproduces the input game") {
        std::mt19937_64 rng(10);
        const BimatrixGame g = random_game(2, 2, rng);
        CHECK(mw_output_game(g, ket(4, 0)).same_payoffs(g, 1e-9));
    }
    SUBCASE("Bell state on Battle of the Sexes") {
        const BimatrixGame out = mw_output_game(bos(), superpose(4, 0, 3));
        const BimatrixGame want({{{4, 4}, {1, 1}}, {{1, 1}, {4, 4}}});
        CHECK(out.same_payoffs(want, 1e-9));
    }
}

TEST_CASE("mw_final_state is always a density matrix") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const CMatrix rho = mw_final_state(random_state(4, rng), random_mixed(2, rng),
                                           random_mixed(2, rng), shift_family(2),
                                           shift_family(2));
        CHECK(is_density_matrix(rho, 1e-9));
    }
}

TEST_CASE("output-game entries are convex combinations of input entries") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const BimatrixGame g = random_game(2, 2, rng);
        double lo = 1e300, hi = -1e300;
        for (const auto& row : g.payoffs())
            for (const PayoffPair& p : row) {
                lo = std::min({lo, p.p1, p.p2});
                hi = std::max({hi, p.p1, p.p2});
            }
        const BimatrixGame out = mw_output_game(g, random_state(4, rng));
        for (const auto& row : out.payoffs())
            for (const PayoffPair& p : row) {
                CHECK(p.p1 >= lo - 1e-9);
                CHECK(p.p1 <= hi + 1e-9);
                CHECK(p.p2 >= lo - 1e-9);
                CHECK(p.p2 <= hi + 1e-9);
            }
    }
}

TEST_CASE("mixed mw_payoff is bilinear in the output game") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 20; ++trial) {
        const BimatrixGame g = random_game(2, 2, rng);
        const CVector psi = random_state(4, rng);
        const BimatrixGame out = mw_output_game(g, psi);
        const MixedStrategy p = random_mixed(2, rng), q = random_mixed(2, rng);
        const PayoffPair direct = mw_payoff(g, psi, p, q);
        const PayoffPair via_game = expected_payoff(out, p, q);
        CHECK(direct.p1 == doctest::Approx(via_game.p1).epsilon(1e-9));
        CHECK(direct.p2 == doctest::Approx(via_game.p2).epsilon(1e-9));
    }
}

TEST_CASE("basis initial states cyclically shift the input game") {
    std::mt19937_64 rng(15);
    for (std::size_t n = 2; n <= 3; ++n) {
        for (std::size_t m = 2; m <= 3; ++m) {
            const BimatrixGame g = random_game(n, m, rng);
            for (std::size_t i0 = 0; i0 < n; ++i0) {
                for (std::size_t j0 = 0; j0 < m; ++j0) {
                    const BimatrixGame out = mw_output_game(g, ket(n * m, i0 * m + j0));
                    for (std::size_t k = 0; k < n; ++k)
                        for (std::size_t l = 0; l < m; ++l) {
                            const PayoffPair& want = g.at((i0 + k) % n, (j0 + l) % m);
                            CHECK(out.at(k, l).p1 == doctest::Approx(want.p1));
                            CHECK(out.at(k, l).p2 == doctest::Approx(want.p2));
                        }
                }
            }
        }
    }
}

// Cross-validation of the pure-profile path against the closed-form 2x2
// coefficients: alpha_kl = sum_ij |lambda_{(i+k) mod 2, (j+l) mod 2}|^2 a_ij.
TEST_CASE("2x2 output coefficients match the amplitude-square formula") {
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 20; ++trial) {
        const BimatrixGame g = random_game(2, 2, rng);
        const CVector psi = random_state(4, rng);
        const BimatrixGame out = mw_output_game(g, psi);
        for (std::size_t k = 0; k < 2; ++k)
            for (std::size_t l = 0; l < 2; ++l) {
                double a = 0, b = 0;
                for (std::size_t i = 0; i < 2; ++i)
                    for (std::size_t j = 0; j < 2; ++j) {
                        const double w = std::norm(psi[((i + k) % 2) * 2 + ((j + l) % 2)]);
                        a += w * g.at(i, j).p1;
                        b += w * g.at(i, j).p2;
                    }
                CHECK(out.at(k, l).p1 == doctest::Approx(a).epsilon(1e-9));
                CHECK(out.at(k, l).p2 == doctest::Approx(b).epsilon(1e-9));
            }
    }
}
