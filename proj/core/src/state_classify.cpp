#include "qgames/state_classify.hpp"

#include <cmath>
#include <random>

namespace qgames {

DiagonalMixture diagonal_mixture(const CMatrix& rho) {
    if (!is_density_matrix(rho, tolerance())) {
        throw NotDensityMatrix("diagonal_mixture: input is not a density matrix");
    }
    DiagonalMixture mix;
    mix.weights.reserve(rho.rows());
    for (std::size_t k = 0; k < rho.rows(); ++k) {
        mix.weights.push_back(std::max(0.0, rho.at(k, k).real()));
    }
    return mix;
}

CVector equivalent_pure_state(const CMatrix& rho) {
    const DiagonalMixture mix = diagonal_mixture(rho);
    std::vector<Complex> amps;
    amps.reserve(mix.weights.size());
    for (double w : mix.weights) amps.emplace_back(std::sqrt(w), 0.0);
    return CVector(std::move(amps));
}

bool is_separable_pure(const CVector& psi, std::size_t n, std::size_t m) {
    if (psi.dim() != n * m) {
        throw DimensionMismatch("is_separable_pure: dim must equal n*m");
    }
    if (!psi.is_normalized()) throw NotNormalized("is_separable_pure: psi not normalized");
    // Rank-1 test: every 2x2 minor of the amplitude matrix vanishes.
    for (std::size_t r1 = 0; r1 < n; ++r1)
        for (std::size_t r2 = r1 + 1; r2 < n; ++r2)
            for (std::size_t c1 = 0; c1 < m; ++c1)
                for (std::size_t c2 = c1 + 1; c2 < m; ++c2) {
                    const Complex det = psi[r1 * m + c1] * psi[r2 * m + c2] -
                                        psi[r1 * m + c2] * psi[r2 * m + c1];
                    if (std::abs(det) > tolerance()) return false;
                }
    return true;
}

namespace {
MixedStrategy random_strategy(std::size_t size, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> w(size);
    double sum = 0.0;
    for (double& x : w) {
        x = -std::log(1.0 - unit(rng));  // exponential draws give a Dirichlet(1) point
        sum += x;
    }
    for (double& x : w) x /= sum;
    return MixedStrategy(std::move(w));
}
}  // namespace

Classification classify_emw(const EmwConfig& cfg, std::uint64_t seed,
                            std::size_t random_profiles) {
    if (cfg.n_joint() != 1 || cfg.input_game.n_rows() != 2 || cfg.input_game.n_cols() != 2) {
        throw InvalidArgument("classify_emw: requires a 2x2 game with one joint state");
    }
    // The three fixed mixed profiles, together with normalization, force the
    // diagonal mixture of the joint state onto |00>; random profiles guard the
    // implementation beyond that.
    std::vector<std::pair<MixedStrategy, MixedStrategy>> profiles;
    profiles.emplace_back(MixedStrategy({0.5, 0.0, 0.0, 0.5}),
                          MixedStrategy({0.5, 0.0, 0.5, 0.0}));
    profiles.emplace_back(MixedStrategy({0.5, 0.0, 0.5, 0.0}),
                          MixedStrategy({0.5, 0.0, 0.0, 0.5}));
    profiles.emplace_back(MixedStrategy({0.5, 0.0, 0.5, 0.0}),
                          MixedStrategy({0.5, 0.0, 0.5, 0.0}));
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < random_profiles; ++i) {
        profiles.emplace_back(random_strategy(4, rng), random_strategy(4, rng));
    }

    Classification result;
    for (const auto& [t1, t2] : profiles) {
        ++result.profiles_tested;
        const CMatrix rho = emw_final_state(cfg, t1, t2);
        const CVector psi = equivalent_pure_state(rho);
        if (!is_separable_pure(psi, 2, 2)) {
            result.kind = GameClass::NonClassical;
            result.witness = {t1, t2};
            return result;
        }
    }
    result.kind = GameClass::Classical;
    return result;
}

}  // namespace qgames
