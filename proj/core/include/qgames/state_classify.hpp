#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qgames/complex_linalg.hpp"
#include "qgames/emw_scheme.hpp"

namespace qgames {

/// Weights of a classical mixture of product basis states.
struct DiagonalMixture {
    std::vector<double> weights;
};

/// The diagonal of a density matrix as a classical mixture. Payoff-equivalent
/// to rho under every basis-diagonal measurement.
DiagonalMixture diagonal_mixture(const CMatrix& rho);

/// The pure state with amplitudes sqrt(diagonal of rho); satisfies
/// tr(X rho) = tr(X |psi><psi|) for every basis-diagonal X.
CVector equivalent_pure_state(const CMatrix& rho);

/// True iff the n x m amplitude matrix of psi has rank 1 (for 2x2 qubit
/// pairs: |l00*l11 - l01*l10| below tolerance).
bool is_separable_pure(const CVector& psi, std::size_t n, std::size_t m);

enum class GameClass { Classical, NonClassical };

struct Classification {
    GameClass kind = GameClass::Classical;
    /// A strategy pair whose final state has no separable pure equivalent;
    /// present iff kind == NonClassical.
    std::optional<std::pair<MixedStrategy, MixedStrategy>> witness;
    std::size_t profiles_tested = 0;
};

/// Tests whether the extended scheme's output coincides with a classical game:
/// for a set of strategy profiles (three fixed mixed profiles that pin down
/// the diagonal, plus seeded random ones) the final state must be payoff
/// equivalent to a separable pure state. Requires a 2x2 game with a single
/// joint state.
Classification classify_emw(const EmwConfig& cfg, std::uint64_t seed = 20240817,
                            std::size_t random_profiles = 64);

}  // namespace qgames
