#pragma once

#include <cstddef>
#include <vector>

#include "qgames/game_model.hpp"

namespace qgames {

enum class EquilibriumKind { Pure, Mixed };

struct Equilibrium {
    MixedStrategy s1;
    MixedStrategy s2;
    PayoffPair payoff;
    EquilibriumKind kind = EquilibriumKind::Pure;
};

/// Deviation-check tolerance. Looser than the linear-algebra tolerance to
/// absorb accumulated solve error.
inline constexpr double kDeviationTol = 1e-7;

/// Argmax set of the player's expected payoff against the opponent strategy;
/// ties within kDeviationTol are all included.
std::vector<std::size_t> best_responses(const BimatrixGame& g, int player,
                                        const MixedStrategy& opponent);

/// All pure profiles where each strategy is a best response to the other,
/// in row-major order.
std::vector<Equilibrium> pure_nash(const BimatrixGame& g);

struct SupportEnumerationResult {
    std::vector<Equilibrium> equilibria;
    /// Supports whose indifference system was singular and was skipped.
    std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> degenerate_supports;
};

/// Equal-size support enumeration for games up to 8x8. Solves each support
/// pair's indifference system, keeps fully mixed nonnegative solutions with
/// no profitable outside deviation, and deduplicates. Sorted by support size
/// then lexicographic support indices.
SupportEnumerationResult support_enumeration(const BimatrixGame& g, std::size_t max_support);

/// Independent check: no unilateral pure deviation improves either payoff by
/// more than tol.
bool verify_equilibrium(const BimatrixGame& g, const MixedStrategy& s1, const MixedStrategy& s2,
                        double tol = kDeviationTol);

}  // namespace qgames
