#pragma once

#include <vector>

#include "qgames/complex_linalg.hpp"
#include "qgames/game_model.hpp"
#include "qgames/mw_scheme.hpp"

namespace qgames {

/// Configuration of the extended scheme: the input game, the available joint
/// quantum states psi_1..psi_n, and each player's local operator family.
struct EmwConfig {
    BimatrixGame input_game;
    std::vector<CVector> joint_states;
    std::vector<LocalOperator> local_ops1;
    std::vector<LocalOperator> local_ops2;

    /// Canonical config: shift-operator families sized to the game.
    EmwConfig(BimatrixGame game, std::vector<CVector> states);
    EmwConfig(BimatrixGame game, std::vector<CVector> states,
              std::vector<LocalOperator> ops1, std::vector<LocalOperator> ops2);

    std::size_t n_joint() const { return joint_states.size(); }
    /// Pure-strategy count per player: (n_joint + 1) * |ops|.
    std::size_t strategy_count(int player) const;
    /// Label for strategy index k of the given player: C*I, C*X, Q1*I, ...
    std::string strategy_label(int player, std::size_t k) const;
};

/// A mixed strategy over {C, Q_1..Q_n} x local operators, mode-major:
/// (C,op0), (C,op1), ..., (Q1,op0), (Q1,op1), ...
using EmwStrategy = MixedStrategy;

/// The extended final state: sum over mode pairs (i,j) of the local-operator
/// mixtures applied to |psi_i> when i = j != 0 and to |0...0> otherwise.
CMatrix emw_final_state(const EmwConfig& cfg, const EmwStrategy& t1, const EmwStrategy& t2);

PayoffPair emw_payoff(const EmwConfig& cfg, const EmwStrategy& t1, const EmwStrategy& t2);

/// The full pure-profile payoff table over both players' extended strategy
/// sets. C rows/columns replicate the classical game; the (Q_i, Q_i) diagonal
/// blocks are the induced games on the respective joint states.
BimatrixGame emw_bimatrix(const EmwConfig& cfg);

}  // namespace qgames
