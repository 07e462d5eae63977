#pragma once

#include <string>
#include <vector>

#include "qgames/complex_linalg.hpp"
#include "qgames/game_model.hpp"

namespace qgames {

/// Basis-diagonal measurement assigning a payoff pair to each product basis
/// state |ij> (row-major: index = i*m + j).
struct PayoffOperator {
    std::vector<PayoffPair> entries;

    std::size_t dim() const { return entries.size(); }
    std::vector<double> diag1() const;
    std::vector<double> diag2() const;
};

/// A unitary local action with a display label.
struct LocalOperator {
    CMatrix matrix;
    std::string label;

    LocalOperator(CMatrix m, std::string l);
};

PayoffOperator payoff_operator_from(const BimatrixGame& g);

/// Cyclic shift |i> -> |i + k mod dim>. k = 0 is the identity; (k=1, dim=2)
/// is the bit flip sigma_x.
LocalOperator shift_operator(std::size_t k, std::size_t dim);

/// The canonical family {shift_operator(0..dim-1)}; labelled I, X for dim 2.
std::vector<LocalOperator> shift_family(std::size_t dim);

/// Mixture of conjugated initial states: each player picks ops[k] with the
/// given probability and applies it to their subsystem.
CMatrix mw_final_state(const CVector& psi_in, const MixedStrategy& p, const MixedStrategy& q,
                       const std::vector<LocalOperator>& ops1,
                       const std::vector<LocalOperator>& ops2);

/// Payoff under the canonical shift-operator families.
PayoffPair mw_payoff(const BimatrixGame& g, const CVector& psi_in, const MixedStrategy& p,
                     const MixedStrategy& q);

/// The induced game on operator choices: entry (k,l) is the payoff at the
/// pure profile (shift k, shift l).
BimatrixGame mw_output_game(const BimatrixGame& g, const CVector& psi_in);

}  // namespace qgames
