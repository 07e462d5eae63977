#pragma once

#include <utility>

#include "qgames/complex_linalg.hpp"
#include "qgames/game_model.hpp"
#include "qgames/mw_scheme.hpp"

namespace qgames {

struct UnitaryParams {
    double theta = 0.0;  // [0, pi]
    double phi = 0.0;    // [0, 2*pi]

    UnitaryParams() = default;
    UnitaryParams(double theta_, double phi_);
};

struct RefinedStrategy {
    double p = 1.0;  // probability of playing U over its companion V
    UnitaryParams params;

    RefinedStrategy(double p_, UnitaryParams params_);
};

/// Parameters of a single-qubit state cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
struct SeparableQubitParams {
    double theta = 0.0;
    double phi = 0.0;
};

/// [[cos(t/2), e^{-i phi} sin(t/2)], [e^{i phi} sin(t/2), -cos(t/2)]].
/// Unitary and Hermitian; maps the matching qubit state to |0> up to phase.
LocalOperator two_param_unitary(const UnitaryParams& params);

/// V = U(pi - theta, phi - pi); maps the matching qubit state to |1> up to phase.
LocalOperator companion_operator(const UnitaryParams& params);

/// Four-term mixture pq U1xU2 + p(1-q) U1xV2 + (1-p)q V1xU2 + (1-p)(1-q) V1xV2
/// conjugating |psi_in><psi_in|.
CMatrix refined_final_state(const CVector& psi_in, const RefinedStrategy& s1,
                            const RefinedStrategy& s2);

/// For a separable two-qubit pure state, the per-qubit (theta, phi) such that
/// refined_final_state with those parameters and p = q = 1 yields |00><00|.
/// Throws NotSeparable for entangled inputs.
std::pair<SeparableQubitParams, SeparableQubitParams> classical_recovery_params(
    const CVector& psi_in);

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1> for the given parameters.
CVector qubit_state(const SeparableQubitParams& params);

}  // namespace qgames
