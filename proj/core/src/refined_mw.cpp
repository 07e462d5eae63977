#include "qgames/refined_mw.hpp"

#include <cmath>

#include "qgames/state_classify.hpp"

namespace qgames {

namespace {
constexpr double kPi = 3.14159265358979323846;

double wrap_phase(double phi) {
    const double two_pi = 2.0 * kPi;
    double out = std::fmod(phi, two_pi);
    if (out < 0.0) out += two_pi;
    return out;
}
}  // namespace

UnitaryParams::UnitaryParams(double theta_, double phi_) : theta(theta_), phi(phi_) {
    if (!(theta >= 0.0 && theta <= kPi)) {
        throw ParamOutOfRange("UnitaryParams: theta must lie in [0, pi]");
    }
    if (!(phi >= 0.0 && phi <= 2.0 * kPi)) {
        throw ParamOutOfRange("UnitaryParams: phi must lie in [0, 2*pi]");
    }
}

RefinedStrategy::RefinedStrategy(double p_, UnitaryParams params_) : p(p_), params(params_) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ParamOutOfRange("RefinedStrategy: p must lie in [0, 1]");
    }
}

LocalOperator two_param_unitary(const UnitaryParams& params) {
    const double c = std::cos(params.theta / 2.0);
    const double s = std::sin(params.theta / 2.0);
    const Complex phase(std::cos(params.phi), std::sin(params.phi));
    CMatrix u(2, 2);
    u.at(0, 0) = Complex(c, 0.0);
    u.at(0, 1) = std::conj(phase) * s;
    u.at(1, 0) = phase * s;
    u.at(1, 1) = Complex(-c, 0.0);
    return LocalOperator(std::move(u), "U");
}

LocalOperator companion_operator(const UnitaryParams& params) {
    LocalOperator v =
        two_param_unitary(UnitaryParams(kPi - params.theta, wrap_phase(params.phi - kPi)));
    v.label = "V";
    return v;
}

CMatrix refined_final_state(const CVector& psi_in, const RefinedStrategy& s1,
                            const RefinedStrategy& s2) {
    if (psi_in.dim() != 4) {
        throw DimensionMismatch("refined_final_state: psi_in must be a two-qubit state");
    }
    if (!psi_in.is_normalized()) {
        throw NotNormalized("refined_final_state: psi_in not normalized");
    }
    const CMatrix u1 = two_param_unitary(s1.params).matrix;
    const CMatrix v1 = companion_operator(s1.params).matrix;
    const CMatrix u2 = two_param_unitary(s2.params).matrix;
    const CMatrix v2 = companion_operator(s2.params).matrix;
    const CMatrix rho_in = outer(psi_in);
    const double p = s1.p;
    const double q = s2.p;

    CMatrix rho(4, 4);
    const std::pair<double, std::pair<const CMatrix*, const CMatrix*>> terms[] = {
        {p * q, {&u1, &u2}},
        {p * (1.0 - q), {&u1, &v2}},
        {(1.0 - p) * q, {&v1, &u2}},
        {(1.0 - p) * (1.0 - q), {&v1, &v2}},
    };
    for (const auto& [w, ops] : terms) {
        if (w == 0.0) continue;
        const CMatrix full = tensor(*ops.first, *ops.second);
        rho = rho + (full * rho_in * full.adjoint()).scaled(w);
    }
    return rho;
}

CVector qubit_state(const SeparableQubitParams& params) {
    const double c = std::cos(params.theta / 2.0);
    const double s = std::sin(params.theta / 2.0);
    const Complex phase(std::cos(params.phi), std::sin(params.phi));
    return CVector({Complex(c, 0.0), phase * s});
}

std::pair<SeparableQubitParams, SeparableQubitParams> classical_recovery_params(
    const CVector& psi_in) {
    if (psi_in.dim() != 4) {
        throw DimensionMismatch("classical_recovery_params: psi_in must be two-qubit");
    }
    if (!psi_in.is_normalized()) {
        throw NotNormalized("classical_recovery_params: psi_in not normalized");
    }
    if (!is_separable_pure(psi_in, 2, 2)) {
        throw NotSeparable("classical_recovery_params: state is entangled");
    }
    // Factor via the largest-magnitude amplitude: with lambda[i][j] = a_i b_j
    // and pivot (r, c), row r gives b up to scale and column c gives a.
    std::size_t pr = 0, pc = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            if (std::abs(psi_in[i * 2 + j]) > best) {
                best = std::abs(psi_in[i * 2 + j]);
                pr = i;
                pc = j;
            }
    Complex a[2] = {psi_in[0 * 2 + pc], psi_in[1 * 2 + pc]};
    Complex b[2] = {psi_in[pr * 2 + 0], psi_in[pr * 2 + 1]};
    const double na = std::sqrt(std::norm(a[0]) + std::norm(a[1]));
    const double nb = std::sqrt(std::norm(b[0]) + std::norm(b[1]));
    for (Complex& z : a) z /= na;
    for (Complex& z : b) z /= nb;

    auto params_of = [](const Complex amp0, const Complex amp1) {
        SeparableQubitParams out;
        out.theta = 2.0 * std::atan2(std::abs(amp1), std::abs(amp0));
        const bool phase_defined = std::abs(amp0) > tolerance() && std::abs(amp1) > tolerance();
        out.phi = phase_defined ? wrap_phase(std::arg(amp1) - std::arg(amp0)) : 0.0;
        return out;
    };
    return {params_of(a[0], a[1]), params_of(b[0], b[1])};
}

}  // namespace qgames
