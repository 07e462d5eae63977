#include "qgames/emw_scheme.hpp"

namespace qgames {

namespace {
void validate_config(const EmwConfig& cfg) {
    const std::size_t dim = cfg.input_game.n_rows() * cfg.input_game.n_cols();
    if (cfg.joint_states.empty()) {
        throw InvalidArgument("EmwConfig: at least one joint state required");
    }
    for (const CVector& psi : cfg.joint_states) {
        if (psi.dim() != dim) {
            throw DimensionMismatch("EmwConfig: joint state dim must equal n_rows*n_cols");
        }
        if (!psi.is_normalized()) throw NotNormalized("EmwConfig: joint state not normalized");
    }
    if (cfg.local_ops1.empty() || cfg.local_ops2.empty()) {
        throw InvalidArgument("EmwConfig: local operator families must be nonempty");
    }
    if (cfg.local_ops1[0].matrix.rows() != cfg.input_game.n_rows() ||
        cfg.local_ops2[0].matrix.rows() != cfg.input_game.n_cols()) {
        throw DimensionMismatch("EmwConfig: operator dims must match game dims");
    }
}
}  // namespace

EmwConfig::EmwConfig(BimatrixGame game, std::vector<CVector> states)
    : EmwConfig(std::move(game), std::move(states), {}, {}) {}

EmwConfig::EmwConfig(BimatrixGame game, std::vector<CVector> states,
                     std::vector<LocalOperator> ops1, std::vector<LocalOperator> ops2)
    : input_game(std::move(game)),
      joint_states(std::move(states)),
      local_ops1(std::move(ops1)),
      local_ops2(std::move(ops2)) {
    if (local_ops1.empty()) local_ops1 = shift_family(input_game.n_rows());
    if (local_ops2.empty()) local_ops2 = shift_family(input_game.n_cols());
    validate_config(*this);
}

std::size_t EmwConfig::strategy_count(int player) const {
    const std::size_t ops = (player == 1) ? local_ops1.size() : local_ops2.size();
    return (n_joint() + 1) * ops;
}

std::string EmwConfig::strategy_label(int player, std::size_t k) const {
    const auto& ops = (player == 1) ? local_ops1 : local_ops2;
    if (k >= strategy_count(player)) {
        throw IndexOutOfRange("EmwConfig::strategy_label: index out of range");
    }
    const std::size_t mode = k / ops.size();
    const std::size_t local = k % ops.size();
    std::string mode_label =
        (mode == 0) ? "C" : (n_joint() == 1 ? "Q" : "Q" + std::to_string(mode));
    return mode_label + "*" + ops[local].label;
}

CMatrix emw_final_state(const EmwConfig& cfg, const EmwStrategy& t1, const EmwStrategy& t2) {
    if (t1.size() != cfg.strategy_count(1) || t2.size() != cfg.strategy_count(2)) {
        throw DimensionMismatch("emw_final_state: strategy lengths must match config");
    }
    const std::size_t k1 = cfg.local_ops1.size();
    const std::size_t k2 = cfg.local_ops2.size();
    const std::size_t dim = cfg.input_game.n_rows() * cfg.input_game.n_cols();
    const CMatrix ground = outer(CVector::basis(dim, 0));

    CMatrix rho(dim, dim);
    for (std::size_t i = 0; i <= cfg.n_joint(); ++i) {
        for (std::size_t j = 0; j <= cfg.n_joint(); ++j) {
            const CMatrix base =
                (i == j && i != 0) ? outer(cfg.joint_states[i - 1]) : ground;
            for (std::size_t k = 0; k < k1; ++k) {
                for (std::size_t l = 0; l < k2; ++l) {
                    const double w = t1[i * k1 + k] * t2[j * k2 + l];
                    if (w == 0.0) continue;
                    const CMatrix u = tensor(cfg.local_ops1[k].matrix, cfg.local_ops2[l].matrix);
                    rho = rho + (u * base * u.adjoint()).scaled(w);
                }
            }
        }
    }
    return rho;
}

PayoffPair emw_payoff(const EmwConfig& cfg, const EmwStrategy& t1, const EmwStrategy& t2) {
    const CMatrix rho = emw_final_state(cfg, t1, t2);
    const PayoffOperator x = payoff_operator_from(cfg.input_game);
    return {trace_product(x.diag1(), rho), trace_product(x.diag2(), rho)};
}

BimatrixGame emw_bimatrix(const EmwConfig& cfg) {
    const std::size_t n = cfg.strategy_count(1);
    const std::size_t m = cfg.strategy_count(2);
    std::vector<std::vector<PayoffPair>> payoffs(n, std::vector<PayoffPair>(m));
    std::vector<std::string> rlabels, clabels;
    for (std::size_t r = 0; r < n; ++r) rlabels.push_back(cfg.strategy_label(1, r));
    for (std::size_t c = 0; c < m; ++c) clabels.push_back(cfg.strategy_label(2, c));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < m; ++c) {
            payoffs[r][c] =
                emw_payoff(cfg, MixedStrategy::pure(n, r), MixedStrategy::pure(m, c));
        }
    }
    return BimatrixGame(std::move(payoffs), std::move(rlabels), std::move(clabels));
}

}  // namespace qgames
