#include "qgames/mw_scheme.hpp"

namespace qgames {

std::vector<double> PayoffOperator::diag1() const {
    std::vector<double> d;
    d.reserve(entries.size());
    for (const PayoffPair& p : entries) d.push_back(p.p1);
    return d;
}

std::vector<double> PayoffOperator::diag2() const {
    std::vector<double> d;
    d.reserve(entries.size());
    for (const PayoffPair& p : entries) d.push_back(p.p2);
    return d;
}

LocalOperator::LocalOperator(CMatrix m, std::string l)
    : matrix(std::move(m)), label(std::move(l)) {
    if (!matrix.is_unitary(tolerance())) {
        throw NotUnitary("LocalOperator: matrix is not unitary");
    }
}

PayoffOperator payoff_operator_from(const BimatrixGame& g) {
    PayoffOperator x;
    x.entries.reserve(g.n_rows() * g.n_cols());
    for (std::size_t i = 0; i < g.n_rows(); ++i)
        for (std::size_t j = 0; j < g.n_cols(); ++j) x.entries.push_back(g.at(i, j));
    return x;
}

LocalOperator shift_operator(std::size_t k, std::size_t dim) {
    if (k >= dim) throw IndexOutOfRange("shift_operator: shift must be < dim");
    CMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) m.at((i + k) % dim, i) = Complex(1.0, 0.0);
    std::string label;
    if (dim == 2) {
        label = (k == 0) ? "I" : "X";
    } else {
        label = "U" + std::to_string(k);
    }
    return LocalOperator(std::move(m), std::move(label));
}

std::vector<LocalOperator> shift_family(std::size_t dim) {
    std::vector<LocalOperator> ops;
    ops.reserve(dim);
    for (std::size_t k = 0; k < dim; ++k) ops.push_back(shift_operator(k, dim));
    return ops;
}

CMatrix mw_final_state(const CVector& psi_in, const MixedStrategy& p, const MixedStrategy& q,
                       const std::vector<LocalOperator>& ops1,
                       const std::vector<LocalOperator>& ops2) {
    if (!psi_in.is_normalized()) throw NotNormalized("mw_final_state: psi_in not normalized");
    if (p.size() != ops1.size() || q.size() != ops2.size()) {
        throw DimensionMismatch("mw_final_state: strategy lengths must match operator sets");
    }
    const std::size_t d1 = ops1.empty() ? 0 : ops1[0].matrix.rows();
    const std::size_t d2 = ops2.empty() ? 0 : ops2[0].matrix.rows();
    if (d1 * d2 != psi_in.dim()) {
        throw DimensionMismatch("mw_final_state: operator dims do not match psi_in");
    }
    const CMatrix rho_in = outer(psi_in);
    CMatrix rho(psi_in.dim(), psi_in.dim());
    for (std::size_t k = 0; k < ops1.size(); ++k) {
        for (std::size_t l = 0; l < ops2.size(); ++l) {
            const double w = p[k] * q[l];
            if (w == 0.0) continue;
            const CMatrix u = tensor(ops1[k].matrix, ops2[l].matrix);
            rho = rho + (u * rho_in * u.adjoint()).scaled(w);
        }
    }
    return rho;
}

PayoffPair mw_payoff(const BimatrixGame& g, const CVector& psi_in, const MixedStrategy& p,
                     const MixedStrategy& q) {
    const CMatrix rho =
        mw_final_state(psi_in, p, q, shift_family(g.n_rows()), shift_family(g.n_cols()));
    const PayoffOperator x = payoff_operator_from(g);
    return {trace_product(x.diag1(), rho), trace_product(x.diag2(), rho)};
}

BimatrixGame mw_output_game(const BimatrixGame& g, const CVector& psi_in) {
    const std::size_t n = g.n_rows();
    const std::size_t m = g.n_cols();
    const auto ops1 = shift_family(n);
    const auto ops2 = shift_family(m);
    std::vector<std::vector<PayoffPair>> payoffs(n, std::vector<PayoffPair>(m));
    std::vector<std::string> rlabels, clabels;
    for (std::size_t k = 0; k < n; ++k) rlabels.push_back(ops1[k].label);
    for (std::size_t l = 0; l < m; ++l) clabels.push_back(ops2[l].label);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < m; ++l) {
            payoffs[k][l] =
                mw_payoff(g, psi_in, MixedStrategy::pure(n, k), MixedStrategy::pure(m, l));
        }
    }
    return BimatrixGame(std::move(payoffs), std::move(rlabels), std::move(clabels));
}

}  // namespace qgames
