#include "qgames/nash_solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace qgames {

namespace {

// Gaussian elimination with partial pivoting; returns false on a singular
// system (pivot below 1e-12).
bool solve_linear(std::vector<std::vector<double>> a, std::vector<double> b,
                  std::vector<double>& x) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        if (std::abs(a[pivot][col]) < 1e-12) return false;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    x.resize(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return true;
}

double payoff_against(const BimatrixGame& g, int player, std::size_t own,
                      const MixedStrategy& opponent) {
    double v = 0.0;
    if (player == 1) {
        for (std::size_t j = 0; j < g.n_cols(); ++j) v += opponent[j] * g.at(own, j).p1;
    } else {
        for (std::size_t i = 0; i < g.n_rows(); ++i) v += opponent[i] * g.at(i, own).p2;
    }
    return v;
}

void combinations(std::size_t n, std::size_t k,
                  const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
}

enum class SolveStatus { Ok, Singular, Infeasible };

// Solves the opponent's mixture that makes `player` indifferent across
// own_support, with the opponent restricted to opp_support.
SolveStatus indifference_mixture(const BimatrixGame& g, int player,
                                 const std::vector<std::size_t>& own_support,
                                 const std::vector<std::size_t>& opp_support,
                                 std::vector<double>& probs) {
    const std::size_t k = own_support.size();
    // Unknowns: opponent probabilities over opp_support plus the common value v.
    std::vector<std::vector<double>> a(k + 1, std::vector<double>(k + 1, 0.0));
    std::vector<double> b(k + 1, 0.0);
    for (std::size_t row = 0; row < k; ++row) {
        for (std::size_t col = 0; col < k; ++col) {
            a[row][col] = (player == 1) ? g.at(own_support[row], opp_support[col]).p1
                                        : g.at(opp_support[col], own_support[row]).p2;
        }
        a[row][k] = -1.0;
    }
    for (std::size_t col = 0; col < k; ++col) a[k][col] = 1.0;
    b[k] = 1.0;

    std::vector<double> x;
    if (!solve_linear(std::move(a), std::move(b), x)) return SolveStatus::Singular;
    for (std::size_t col = 0; col < k; ++col) {
        if (x[col] < -kDeviationTol) return SolveStatus::Infeasible;
    }
    const std::size_t opp_size = (player == 1) ? g.n_cols() : g.n_rows();
    probs.assign(opp_size, 0.0);
    double sum = 0.0;
    for (std::size_t col = 0; col < k; ++col) {
        const double v = std::max(0.0, x[col]);
        probs[opp_support[col]] = v;
        sum += v;
    }
    if (sum <= kDeviationTol) return SolveStatus::Infeasible;
    for (double& v : probs) v /= sum;
    return SolveStatus::Ok;
}

bool close_strategies(const MixedStrategy& a, const MixedStrategy& b, double tol) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

}  // namespace

std::vector<std::size_t> best_responses(const BimatrixGame& g, int player,
                                        const MixedStrategy& opponent) {
    if (player != 1 && player != 2) throw InvalidArgument("player must be 1 or 2");
    const std::size_t own = (player == 1) ? g.n_rows() : g.n_cols();
    const std::size_t opp = (player == 1) ? g.n_cols() : g.n_rows();
    if (opponent.size() != opp) {
        throw DimensionMismatch("best_responses: opponent strategy length mismatch");
    }
    std::vector<double> values(own);
    double best = -1e300;
    for (std::size_t i = 0; i < own; ++i) {
        values[i] = payoff_against(g, player, i, opponent);
        best = std::max(best, values[i]);
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < own; ++i) {
        if (values[i] >= best - kDeviationTol) out.push_back(i);
    }
    return out;
}

bool verify_equilibrium(const BimatrixGame& g, const MixedStrategy& s1, const MixedStrategy& s2,
                        double tol) {
    const PayoffPair base = expected_payoff(g, s1, s2);
    for (std::size_t i = 0; i < g.n_rows(); ++i) {
        if (payoff_against(g, 1, i, s2) > base.p1 + tol) return false;
    }
    for (std::size_t j = 0; j < g.n_cols(); ++j) {
        if (payoff_against(g, 2, j, s1) > base.p2 + tol) return false;
    }
    return true;
}

std::vector<Equilibrium> pure_nash(const BimatrixGame& g) {
    std::vector<Equilibrium> out;
    for (std::size_t i = 0; i < g.n_rows(); ++i) {
        for (std::size_t j = 0; j < g.n_cols(); ++j) {
            bool best = true;
            for (std::size_t r = 0; r < g.n_rows() && best; ++r)
                if (g.at(r, j).p1 > g.at(i, j).p1 + kDeviationTol) best = false;
            for (std::size_t c = 0; c < g.n_cols() && best; ++c)
                if (g.at(i, c).p2 > g.at(i, j).p2 + kDeviationTol) best = false;
            if (best) {
                out.push_back({MixedStrategy::pure(g.n_rows(), i),
                               MixedStrategy::pure(g.n_cols(), j), g.at(i, j),
                               EquilibriumKind::Pure});
            }
        }
    }
    return out;
}

SupportEnumerationResult support_enumeration(const BimatrixGame& g, std::size_t max_support) {
    if (g.n_rows() > 8 || g.n_cols() > 8) {
        throw InvalidArgument("support_enumeration: game larger than 8x8");
    }
    if (max_support > std::min(g.n_rows(), g.n_cols())) {
        throw InvalidArgument("support_enumeration: max_support exceeds game dims");
    }
    SupportEnumerationResult result;
    for (std::size_t k = 1; k <= max_support; ++k) {
        combinations(g.n_rows(), k, [&](const std::vector<std::size_t>& s1) {
            combinations(g.n_cols(), k, [&](const std::vector<std::size_t>& s2) {
                std::vector<double> q_probs, p_probs;
                const SolveStatus q_st = indifference_mixture(g, 1, s1, s2, q_probs);
                const SolveStatus p_st = indifference_mixture(g, 2, s2, s1, p_probs);
                if (q_st == SolveStatus::Singular || p_st == SolveStatus::Singular) {
                    result.degenerate_supports.emplace_back(s1, s2);
                    return;
                }
                if (q_st != SolveStatus::Ok || p_st != SolveStatus::Ok) return;
                MixedStrategy ms1{p_probs}, ms2{q_probs};
                // Reject if any strategy in support ended at zero probability
                // (support would not actually be played).
                for (std::size_t i : s1)
                    if (ms1[i] <= kDeviationTol) return;
                for (std::size_t j : s2)
                    if (ms2[j] <= kDeviationTol) return;
                if (!verify_equilibrium(g, ms1, ms2)) return;
                for (const Equilibrium& e : result.equilibria) {
                    if (close_strategies(e.s1, ms1, kDeviationTol) &&
                        close_strategies(e.s2, ms2, kDeviationTol)) {
                        return;
                    }
                }
                result.equilibria.push_back({ms1, ms2, expected_payoff(g, ms1, ms2),
                                             k == 1 ? EquilibriumKind::Pure
                                                    : EquilibriumKind::Mixed});
            });
        });
    }
    return result;
}

}  // namespace qgames
