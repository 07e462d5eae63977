#include "qgames/game_model.hpp"

#include <cmath>

namespace qgames {

PayoffPair::PayoffPair(double a, double b) : p1(a), p2(b) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw InvalidArgument("PayoffPair: payoffs must be finite");
    }
}

bool PayoffPair::approx(const PayoffPair& o, double tol) const {
    return std::abs(p1 - o.p1) <= tol && std::abs(p2 - o.p2) <= tol;
}

MixedStrategy::MixedStrategy(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw InvalidArgument("MixedStrategy: empty probability vector");
    double sum = 0.0;
    for (double p : probs_) {
        if (!std::isfinite(p) || p < -tolerance()) {
            throw InvalidArgument("MixedStrategy: probabilities must be nonnegative");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > tolerance()) {
        throw NotNormalized("MixedStrategy: probabilities must sum to 1");
    }
}

MixedStrategy MixedStrategy::pure(std::size_t size, std::size_t k) {
    if (k >= size) throw IndexOutOfRange("MixedStrategy::pure: index out of range");
    std::vector<double> p(size, 0.0);
    p[k] = 1.0;
    return MixedStrategy(std::move(p));
}

MixedStrategy MixedStrategy::uniform(std::size_t size) {
    if (size == 0) throw InvalidArgument("MixedStrategy::uniform: size must be >= 1");
    return MixedStrategy(std::vector<double>(size, 1.0 / static_cast<double>(size)));
}

namespace {
std::vector<std::string> default_labels(char prefix, std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
    return labels;
}

void validate_payoffs(const std::vector<std::vector<PayoffPair>>& payoffs) {
    if (payoffs.empty() || payoffs[0].empty()) {
        throw InvalidArgument("BimatrixGame: payoff matrix must be nonempty");
    }
    for (const auto& row : payoffs) {
        if (row.size() != payoffs[0].size()) {
            throw DimensionMismatch("BimatrixGame: ragged payoff matrix");
        }
        for (const PayoffPair& p : row) {
            if (!std::isfinite(p.p1) || !std::isfinite(p.p2)) {
                throw InvalidArgument("BimatrixGame: payoffs must be finite");
            }
        }
    }
}
}  // namespace

BimatrixGame::BimatrixGame(std::vector<std::vector<PayoffPair>> payoffs,
                           std::vector<std::string> row_labels,
                           std::vector<std::string> col_labels)
    : payoffs_(std::move(payoffs)),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)) {
    validate_payoffs(payoffs_);
    if (row_labels_.size() != payoffs_.size() || col_labels_.size() != payoffs_[0].size()) {
        throw DimensionMismatch("BimatrixGame: label counts must match dims");
    }
}

BimatrixGame::BimatrixGame(std::vector<std::vector<PayoffPair>> payoffs)
    : payoffs_(std::move(payoffs)) {
    validate_payoffs(payoffs_);
    row_labels_ = default_labels('r', payoffs_.size());
    col_labels_ = default_labels('c', payoffs_[0].size());
}

bool BimatrixGame::same_payoffs(const BimatrixGame& o, double tol) const {
    if (n_rows() != o.n_rows() || n_cols() != o.n_cols()) return false;
    for (std::size_t r = 0; r < n_rows(); ++r)
        for (std::size_t c = 0; c < n_cols(); ++c)
            if (!at(r, c).approx(o.at(r, c), tol)) return false;
    return true;
}

PayoffPair expected_payoff(const BimatrixGame& g, const MixedStrategy& s1,
                           const MixedStrategy& s2) {
    if (s1.size() != g.n_rows() || s2.size() != g.n_cols()) {
        throw DimensionMismatch("expected_payoff: strategy lengths must match game dims");
    }
    PayoffPair acc;
    for (std::size_t i = 0; i < g.n_rows(); ++i) {
        if (s1[i] == 0.0) continue;
        for (std::size_t j = 0; j < g.n_cols(); ++j) {
            acc = acc + g.at(i, j) * (s1[i] * s2[j]);
        }
    }
    return acc;
}

bool equivalent_strategies(const BimatrixGame& g, int player, std::size_t i, std::size_t j) {
    if (player != 1 && player != 2) throw InvalidArgument("player must be 1 or 2");
    const std::size_t n = (player == 1) ? g.n_rows() : g.n_cols();
    const std::size_t opp = (player == 1) ? g.n_cols() : g.n_rows();
    if (i >= n || j >= n) throw IndexOutOfRange("equivalent_strategies: index out of range");
    for (std::size_t k = 0; k < opp; ++k) {
        const PayoffPair& a = (player == 1) ? g.at(i, k) : g.at(k, i);
        const PayoffPair& b = (player == 1) ? g.at(j, k) : g.at(k, j);
        if (!a.approx(b, tolerance())) return false;
    }
    return true;
}

namespace {
// Groups indices into equivalence classes keeping lowest-index representatives.
std::vector<std::vector<std::size_t>> dedupe(const BimatrixGame& g, int player) {
    const std::size_t n = (player == 1) ? g.n_rows() : g.n_cols();
    std::vector<std::vector<std::size_t>> groups;
    std::vector<bool> taken(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (taken[i]) continue;
        std::vector<std::size_t> group{i};
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!taken[j] && equivalent_strategies(g, player, i, j)) {
                group.push_back(j);
                taken[j] = true;
            }
        }
        groups.push_back(std::move(group));
    }
    return groups;
}

std::string merged_label(const std::vector<std::string>& labels,
                         const std::vector<std::size_t>& group) {
    std::string out = labels[group[0]];
    for (std::size_t k = 1; k < group.size(); ++k) out += "/" + labels[group[k]];
    return out;
}
}  // namespace

BimatrixGame quotient_game(const BimatrixGame& g) {
    const auto row_groups = dedupe(g, 1);
    std::vector<std::vector<PayoffPair>> rows;
    std::vector<std::string> rlabels;
    for (const auto& group : row_groups) {
        rows.push_back(g.payoffs()[group[0]]);
        rlabels.push_back(merged_label(g.row_labels(), group));
    }
    const BimatrixGame row_reduced(rows, rlabels, g.col_labels());

    const auto col_groups = dedupe(row_reduced, 2);
    std::vector<std::vector<PayoffPair>> out(row_reduced.n_rows());
    std::vector<std::string> clabels;
    for (const auto& group : col_groups) {
        for (std::size_t r = 0; r < row_reduced.n_rows(); ++r) {
            out[r].push_back(row_reduced.at(r, group[0]));
        }
        clabels.push_back(merged_label(row_reduced.col_labels(), group));
    }
    return BimatrixGame(out, rlabels, clabels);
}

}  // namespace qgames
