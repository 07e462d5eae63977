#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qgames/common.hpp"

namespace qgames {

struct PayoffPair {
    double p1 = 0.0;
    double p2 = 0.0;

    PayoffPair() = default;
    PayoffPair(double a, double b);

    PayoffPair operator+(const PayoffPair& o) const { return {p1 + o.p1, p2 + o.p2}; }
    PayoffPair operator*(double s) const { return {p1 * s, p2 * s}; }
    bool approx(const PayoffPair& o, double tol) const;
};

/// A probability vector over a player's pure-strategy labels.
class MixedStrategy {
public:
    explicit MixedStrategy(std::vector<double> probs);

    /// Pure strategy: all mass on index k.
    static MixedStrategy pure(std::size_t size, std::size_t k);
    static MixedStrategy uniform(std::size_t size);

    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    const std::vector<double>& probs() const { return probs_; }

private:
    std::vector<double> probs_;
};

/// An n x m game of payoff pairs with strategy labels on both sides.
class BimatrixGame {
public:
    BimatrixGame(std::vector<std::vector<PayoffPair>> payoffs,
                 std::vector<std::string> row_labels, std::vector<std::string> col_labels);

    /// Labels default to r0..r{n-1} / c0..c{m-1}.
    explicit BimatrixGame(std::vector<std::vector<PayoffPair>> payoffs);

    std::size_t n_rows() const { return payoffs_.size(); }
    std::size_t n_cols() const { return payoffs_[0].size(); }
    const PayoffPair& at(std::size_t r, std::size_t c) const { return payoffs_[r][c]; }
    const std::vector<std::vector<PayoffPair>>& payoffs() const { return payoffs_; }
    const std::vector<std::string>& row_labels() const { return row_labels_; }
    const std::vector<std::string>& col_labels() const { return col_labels_; }

    bool same_payoffs(const BimatrixGame& o, double tol) const;

private:
    std::vector<std::vector<PayoffPair>> payoffs_;
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
};

PayoffPair expected_payoff(const BimatrixGame& g, const MixedStrategy& s1,
                           const MixedStrategy& s2);

/// True iff strategies i and j of the given player induce identical payoff
/// pairs against every opponent pure strategy (rows for player 1, columns
/// for player 2), within the shared tolerance.
bool equivalent_strategies(const BimatrixGame& g, int player, std::size_t i, std::size_t j);

/// Merges equivalent rows, then equivalent columns, keeping the lowest-index
/// representative; merged labels are joined with '/'.
BimatrixGame quotient_game(const BimatrixGame& g);

}  // namespace qgames
