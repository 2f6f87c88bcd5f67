#ifndef FAIRANK_RANKING_HPP
#define FAIRANK_RANKING_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fairank/graph.hpp"
#include "fairank/rng.hpp"

namespace fairank {

struct IterationControl {
    double tol = 1e-10;         ///< L1 distance between successive normalized iterates
    std::size_t max_iter = 1000;

    void validate() const {
        if (!(tol > 0.0)) {
            throw std::invalid_argument("tolerance must be positive");
        }
        if (max_iter < 1) {
            throw std::invalid_argument("max_iter must be >= 1");
        }
    }
};

struct RankingResult {
    std::string algorithm;
    std::vector<double> scores;
    std::vector<NodeId> order; ///< best first
    std::size_t iterations = 0;
    bool converged = true;
    double residual = 0.0;
    bool degenerate = false; ///< non-simple leading eigenvalue or rank-deficient subspace
    std::vector<std::string> warnings;
};

/**
 * Sorts nodes by descending score. Ties go to the smaller NodeId, or, when
 * tie_seed is given, follow a random permutation drawn from that seed.
 */
inline std::vector<NodeId> rank_order(std::span<const double> scores,
                                      std::optional<std::uint64_t> tie_seed = std::nullopt) {
    std::vector<NodeId> order(scores.size());
    std::iota(order.begin(), order.end(), NodeId{0});
    std::vector<NodeId> tie_key(order);
    if (tie_seed) {
        Rng rng(*tie_seed);
        for (std::size_t i = tie_key.size(); i > 1; --i) {
            std::swap(tie_key[i - 1], tie_key[rng.below(i)]);
        }
    }
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (scores[a] != scores[b]) {
            return scores[a] > scores[b];
        }
        return tie_key[a] < tie_key[b];
    });
    return order;
}

inline RankingResult make_result(std::string algorithm, std::vector<double> scores,
                                 std::optional<std::uint64_t> tie_seed = std::nullopt) {
    RankingResult r;
    r.algorithm = std::move(algorithm);
    r.scores = std::move(scores);
    r.order = rank_order(r.scores, tie_seed);
    return r;
}

/// Ranks (0 = best) from an order.
inline std::vector<std::size_t> positions(std::span<const NodeId> order) {
    std::vector<std::size_t> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        pos[order[i]] = i;
    }
    return pos;
}

} // namespace fairank

#endif // FAIRANK_RANKING_HPP
