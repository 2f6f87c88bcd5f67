#ifndef FAIRANK_BPAM_HPP
#define FAIRANK_BPAM_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fairank/graph.hpp"
#include "fairank/rng.hpp"

namespace fairank {

/// Parameters of the biased preferential attachment model.
struct BpamParams {
    std::size_t nodes = 1000;
    std::size_t outdeg = 6;
    double minority_ratio = 0.3; ///< probability that an arriving node is red
    double homophily = 0.5;      ///< acceptance probability of a cross-color edge

    void validate() const {
        if (nodes < 2) {
            throw std::invalid_argument("BPAM needs at least 2 nodes");
        }
        if (outdeg < 1) {
            throw std::invalid_argument("BPAM outdegree must be >= 1");
        }
        if (!(minority_ratio >= 0.0 && minority_ratio <= 1.0)) {
            throw std::invalid_argument("minority ratio must lie in [0, 1]");
        }
        if (!(homophily >= 0.0 && homophily <= 1.0)) {
            throw std::invalid_argument("homophily must lie in [0, 1]");
        }
    }

    /// The model treats red as the minority; r > 0.5 is legal but unusual.
    bool minority_warning() const noexcept { return minority_ratio > 0.5; }
};

struct GenerationStats {
    double alpha_hat = 0.0;       ///< share of total degree held by red nodes
    std::uint64_t rejections = 0; ///< homophily rejections over the whole run
    std::size_t red_nodes = 0;
    std::size_t blue_nodes = 0;
    std::size_t seed_nodes = 2; ///< nodes 0 (red) and 1 (blue); they emit no d-edges
};

struct BpamSample {
    ColoredDigraph graph;
    GenerationStats stats;
};

/**
 * Multiset of edge endpoints. A uniform draw returns node v with
 * probability total_degree(v) / sum of total degrees.
 */
class DegreeUrn {
public:
    void reserve(std::size_t n) { slots_.reserve(n); }
    void add(NodeId v) { slots_.push_back(v); }
    NodeId sample(Rng& rng) const { return slots_[rng.below(slots_.size())]; }
    std::size_t size() const noexcept { return slots_.size(); }

private:
    std::vector<NodeId> slots_;
};

inline constexpr std::uint64_t kMaxConsecutiveRejections = 10'000'000;

/**
 * Grows a two-community directed graph.
 *
 * Starts from red node 0 and blue node 1 joined by the edge 0 -> 1. Each
 * later node is red with probability r and draws d targets one at a time:
 * a target is sampled proportionally to current total degree, a target of
 * the other color is kept with probability rho and otherwise the draw is
 * repeated from scratch. The target's degree is updated right after each
 * accepted edge; the arriving node joins the urn once all d edges are placed,
 * so it never links to itself.
 */
inline BpamSample generate_bpam(const BpamParams& params, std::uint64_t seed) {
    params.validate();
    Rng rng(seed);

    const std::size_t n = params.nodes;
    const std::size_t d = params.outdeg;
    std::vector<Color> colors;
    colors.reserve(n);
    colors.push_back(Color::Red);
    colors.push_back(Color::Blue);

    std::vector<Edge> edges;
    edges.reserve(1 + (n - 2) * d);
    edges.push_back({0, 1});

    DegreeUrn urn;
    urn.reserve(2 * edges.capacity());
    urn.add(0);
    urn.add(1);

    GenerationStats stats;
    for (std::size_t i = 2; i < n; ++i) {
        const auto u = static_cast<NodeId>(i);
        const Color cu = rng.bernoulli(params.minority_ratio) ? Color::Red : Color::Blue;
        colors.push_back(cu);
        for (std::size_t j = 0; j < d; ++j) {
            std::uint64_t streak = 0;
            NodeId v;
            while (true) {
                v = urn.sample(rng);
                if (colors[v] == cu || rng.bernoulli(params.homophily)) {
                    break;
                }
                ++stats.rejections;
                if (++streak >= kMaxConsecutiveRejections) {
                    throw std::runtime_error("BPAM: " + std::to_string(streak) +
                                             " consecutive homophily rejections at node " +
                                             std::to_string(u) + "; check the homophily parameter");
                }
            }
            edges.push_back({u, v});
            urn.add(v);
        }
        for (std::size_t j = 0; j < d; ++j) {
            urn.add(u);
        }
    }

    ColoredDigraph graph(std::move(colors), std::move(edges));
    stats.red_nodes = graph.count(Color::Red);
    stats.blue_nodes = graph.count(Color::Blue);
    std::size_t red_degree = 0;
    for (NodeId v = 0; v < graph.num_nodes(); ++v) {
        if (graph.color(v) == Color::Red) {
            red_degree += graph.total_degree(v);
        }
    }
    stats.alpha_hat = static_cast<double>(red_degree) / (2.0 * static_cast<double>(graph.num_edges()));
    return {std::move(graph), stats};
}

} // namespace fairank

#endif // FAIRANK_BPAM_HPP
