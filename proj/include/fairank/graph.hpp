#ifndef FAIRANK_GRAPH_HPP
#define FAIRANK_GRAPH_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fairank/errors.hpp"

namespace fairank {

/// Community label. Red is the minority community throughout the library.
enum class Color : std::uint8_t { Red = 0, Blue = 1 };

inline constexpr std::size_t index_of(Color c) noexcept { return static_cast<std::size_t>(c); }
inline constexpr Color other(Color c) noexcept { return c == Color::Red ? Color::Blue : Color::Red; }
inline constexpr char color_char(Color c) noexcept { return c == Color::Red ? 'R' : 'B'; }

using NodeId = std::uint32_t;

struct Edge {
    NodeId src;
    NodeId dst;

    friend bool operator==(const Edge&, const Edge&) = default;
};

enum class DegreeKind { In, Out, Total };

/**
 * Immutable directed multigraph with one color per node.
 *
 * Parallel edges are kept with multiplicity and self-loops are allowed.
 * Adjacency is stored twice in compressed form (by source and by target);
 * within each neighbour list edges appear in input order.
 */
class ColoredDigraph {
public:
    /// Builds the graph. Throws DataError on an empty edge list or when an
    /// endpoint has no color (endpoint >= colors.size()).
    static ColoredDigraph from_edge_list(std::span<const Edge> edges, std::span<const Color> colors) {
        if (edges.empty()) {
            throw DataError("empty graph");
        }
        return ColoredDigraph(std::vector<Color>(colors.begin(), colors.end()),
                              std::vector<Edge>(edges.begin(), edges.end()));
    }

    ColoredDigraph(std::vector<Color> colors, std::vector<Edge> edges)
        : colors_(std::move(colors)), edges_(std::move(edges)) {
        const std::size_t n = colors_.size();
        for (const Edge& e : edges_) {
            if (e.src >= n || e.dst >= n) {
                throw DataError("missing color for node " + std::to_string(std::max(e.src, e.dst)));
            }
        }
        build_csr(n);
    }

    std::size_t num_nodes() const noexcept { return colors_.size(); }
    std::size_t num_edges() const noexcept { return edges_.size(); }

    Color color(NodeId v) const { return colors_[v]; }
    std::span<const Color> colors() const noexcept { return colors_; }
    std::span<const Edge> edges() const noexcept { return edges_; }

    std::span<const NodeId> out_neighbors(NodeId v) const {
        return {out_targets_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
    }
    std::span<const NodeId> in_neighbors(NodeId v) const {
        return {in_sources_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
    }

    std::size_t indegree(NodeId v) const { return in_offsets_[v + 1] - in_offsets_[v]; }
    std::size_t outdegree(NodeId v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
    std::size_t total_degree(NodeId v) const { return indegree(v) + outdegree(v); }

    std::size_t degree(NodeId v, DegreeKind which) const {
        switch (which) {
        case DegreeKind::In: return indegree(v);
        case DegreeKind::Out: return outdegree(v);
        case DegreeKind::Total: return total_degree(v);
        }
        return 0;
    }

    std::vector<std::size_t> degrees(DegreeKind which) const {
        std::vector<std::size_t> out(num_nodes());
        for (NodeId v = 0; v < out.size(); ++v) {
            out[v] = degree(v, which);
        }
        return out;
    }

    std::size_t count(Color c) const {
        return static_cast<std::size_t>(std::count(colors_.begin(), colors_.end(), c));
    }

private:
    void build_csr(std::size_t n) {
        out_offsets_.assign(n + 1, 0);
        in_offsets_.assign(n + 1, 0);
        for (const Edge& e : edges_) {
            ++out_offsets_[e.src + 1];
            ++in_offsets_[e.dst + 1];
        }
        for (std::size_t v = 0; v < n; ++v) {
            out_offsets_[v + 1] += out_offsets_[v];
            in_offsets_[v + 1] += in_offsets_[v];
        }
        out_targets_.resize(edges_.size());
        in_sources_.resize(edges_.size());
        std::vector<std::size_t> out_fill(out_offsets_.begin(), out_offsets_.end() - 1);
        std::vector<std::size_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
        for (const Edge& e : edges_) {
            out_targets_[out_fill[e.src]++] = e.dst;
            in_sources_[in_fill[e.dst]++] = e.src;
        }
    }

    std::vector<Color> colors_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> out_offsets_;
    std::vector<NodeId> out_targets_;
    std::vector<std::size_t> in_offsets_;
    std::vector<NodeId> in_sources_;
};

/// Fraction of red nodes.
inline double minority_fraction(const ColoredDigraph& g) {
    if (g.num_nodes() == 0) {
        return 0.0;
    }
    return static_cast<double>(g.count(Color::Red)) / static_cast<double>(g.num_nodes());
}

inline std::size_t cross_edge_count(const ColoredDigraph& g) {
    std::size_t cross = 0;
    for (const Edge& e : g.edges()) {
        cross += g.color(e.src) != g.color(e.dst) ? 1 : 0;
    }
    return cross;
}

/**
 * Homophily rarefaction index: observed cross-community edges over the
 * 2 r (1 - r) |E| expected in an integrated network, with r the empirical
 * minority fraction. Values near 1 mean integrated, below 1 homophilic.
 */
inline double hri(const ColoredDigraph& g) {
    const double r = minority_fraction(g);
    const double expected = 2.0 * r * (1.0 - r) * static_cast<double>(g.num_edges());
    if (expected <= 0.0) {
        throw DataError("HRI undefined: graph has a single color");
    }
    return static_cast<double>(cross_edge_count(g)) / expected;
}

/// Complementary CDF on the integer grid k = 0..max_k: value[k] is the
/// fraction of nodes with degree >= k.
struct Ccdf {
    std::vector<double> value;

    std::size_t size() const noexcept { return value.size(); }
};

struct ColorCcdf {
    Ccdf red;
    Ccdf blue;

    const Ccdf& operator[](Color c) const { return c == Color::Red ? red : blue; }
};

/// CCDF of a degree multiset on k = 0..max_k.
inline Ccdf ccdf_of(std::span<const std::size_t> degrees, std::size_t max_k) {
    Ccdf out;
    out.value.assign(max_k + 1, 0.0);
    if (degrees.empty()) {
        return out;
    }
    std::vector<std::size_t> hist(max_k + 2, 0);
    for (std::size_t d : degrees) {
        ++hist[std::min(d, max_k + 1)];
    }
    std::size_t at_least = degrees.size();
    const double total = static_cast<double>(degrees.size());
    for (std::size_t k = 0; k <= max_k; ++k) {
        out.value[k] = static_cast<double>(at_least) / total;
        at_least -= hist[k];
    }
    return out;
}

/// Per-color degree CCDFs on a shared grid 0..max degree of the whole graph.
/// A color without nodes gets an all-zero curve.
inline ColorCcdf ccdf_by_color(const ColoredDigraph& g, DegreeKind which) {
    std::vector<std::size_t> red, blue;
    std::size_t max_k = 0;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        const std::size_t d = g.degree(v, which);
        max_k = std::max(max_k, d);
        (g.color(v) == Color::Red ? red : blue).push_back(d);
    }
    return {ccdf_of(red, max_k), ccdf_of(blue, max_k)};
}

/// Pointwise mean of CCDFs; shorter curves are padded with zeros.
inline Ccdf average_ccdf(std::span<const Ccdf> curves) {
    if (curves.empty()) {
        throw std::invalid_argument("no CCDFs to average");
    }
    Ccdf out;
    for (const Ccdf& c : curves) {
        out.value.resize(std::max(out.value.size(), c.size()), 0.0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            out.value[k] += c.value[k];
        }
    }
    for (double& v : out.value) {
        v /= static_cast<double>(curves.size());
    }
    return out;
}

/// Largest k at which at least `min_count` of `nodes` nodes are expected to
/// have degree >= k. Past it the CCDF is dominated by finite-size noise.
inline std::size_t tail_cutoff(const Ccdf& ccdf, double nodes, double min_count = 10.0) {
    std::size_t k_max = 0;
    for (std::size_t k = 0; k < ccdf.size(); ++k) {
        if (ccdf.value[k] * nodes >= min_count) {
            k_max = k;
        }
    }
    return k_max;
}

struct TailFit {
    double beta = 0.0;  ///< 1 + |slope|, the density exponent
    double slope = 0.0; ///< least-squares slope of log ccdf against log k
    double intercept = 0.0;
    std::size_t points = 0;
};

/**
 * Least-squares line through (log k, log ccdf(k)) for k in [k_min, k_max]
 * with ccdf(k) > 0. A CCDF falling like k^-(beta-1) yields beta.
 */
inline TailFit tail_exponent_fit(const Ccdf& ccdf, std::size_t k_min,
                                 std::size_t k_max = static_cast<std::size_t>(-1)) {
    std::vector<double> xs, ys;
    for (std::size_t k = std::max<std::size_t>(k_min, 1); k < ccdf.size() && k <= k_max; ++k) {
        if (ccdf.value[k] > 0.0) {
            xs.push_back(std::log(static_cast<double>(k)));
            ys.push_back(std::log(ccdf.value[k]));
        }
    }
    if (xs.size() < 3) {
        throw std::invalid_argument("tail fit needs at least 3 positive tail points");
    }
    const double n = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (syy == 0.0) {
        throw std::invalid_argument("tail fit on a constant CCDF is degenerate");
    }
    TailFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.beta = 1.0 + std::abs(fit.slope);
    fit.points = xs.size();
    return fit;
}

} // namespace fairank

#endif // FAIRANK_GRAPH_HPP
