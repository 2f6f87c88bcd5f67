#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "fairank/bpam.hpp"
#include "fairank/graph.hpp"
#include "oracles.hpp"

using namespace fairank;

namespace {

constexpr Color R = Color::Red;
constexpr Color B = Color::Blue;

ColoredDigraph star4() {
    // leaves 1..4 point at centre 0
    return ColoredDigraph({R, B, B, B, B}, {{1, 0}, {2, 0}, {3, 0}, {4, 0}});
}

} // namespace

TEST(Graph, SingleEdge) {
    const std::vector<Edge> edges{{0, 1}};
    const std::vector<Color> colors{R, B};
    auto g = ColoredDigraph::from_edge_list(edges, colors);
    EXPECT_EQ(g.num_nodes(), 2u);
    EXPECT_EQ(g.num_edges(), 1u);
    EXPECT_EQ(g.degrees(DegreeKind::In), (std::vector<std::size_t>{0, 1}));
}

TEST(Graph, ParallelEdgesKeepMultiplicity) {
    const std::vector<Edge> edges{{0, 1}, {0, 1}};
    const std::vector<Color> colors{B, B};
    auto g = ColoredDigraph::from_edge_list(edges, colors);
    EXPECT_EQ(g.num_edges(), 2u);
    EXPECT_EQ(g.indegree(1), 2u);
    EXPECT_EQ(g.out_neighbors(0).size(), 2u);
}

TEST(Graph, SelfLoopsAllowedOnIngest) {
    ColoredDigraph g({R}, {{0, 0}});
    EXPECT_EQ(g.indegree(0), 1u);
    EXPECT_EQ(g.outdegree(0), 1u);
}

TEST(Graph, DegreesMatchBruteForce) {
    const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {4, 3}, {4, 3}, {5, 4}, {0, 5}, {2, 5}};
    const std::vector<Color> colors{R, B, B, R, B, B};
    auto g = ColoredDigraph::from_edge_list(edges, colors);
    const auto in = oracle::brute_indegree(g);
    const auto out = oracle::brute_outdegree(g);
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        EXPECT_EQ(g.indegree(v), in[v]) << v;
        EXPECT_EQ(g.outdegree(v), out[v]) << v;
        EXPECT_EQ(g.total_degree(v), in[v] + out[v]) << v;
    }
}

TEST(Graph, EmptyEdgeListRejected) {
    const std::vector<Edge> edges;
    const std::vector<Color> colors{R};
    try {
        ColoredDigraph::from_edge_list(edges, colors);
        FAIL();
    } catch (const DataError& e) {
        EXPECT_STREQ(e.what(), "empty graph");
    }
}

TEST(Graph, MissingColorRejected) {
    const std::vector<Edge> edges{{0, 3}};
    const std::vector<Color> colors{R, B};
    EXPECT_THROW(ColoredDigraph::from_edge_list(edges, colors), DataError);
}

TEST(Graph, DegreeConservationOnRandomGraphs) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = oracle::random_graph(3 + seed % 10, 0.3, seed);
        std::size_t in = 0, out = 0;
        for (NodeId v = 0; v < g.num_nodes(); ++v) {
            in += g.indegree(v);
            out += g.outdegree(v);
        }
        EXPECT_EQ(in, g.num_edges());
        EXPECT_EQ(out, g.num_edges());
    }
}

TEST(Graph, CsrKeepsInputOrder) {
    ColoredDigraph g({R, B, B}, {{0, 2}, {0, 1}, {1, 2}, {0, 2}});
    const auto out0 = g.out_neighbors(0);
    EXPECT_EQ(std::vector<NodeId>(out0.begin(), out0.end()), (std::vector<NodeId>{2, 1, 2}));
    const auto in2 = g.in_neighbors(2);
    EXPECT_EQ(std::vector<NodeId>(in2.begin(), in2.end()), (std::vector<NodeId>{0, 1, 0}));
}

TEST(MinorityFraction, Counts) {
    ColoredDigraph all_red({R, R, R, R}, {{0, 1}});
    EXPECT_DOUBLE_EQ(minority_fraction(all_red), 1.0);
    std::vector<Color> colors(10, B);
    colors[2] = colors[5] = colors[7] = R;
    ColoredDigraph g(colors, {{0, 1}});
    EXPECT_DOUBLE_EQ(minority_fraction(g), 0.3);
}

TEST(MinorityFraction, BpamSampleNearR) {
    BpamParams p;
    const auto s = generate_bpam(p, 11);
    EXPECT_NEAR(minority_fraction(s.graph), 0.3, 0.05);
}

TEST(Hri, NoCrossEdgesIsZero) {
    ColoredDigraph g({R, R, B, B}, {{0, 1}, {2, 3}});
    EXPECT_DOUBLE_EQ(hri(g), 0.0);
}

TEST(Hri, BalancedAllCrossIsTwo) {
    ColoredDigraph g({R, B, R, B}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    EXPECT_DOUBLE_EQ(hri(g), 2.0);
}

TEST(Hri, SingleColorUndefined) {
    ColoredDigraph g({B, B}, {{0, 1}});
    try {
        hri(g);
        FAIL();
    } catch (const DataError& e) {
        EXPECT_NE(std::string(e.what()).find("HRI undefined"), std::string::npos);
    }
}

TEST(Hri, InvariantUnderEdgeDuplication) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = oracle::random_graph(9, 0.3, seed);
        std::vector<Edge> doubled(g.edges().begin(), g.edges().end());
        doubled.insert(doubled.end(), g.edges().begin(), g.edges().end());
        if (g.count(R) == 0 || g.count(B) == 0) {
            continue;
        }
        ColoredDigraph g2(std::vector<Color>(g.colors().begin(), g.colors().end()), doubled);
        EXPECT_DOUBLE_EQ(hri(g), hri(g2));
    }
}

TEST(Ccdf, StarCentre) {
    const auto c = ccdf_by_color(star4(), DegreeKind::Total);
    ASSERT_GE(c.red.size(), 5u);
    EXPECT_DOUBLE_EQ(c.red.value[4], 1.0);
    EXPECT_DOUBLE_EQ(c.blue.value[1], 1.0);
    EXPECT_DOUBLE_EQ(c.blue.value[2], 0.0);
}

TEST(Ccdf, MatchesExhaustiveTabulation) {
    ColoredDigraph g({R, B, B, R, B, R}, {{0, 1}, {1, 2}, {2, 1}, {3, 1}, {4, 1}, {5, 0}, {5, 3}, {2, 0}, {1, 0}});
    for (DegreeKind kind : {DegreeKind::In, DegreeKind::Out, DegreeKind::Total}) {
        const auto c = ccdf_by_color(g, kind);
        for (Color col : {R, B}) {
            std::size_t nodes = 0;
            for (NodeId v = 0; v < g.num_nodes(); ++v) {
                nodes += g.color(v) == col;
            }
            for (std::size_t k = 0; k < c[col].size(); ++k) {
                std::size_t at_least = 0;
                for (NodeId v = 0; v < g.num_nodes(); ++v) {
                    at_least += g.color(v) == col && g.degree(v, kind) >= k;
                }
                EXPECT_DOUBLE_EQ(c[col].value[k], static_cast<double>(at_least) / static_cast<double>(nodes))
                    << "k=" << k;
            }
        }
    }
}

TEST(Ccdf, MonotoneFromOne) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = oracle::random_graph(10, 0.25, seed);
        const auto c = ccdf_by_color(g, DegreeKind::Total);
        for (Color col : {R, B}) {
            if (g.count(col) == 0) {
                continue;
            }
            EXPECT_DOUBLE_EQ(c[col].value[0], 1.0);
            for (std::size_t k = 1; k < c[col].size(); ++k) {
                EXPECT_LE(c[col].value[k], c[col].value[k - 1]);
            }
        }
    }
}

TEST(Ccdf, AverageAndCutoff) {
    const std::vector<Ccdf> curves{Ccdf{{1.0, 0.5}}, Ccdf{{1.0, 1.0, 0.5}}};
    const Ccdf avg = average_ccdf(curves);
    EXPECT_EQ(avg.value, (std::vector<double>{1.0, 0.75, 0.25}));
    EXPECT_EQ(tail_cutoff(avg, 20.0, 10.0), 1u);
    EXPECT_EQ(tail_cutoff(avg, 40.0, 10.0), 2u);
}

TEST(TailFit, ExactPowerLaw) {
    Ccdf c;
    c.value.assign(1001, 0.0);
    for (std::size_t k = 1; k <= 1000; ++k) {
        c.value[k] = std::pow(static_cast<double>(k), -2.0);
    }
    const auto fit = tail_exponent_fit(c, 10, 1000);
    EXPECT_NEAR(fit.beta, 3.0, 0.01);
    EXPECT_NEAR(fit.slope, -2.0, 1e-9);
    EXPECT_EQ(fit.points, 991u);
}

TEST(TailFit, DegenerateInputsRejected) {
    Ccdf flat{std::vector<double>(50, 0.5)};
    EXPECT_DOUBLE_EQ(tail_exponent_fit(flat, 5).beta, 1.0);
    EXPECT_THROW(tail_exponent_fit(flat, 60), std::invalid_argument);
    Ccdf short_tail{{1.0, 0.5, 0.25, 0.0, 0.0}};
    EXPECT_THROW(tail_exponent_fit(short_tail, 2), std::invalid_argument);
}

TEST(TailFit, BpamBlueTailHeavierThanRed) {
    // averaged CCDFs over 100 replicas at r = 0.3
    for (double rho : {0.3, 0.5}) {
        BpamParams p;
        p.homophily = rho;
        std::vector<Ccdf> red, blue;
        double nr = 0, nb = 0;
        for (std::uint64_t k = 0; k < 100; ++k) {
            const auto s = generate_bpam(p, replica_seed(500, k));
            const auto c = ccdf_by_color(s.graph, DegreeKind::Total);
            red.push_back(c.red);
            blue.push_back(c.blue);
            nr += static_cast<double>(s.stats.red_nodes) / 100.0;
            nb += static_cast<double>(s.stats.blue_nodes) / 100.0;
        }
        const Ccdf r = average_ccdf(red), b = average_ccdf(blue);
        const auto fit_r = tail_exponent_fit(r, 2 * p.outdeg, tail_cutoff(r, nr));
        const auto fit_b = tail_exponent_fit(b, 2 * p.outdeg, tail_cutoff(b, nb));
        EXPECT_LT(fit_b.beta, fit_r.beta) << "rho=" << rho;
        // upper tail of B above R
        for (std::size_t k = 3 * p.outdeg; k < std::min(r.size(), b.size()) && k <= 40; ++k) {
            EXPECT_GT(b.value[k], r.value[k]) << "rho=" << rho << " k=" << k;
        }
    }
}
