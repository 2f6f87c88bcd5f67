#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <sstream>
#include <string>

#include "fairank/bpam.hpp"
#include "fairank/io.hpp"

using namespace fairank;

namespace {

LabeledGraph parse(const std::string& edges, const std::string& colors) {
    std::istringstream e(edges), c(colors);
    return build_labeled_graph(read_edge_list(e), read_color_file(c));
}

std::string data_error(const std::string& edges, const std::string& colors) {
    try {
        parse(edges, colors);
    } catch (const DataError& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST(Io, ParsesLabelsCommentsAndWhitespace) {
    const auto lg = parse("# header\nalice\tbob\n\nbob carol  # trailing\n", "carol R\nbob B\nalice B\n");
    EXPECT_EQ(lg.labels, (std::vector<std::string>{"carol", "bob", "alice"}));
    ASSERT_EQ(lg.graph.num_edges(), 2u);
    EXPECT_EQ(lg.graph.edges()[0], (Edge{2, 1}));
    EXPECT_EQ(lg.graph.edges()[1], (Edge{1, 0}));
    EXPECT_EQ(lg.graph.color(0), Color::Red);
}

TEST(Io, IsolatedColoredNodesKept) {
    const auto lg = parse("a b\n", "a R\nb B\nc B\n");
    EXPECT_EQ(lg.graph.num_nodes(), 3u);
    EXPECT_EQ(lg.graph.total_degree(2), 0u);
}

TEST(Io, ErrorsCarryLineNumbers) {
    EXPECT_EQ(data_error("a b\na b c\n", "a R\nb B\n"), "edges:2: expected 'src<TAB>dst'");
    EXPECT_EQ(data_error("a b\n", "a R\n\nb G\n"), "colors:3: expected 'node<TAB>R|B'");
}

TEST(Io, MissingOrDuplicateColor) {
    EXPECT_EQ(data_error("a b\n", "a R\n"), "missing color for node b");
    EXPECT_EQ(data_error("a b\n", "a R\nb B\na B\n"), "duplicate color entry for node a");
    EXPECT_EQ(data_error("# nothing\n", "a R\n"), "empty graph");
}

TEST(Io, MissingFileIsDataError) { EXPECT_THROW(load_graph("/nonexistent/e", "/nonexistent/c"), DataError); }

TEST(Io, RoundTripPreservesGraph) {
    BpamParams p;
    p.nodes = 60;
    const auto g = generate_bpam(p, 3).graph;
    std::ostringstream e, c;
    write_edge_list(e, g);
    write_color_file(c, g);
    const auto lg = parse(e.str(), c.str());
    ASSERT_EQ(lg.graph.num_nodes(), g.num_nodes());
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        EXPECT_EQ(lg.labels[v], std::to_string(v));
        EXPECT_EQ(lg.graph.color(v), g.color(v));
    }
    auto sorted = [](std::span<const Edge> es) {
        std::vector<std::pair<NodeId, NodeId>> v;
        for (const Edge& x : es) {
            v.emplace_back(x.src, x.dst);
        }
        std::sort(v.begin(), v.end());
        return v;
    };
    EXPECT_EQ(sorted(lg.graph.edges()), sorted(g.edges()));
}

TEST(Io, WritersUseTabs) {
    ColoredDigraph g({Color::Red, Color::Blue}, {{0, 1}});
    std::ostringstream e, c;
    write_edge_list(e, g, {"x", "y"});
    write_color_file(c, g, {"x", "y"});
    EXPECT_EQ(e.str(), "x\ty\n");
    EXPECT_EQ(c.str(), "x\tR\ny\tB\n");
}

TEST(Io, CcdfCsvSchema) {
    ColoredDigraph g({Color::Red, Color::Blue}, {{0, 1}});
    std::ostringstream out;
    write_ccdf_csv(out, ccdf_by_color(g, DegreeKind::In));
    EXPECT_EQ(out.str(), "color,k,ccdf\nR,0,1\nR,1,0\nB,0,1\nB,1,1\n");
}

TEST(Io, FormatDoubleRoundTrips) {
    for (double x : {0.1, 1.0 / 3.0, 1e-300, 123456789.125, 0.0, -2.5}) {
        EXPECT_EQ(std::stod(format_double(x)), x);
    }
    EXPECT_EQ(format_double(0.5), "0.5");
    EXPECT_EQ(format_double(3.0), "3");
}
