#ifndef FAIRANK_IO_HPP
#define FAIRANK_IO_HPP

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fairank/errors.hpp"
#include "fairank/graph.hpp"

namespace fairank {

// Shortest round-trip decimal form; locale independent.
inline std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
            ++j;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

// Calls fn(line_number, fields) for every non-blank, non-comment line.
template <typename Fn>
void for_each_record(std::istream& in, Fn&& fn) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view(line);
        if (auto hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }
        auto fields = split_fields(view);
        if (!fields.empty()) {
            fn(line_no, fields);
        }
    }
}

inline std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open " + path);
    }
    return in;
}

} // namespace detail

/// Graph read from labelled files together with the dense-id -> label map.
struct LabeledGraph {
    ColoredDigraph graph;
    std::vector<std::string> labels;
};

using LabeledEdge = std::pair<std::string, std::string>;
using LabeledColor = std::pair<std::string, Color>;

inline std::vector<LabeledEdge> read_edge_list(std::istream& in, const std::string& name = "edges") {
    std::vector<LabeledEdge> edges;
    detail::for_each_record(in, [&](std::size_t line_no, const auto& f) {
        if (f.size() != 2) {
            throw DataError(name + ":" + std::to_string(line_no) + ": expected 'src<TAB>dst'");
        }
        edges.emplace_back(std::string(f[0]), std::string(f[1]));
    });
    return edges;
}

inline std::vector<LabeledColor> read_color_file(std::istream& in, const std::string& name = "colors") {
    std::vector<LabeledColor> colors;
    detail::for_each_record(in, [&](std::size_t line_no, const auto& f) {
        if (f.size() != 2 || (f[1] != "R" && f[1] != "B")) {
            throw DataError(name + ":" + std::to_string(line_no) + ": expected 'node<TAB>R|B'");
        }
        colors.emplace_back(std::string(f[0]), f[1] == "R" ? Color::Red : Color::Blue);
    });
    return colors;
}

/**
 * Remaps arbitrary node labels to dense ids in color-file order. Nodes that
 * only appear in the color file become isolated nodes.
 */
inline LabeledGraph build_labeled_graph(const std::vector<LabeledEdge>& edges,
                                        const std::vector<LabeledColor>& colors) {
    std::unordered_map<std::string, NodeId> index;
    std::vector<std::string> labels;
    std::vector<Color> dense_colors;
    for (const auto& [label, color] : colors) {
        auto [it, inserted] = index.emplace(label, static_cast<NodeId>(labels.size()));
        if (!inserted) {
            throw DataError("duplicate color entry for node " + label);
        }
        labels.push_back(label);
        dense_colors.push_back(color);
    }
    std::vector<Edge> dense_edges;
    dense_edges.reserve(edges.size());
    for (const auto& [src, dst] : edges) {
        auto s = index.find(src);
        auto d = index.find(dst);
        if (s == index.end() || d == index.end()) {
            throw DataError("missing color for node " + (s == index.end() ? src : dst));
        }
        dense_edges.push_back({s->second, d->second});
    }
    return {ColoredDigraph::from_edge_list(dense_edges, dense_colors), std::move(labels)};
}

inline LabeledGraph load_graph(const std::string& edge_path, const std::string& color_path) {
    auto ein = detail::open_input(edge_path);
    auto cin = detail::open_input(color_path);
    auto edges = read_edge_list(ein, edge_path);
    auto colors = read_color_file(cin, color_path);
    return build_labeled_graph(edges, colors);
}

/// Node labels default to dense ids.
inline void write_edge_list(std::ostream& out, const ColoredDigraph& g,
                            const std::vector<std::string>& labels = {}) {
    auto name = [&](NodeId v) { return labels.empty() ? std::to_string(v) : labels[v]; };
    for (const Edge& e : g.edges()) {
        out << name(e.src) << '\t' << name(e.dst) << '\n';
    }
}

inline void write_color_file(std::ostream& out, const ColoredDigraph& g,
                             const std::vector<std::string>& labels = {}) {
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        out << (labels.empty() ? std::to_string(v) : labels[v]) << '\t' << color_char(g.color(v)) << '\n';
    }
}

inline void write_ccdf_csv(std::ostream& out, const ColorCcdf& ccdf) {
    out << "color,k,ccdf\n";
    for (Color c : {Color::Red, Color::Blue}) {
        const Ccdf& cur = ccdf[c];
        for (std::size_t k = 0; k < cur.size(); ++k) {
            out << color_char(c) << ',' << k << ',' << format_double(cur.value[k]) << '\n';
        }
    }
}

} // namespace fairank

#endif // FAIRANK_IO_HPP
