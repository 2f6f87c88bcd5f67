#ifndef FAIRANK_SVG_HPP
#define FAIRANK_SVG_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "fairank/fairness.hpp"

namespace fairank {

namespace detail {

inline std::string svg_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

} // namespace detail

/// Minority share against log x for each curve, with the baseline dashed.
inline void write_curve_svg(std::ostream& out, const CurveTable& table, const std::string& title = {}) {
    constexpr double width = 640, height = 400, left = 60, right = 130, top = 30, bottom = 50;
    constexpr const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    if (table.empty() || table.front().second.grid.empty()) {
        throw std::invalid_argument("nothing to plot");
    }
    const auto& grid = table.front().second.grid;
    const double lo = std::log10(grid.front());
    const double hi = std::max(std::log10(grid.back()), lo + 1e-9);
    const double plot_w = width - left - right, plot_h = height - top - bottom;
    auto px = [&](double x) { return left + (std::log10(x) - lo) / (hi - lo) * plot_w; };
    auto py = [&](double y) { return top + (1.0 - std::clamp(y, 0.0, 1.0)) * plot_h; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w << "\" height=\"" << plot_h
        << "\" fill=\"none\" stroke=\"#444\"/>\n";
    if (!title.empty()) {
        out << "<text x=\"" << left << "\" y=\"20\">" << title << "</text>\n";
    }
    for (int d = static_cast<int>(std::ceil(lo - 1e-9)); d <= static_cast<int>(std::floor(hi + 1e-9)); ++d) {
        const double x = px(std::pow(10.0, d));
        out << "<line x1=\"" << detail::svg_num(x) << "\" y1=\"" << top + plot_h << "\" x2=\"" << detail::svg_num(x)
            << "\" y2=\"" << top + plot_h + 5 << "\" stroke=\"#444\"/>\n";
        out << "<text x=\"" << detail::svg_num(x) << "\" y=\"" << top + plot_h + 18
            << "\" text-anchor=\"middle\">1e" << d << "</text>\n";
    }
    for (int i = 0; i <= 4; ++i) {
        const double y = py(i / 4.0);
        out << "<text x=\"" << left - 6 << "\" y=\"" << detail::svg_num(y + 4) << "\" text-anchor=\"end\">"
            << format_double(i / 4.0) << "</text>\n";
    }
    out << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 10
        << "\" text-anchor=\"middle\">top fraction x</text>\n";

    const double base = table.front().second.baseline;
    out << "<line x1=\"" << left << "\" y1=\"" << detail::svg_num(py(base)) << "\" x2=\"" << left + plot_w
        << "\" y2=\"" << detail::svg_num(py(base)) << "\" stroke=\"#888\" stroke-dasharray=\"6,4\"/>\n";

    std::size_t i = 0;
    for (const auto& [algo, curve] : table) {
        const char* colour = palette[i % std::size(palette)];
        out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t j = 0; j < curve.grid.size(); ++j) {
            out << (j ? " " : "") << detail::svg_num(px(curve.grid[j])) << ',' << detail::svg_num(py(curve.share[j]));
        }
        out << "\"/>\n";
        const double ly = top + 14 + 18.0 * static_cast<double>(i);
        out << "<line x1=\"" << left + plot_w + 10 << "\" y1=\"" << ly << "\" x2=\"" << left + plot_w + 30
            << "\" y2=\"" << ly << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << left + plot_w + 35 << "\" y=\"" << ly + 4 << "\">" << algo << "</text>\n";
        ++i;
    }
    out << "</svg>\n";
}

} // namespace fairank

#endif // FAIRANK_SVG_HPP
