#ifndef FAIRANK_FAIRNESS_HPP
#define FAIRANK_FAIRNESS_HPP

#include <algorithm>
#include <cmath>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fairank/graph.hpp"
#include "fairank/io.hpp"

namespace fairank {

/// Minority share among the top ceil(x n) ranks for each grid fraction x.
struct FairnessCurve {
    std::vector<double> grid;
    std::vector<double> share;
    double baseline = 0.0; ///< population minority fraction

    double share_at(double x) const;
};

/// Number of ranks covered by the top fraction x of n nodes (at least one).
inline std::size_t top_count(double x, std::size_t n) {
    // The slack absorbs representation error in products such as 0.1 * 1000.
    auto c = static_cast<std::size_t>(std::ceil(x * static_cast<double>(n) - 1e-9));
    return std::clamp<std::size_t>(c, 1, n);
}

/// `points` fractions spaced evenly in log scale from 1/n to 1 (both included).
inline std::vector<double> log_grid(std::size_t n, std::size_t points = 40) {
    if (n == 0 || points < 2) {
        throw std::invalid_argument("log grid needs n >= 1 and at least 2 points");
    }
    std::vector<double> grid(points);
    const double lo = std::log(1.0 / static_cast<double>(n));
    for (std::size_t i = 0; i < points; ++i) {
        grid[i] = std::exp(lo * (1.0 - static_cast<double>(i) / static_cast<double>(points - 1)));
    }
    grid.front() = 1.0 / static_cast<double>(n);
    grid.back() = 1.0;
    return grid;
}

inline FairnessCurve minority_share_curve(std::span<const NodeId> order, std::span<const Color> colors,
                                          std::span<const double> grid) {
    if (order.empty()) {
        throw std::invalid_argument("minority share curve of an empty ranking");
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0 && grid[i] <= 1.0) || (i > 0 && grid[i] < grid[i - 1])) {
            throw std::invalid_argument("grid must be sorted fractions in (0, 1]");
        }
    }
    const std::size_t n = order.size();
    // prefix[i] = red count among the first i ranks
    std::vector<std::size_t> prefix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        prefix[i + 1] = prefix[i] + (colors[order[i]] == Color::Red ? 1 : 0);
    }
    FairnessCurve curve;
    curve.grid.assign(grid.begin(), grid.end());
    curve.baseline = static_cast<double>(prefix[n]) / static_cast<double>(n);
    for (double x : grid) {
        const std::size_t top = top_count(x, n);
        curve.share.push_back(static_cast<double>(prefix[top]) / static_cast<double>(top));
    }
    return curve;
}

namespace detail {

inline std::size_t grid_index(const std::vector<double>& grid, double x) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (std::abs(grid[i] - x) <= 1e-12 * std::max(1.0, std::abs(x))) {
            return i;
        }
    }
    throw std::invalid_argument("x = " + format_double(x) + " is not on the curve grid");
}

} // namespace detail

inline double FairnessCurve::share_at(double x) const { return share[detail::grid_index(grid, x)]; }

/// share(x) - baseline; negative means the minority is under-represented.
inline double parity_gap(const FairnessCurve& curve, double x) { return curve.share_at(x) - curve.baseline; }

/// Pointwise mean of curves on a common grid.
inline FairnessCurve average_curves(std::span<const FairnessCurve> curves) {
    if (curves.empty()) {
        throw std::invalid_argument("no curves to average");
    }
    FairnessCurve out;
    out.grid = curves.front().grid;
    out.share.assign(out.grid.size(), 0.0);
    for (const FairnessCurve& c : curves) {
        if (c.grid != out.grid) {
            throw std::invalid_argument("cannot average curves on different grids");
        }
        for (std::size_t i = 0; i < c.share.size(); ++i) {
            out.share[i] += c.share[i];
        }
        out.baseline += c.baseline;
    }
    const auto count = static_cast<double>(curves.size());
    for (double& s : out.share) {
        s /= count;
    }
    out.baseline /= count;
    return out;
}

/// Named curves in display order.
using CurveTable = std::vector<std::pair<std::string, FairnessCurve>>;

inline const FairnessCurve& find_curve(const CurveTable& table, const std::string& name) {
    for (const auto& [algo, curve] : table) {
        if (algo == name) {
            return curve;
        }
    }
    throw std::out_of_range("no curve named " + name);
}

/// Long-format CSV `algo,x,share,baseline`; all curves must share a grid.
inline void write_curve_table(std::ostream& out, const CurveTable& table, bool header = true) {
    for (const auto& [algo, curve] : table) {
        if (curve.grid != table.front().second.grid) {
            throw std::invalid_argument("curve " + algo + " uses a different grid");
        }
    }
    if (header) {
        out << "algo,x,share,baseline\n";
    }
    for (const auto& [algo, curve] : table) {
        for (std::size_t i = 0; i < curve.grid.size(); ++i) {
            out << algo << ',' << format_double(curve.grid[i]) << ',' << format_double(curve.share[i]) << ','
                << format_double(curve.baseline) << '\n';
        }
    }
}

} // namespace fairank

#endif // FAIRANK_FAIRNESS_HPP
