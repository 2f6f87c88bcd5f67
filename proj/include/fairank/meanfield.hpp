#ifndef FAIRANK_MEANFIELD_HPP
#define FAIRANK_MEANFIELD_HPP

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "fairank/errors.hpp"
#include "fairank/graph.hpp"
#include "fairank/rankers.hpp"

namespace fairank::meanfield {

/// 2x2 matrix indexed by [from color][to color], Red = 0, Blue = 1.
struct Matrix2 {
    std::array<std::array<double, 2>, 2> m{};

    double& operator()(Color from, Color to) { return m[index_of(from)][index_of(to)]; }
    double operator()(Color from, Color to) const { return m[index_of(from)][index_of(to)]; }

    double row_sum(Color from) const { return m[index_of(from)][0] + m[index_of(from)][1]; }

    static Matrix2 identity() {
        Matrix2 out;
        out.m = {{{1.0, 0.0}, {0.0, 1.0}}};
        return out;
    }
    static Matrix2 uniform_rows(double to_red) {
        Matrix2 out;
        out.m = {{{to_red, 1.0 - to_red}, {to_red, 1.0 - to_red}}};
        return out;
    }
};

inline void check_unit_interval(double x, const char* what) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
    }
}

/**
 * Equilibrium map for alpha, the share of edge endpoints held by red nodes:
 *   A(alpha) = (r + r alpha/(alpha + rho - alpha rho)
 *                 + alpha rho (1 - r)/(alpha rho + 1 - alpha)) / 2.
 */
inline double alpha_map(double alpha, double r, double rho) {
    const double to_red = alpha + rho - alpha * rho;
    const double to_blue = alpha * rho + 1.0 - alpha;
    const double red_term = to_red > 0.0 ? r * alpha / to_red : r;
    const double blue_term = to_blue > 0.0 ? alpha * rho * (1.0 - r) / to_blue : 0.0;
    return 0.5 * (r + red_term + blue_term);
}

/// Fixed point of alpha_map by damped iteration (damping 1/2) from alpha = r.
inline double solve_alpha(double r, double rho, double tol = 1e-12) {
    check_unit_interval(r, "r");
    check_unit_interval(rho, "rho");
    if (rho == 0.0 || rho == 1.0 || r == 0.0 || r == 1.0 || r == 0.5) {
        return r;
    }
    double alpha = r;
    for (int it = 0; it < 100000; ++it) {
        if (std::abs(alpha_map(alpha, r, rho) - alpha) < tol) {
            return alpha;
        }
        alpha = 0.5 * alpha + 0.5 * alpha_map(alpha, r, rho);
    }
    throw std::runtime_error("alpha fixed point did not converge");
}

struct AttachmentProbs {
    Matrix2 out; ///< out(C, C'): an edge from a C node lands on a C' node
    Matrix2 in;  ///< in(C, C'): an edge into a C node comes from a C' node
};

/// Asymptotic attachment probabilities at a given alpha. Throws
/// std::domain_error at the 0/0 corners (rho = 0 with alpha in {0, 1}).
inline AttachmentProbs attachment_probs(double alpha, double rho, double r) {
    check_unit_interval(alpha, "alpha");
    check_unit_interval(rho, "rho");
    check_unit_interval(r, "r");
    const double to_red = alpha + rho * (1.0 - alpha);
    const double to_blue = alpha * rho + 1.0 - alpha;
    const double into_blue = r * rho / to_red + (1.0 - r) / to_blue;
    const double into_red = r / to_red + rho * (1.0 - r) / to_blue;
    if (to_red <= 0.0 || to_blue <= 0.0 || !(into_blue > 0.0) || !(into_red > 0.0)) {
        throw std::domain_error("undefined probability at alpha = " + std::to_string(alpha) +
                                ", rho = " + std::to_string(rho));
    }
    AttachmentProbs p;
    p.out(Color::Red, Color::Red) = alpha / to_red;
    p.out(Color::Red, Color::Blue) = rho * (1.0 - alpha) / to_red;
    p.out(Color::Blue, Color::Red) = rho * alpha / to_blue;
    p.out(Color::Blue, Color::Blue) = (1.0 - alpha) / to_blue;

    p.in(Color::Blue, Color::Blue) = ((1.0 - r) / to_blue) / into_blue;
    p.in(Color::Blue, Color::Red) = (rho * r / to_red) / into_blue;
    p.in(Color::Red, Color::Red) = (r / to_red) / into_red;
    p.in(Color::Red, Color::Blue) = (rho * (1.0 - r) / to_blue) / into_red;
    return p;
}

struct Exponents {
    double K_B = 0.5;
    double K_R = 0.5;
    double beta_B = 3.0;
    double beta_R = 3.0;
};

/// Growth rates K and power-law exponents beta = 1 + 1/K at a given alpha.
inline Exponents exponents_at(double alpha, double r, double rho) {
    Exponents e;
    if (rho == 0.0 || rho == 1.0) {
        return e; // both communities grow like plain preferential attachment
    }
    const double to_red = alpha + rho * (1.0 - alpha);
    const double to_blue = alpha * rho + 1.0 - alpha;
    e.K_B = 0.5 * (r * rho / to_red + (1.0 - r) / to_blue);
    e.K_R = 0.5 * (r / to_red + rho * (1.0 - r) / to_blue);
    if (e.K_B <= 0.0 || e.K_R <= 0.0) {
        throw std::domain_error("vanishing growth rate");
    }
    e.beta_B = 1.0 + 1.0 / e.K_B;
    e.beta_R = 1.0 + 1.0 / e.K_R;
    return e;
}

inline Exponents exponents(double r, double rho) { return exponents_at(solve_alpha(r, rho), r, rho); }

/// q(C, C'): a C node has an in-neighbour whose (other) out-edge lands on C'.
inline Matrix2 q_matrix(const Matrix2& p_out, const Matrix2& p_in) {
    Matrix2 q;
    for (Color c : {Color::Red, Color::Blue}) {
        for (Color c2 : {Color::Red, Color::Blue}) {
            q(c, c2) = p_in(c, Color::Blue) * p_out(Color::Blue, c2) + p_in(c, Color::Red) * p_out(Color::Red, c2);
        }
    }
    return q;
}

struct MeanFieldReport {
    double r = 0.0;
    double rho = 0.0;
    double alpha = 0.0;
    Matrix2 p_out;
    Matrix2 p_in;
    double K_B = 0.5, K_R = 0.5;
    double beta_B = 3.0, beta_R = 3.0;
    Matrix2 q;
    double F = std::numeric_limits<double>::quiet_NaN(); ///< q_RB / q_BB; NaN at rho = 0
};

/**
 * Evaluates every mean-field quantity at (r, rho). At rho = 0 the network
 * is segregated and at rho = 1 color-blind; both use their closed forms.
 */
inline MeanFieldReport mean_field_report(double r, double rho) {
    MeanFieldReport rep;
    rep.r = r;
    rep.rho = rho;
    rep.alpha = solve_alpha(r, rho);
    if (rho == 0.0) {
        rep.p_out = Matrix2::identity();
        rep.p_in = Matrix2::identity();
    } else if (rho == 1.0) {
        rep.p_out = Matrix2::uniform_rows(rep.alpha);
        rep.p_in = Matrix2::uniform_rows(r);
    } else {
        auto p = attachment_probs(rep.alpha, rho, r);
        rep.p_out = p.out;
        rep.p_in = p.in;
    }
    const Exponents e = exponents_at(rep.alpha, r, rho);
    rep.K_B = e.K_B;
    rep.K_R = e.K_R;
    rep.beta_B = e.beta_B;
    rep.beta_R = e.beta_R;
    rep.q = rho == 1.0 ? Matrix2::uniform_rows(rep.alpha) : q_matrix(rep.p_out, rep.p_in);
    if (rho == 1.0) {
        rep.F = 1.0;
    } else if (rho > 0.0) {
        rep.F = rep.q(Color::Red, Color::Blue) / rep.q(Color::Blue, Color::Blue);
    }
    return rep;
}

/**
 * Ratio of the red and blue multiplicative factors, q_RB / q_BB. The
 * size-biased moment of the blue indegrees cancels, so the ratio is the
 * same for every iteration t >= 2.
 */
inline double mf_ratio(double r, double rho) {
    if (!(rho > 0.0 && rho <= 1.0)) {
        throw std::invalid_argument("F is defined for rho in (0, 1]");
    }
    return mean_field_report(r, rho).F;
}

/// sum over color-c nodes of indeg^t divided by their total indegree.
inline double size_biased_moment(const ColoredDigraph& g, unsigned t, Color c) {
    double num = 0.0, den = 0.0;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        if (g.color(v) != c) {
            continue;
        }
        const auto d = static_cast<double>(g.indegree(v));
        num += std::pow(d, static_cast<double>(t));
        den += d;
    }
    if (den == 0.0) {
        throw DataError(std::string("no indegree in color ") + color_char(c));
    }
    return num / den;
}

struct ColorMeans {
    double red = 0.0;
    double blue = 0.0;
};

/// Per color, the mean of a(t)(v) / indeg(v) over nodes with
/// 1 <= indeg(v) <= indegree_cap. Values keep the trace's common 2^e scale.
inline ColorMeans multiplicative_factors(const ColoredDigraph& g, const HitsTrace& trace, std::size_t t,
                                         std::size_t indegree_cap = 10) {
    const auto& a = trace.vectors.at(t - 1);
    double sum[2] = {0.0, 0.0};
    std::size_t count[2] = {0, 0};
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        const std::size_t d = g.indegree(v);
        if (d >= 1 && d <= indegree_cap) {
            sum[index_of(g.color(v))] += a[v] / static_cast<double>(d);
            ++count[index_of(g.color(v))];
        }
    }
    if (count[0] == 0 || count[1] == 0) {
        throw DataError("empty degree class: a color has no node with indegree in [1, cap]");
    }
    return {sum[0] / static_cast<double>(count[0]), sum[1] / static_cast<double>(count[1])};
}

/// Empirical counterpart of F: red over blue multiplicative factor after t
/// unnormalized HITS steps, restricted to low-indegree nodes.
inline double empirical_mf_ratio(const ColoredDigraph& g, std::size_t t, std::size_t indegree_cap = 10) {
    if (t < 2) {
        throw std::invalid_argument("empirical MF ratio needs t >= 2");
    }
    const auto trace = hits_trace(g, t);
    const ColorMeans m = multiplicative_factors(g, trace, t, indegree_cap);
    return m.red / m.blue;
}

/// Mean of a(t) over each color (scale 2^e of the trace left in place).
inline ColorMeans mean_authority_by_color(const ColoredDigraph& g, const HitsTrace& trace, std::size_t t) {
    const auto& a = trace.vectors.at(t - 1);
    double sum[2] = {0.0, 0.0};
    std::size_t count[2] = {0, 0};
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        sum[index_of(g.color(v))] += a[v];
        ++count[index_of(g.color(v))];
    }
    return {count[0] ? sum[0] / static_cast<double>(count[0]) : 0.0,
            count[1] ? sum[1] / static_cast<double>(count[1]) : 0.0};
}

enum class CheckStatus { Pass, Fail, Skip };

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::Skip;
    double margin = std::numeric_limits<double>::quiet_NaN(); ///< positive = room to spare
    std::string detail;
};

inline const char* to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
    }
    return "?";
}

inline constexpr double kIdentityTolerance = 1e-12;
inline constexpr double kMonotoneStep = 1e-3;

/**
 * Checks a report against the mean-field propositions. Strict inequalities
 * apply for r in (0, 1/2) and rho in (0, 1); on the edges r = 1/2 and
 * rho in {0, 1} the same quantities must be equal. Checks whose stated
 * domain excludes (r, rho) are skipped.
 */
inline std::vector<Check> check_report(const MeanFieldReport& rep) {
    const double r = rep.r, rho = rep.rho;
    const bool in_domain = r >= 0.0 && r <= 0.5;
    const bool interior = r > 0.0 && r < 0.5 && rho > 0.0 && rho < 1.0;
    const bool edge = r == 0.5 || rho == 0.0 || rho == 1.0;
    std::vector<Check> out;

    auto verdict = [](bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; };
    auto add = [&](std::string name, CheckStatus status, double margin, std::string detail = {}) {
        out.push_back({std::move(name), status, margin, std::move(detail)});
    };
    // strict "lhs > rhs" inside, "lhs == rhs" on the edge
    auto ordered = [&](const std::string& name, double lhs, double rhs) {
        if (interior) {
            add(name, verdict(lhs > rhs), lhs - rhs, "strict");
        } else if (edge && in_domain) {
            const double dev = std::abs(lhs - rhs);
            add(name, verdict(dev <= kIdentityTolerance), -dev, "equality edge");
        } else {
            add(name, CheckStatus::Skip, std::numeric_limits<double>::quiet_NaN(), "outside stated domain");
        }
    };

    double worst = 0.0;
    for (const Matrix2* m : {&rep.p_out, &rep.p_in, &rep.q}) {
        for (Color c : {Color::Red, Color::Blue}) {
            worst = std::max(worst, std::abs(m->row_sum(c) - 1.0));
        }
    }
    add("row_sums", verdict(worst <= kIdentityTolerance), kIdentityTolerance - worst);

    const double residual = std::abs(alpha_map(rep.alpha, r, rho) - rep.alpha);
    add("alpha_fixed_point", verdict(residual < kIdentityTolerance), kIdentityTolerance - residual);
    if (in_domain) {
        add("power_inequality", verdict(rep.alpha <= r + kIdentityTolerance), r - rep.alpha, "alpha <= r");
    } else {
        add("power_inequality", CheckStatus::Skip, std::numeric_limits<double>::quiet_NaN(), "outside stated domain");
    }

    ordered("K_B_above_half", rep.K_B, 0.5);
    ordered("K_R_below_half", 0.5, rep.K_R);
    ordered("beta_R_above_3", rep.beta_R, 3.0);
    ordered("beta_B_below_3", 3.0, rep.beta_B);

    if (in_domain) {
        add("beta_B_above_2", verdict(rep.beta_B > 2.0), rep.beta_B - 2.0);
        const double gap = rep.K_R - (2.0 * rep.K_B - 1.0);
        add("KB_KR_inequality", verdict(gap > 0.0), gap, "2 K_B - 1 < K_R");
        const double qgap = rep.q(Color::Blue, Color::Blue) - rep.q(Color::Red, Color::Blue);
        add("q_BB_ge_q_RB", verdict(qgap >= -kIdentityTolerance), qgap, "MF(B) >= MF(R)");
    } else {
        for (const char* name : {"beta_B_above_2", "KB_KR_inequality", "q_BB_ge_q_RB"}) {
            add(name, CheckStatus::Skip, std::numeric_limits<double>::quiet_NaN(), "outside stated domain");
        }
    }

    if (r > 0.0 && r <= 0.5 && rho > 0.0) {
        const double f_here = rep.F;
        double margin = std::numeric_limits<double>::infinity();
        if (rho - kMonotoneStep > 0.0) {
            margin = std::min(margin, f_here - mf_ratio(r, rho - kMonotoneStep));
        }
        if (rho + kMonotoneStep <= 1.0) {
            margin = std::min(margin, mf_ratio(r, rho + kMonotoneStep) - f_here);
        }
        add("F_increasing", verdict(margin > 0.0), margin, "finite-difference scan, step 1e-3");
        if (rho == 1.0) {
            add("F_one_at_rho_one", verdict(rep.F == 1.0), -std::abs(rep.F - 1.0));
        }
    } else {
        add("F_increasing", CheckStatus::Skip, std::numeric_limits<double>::quiet_NaN(), "outside stated domain");
    }
    return out;
}

inline std::vector<Check> verify_propositions(double r, double rho) {
    return check_report(mean_field_report(r, rho));
}

inline bool all_passed(const std::vector<Check>& checks) {
    for (const Check& c : checks) {
        if (c.status == CheckStatus::Fail) {
            return false;
        }
    }
    return true;
}

} // namespace fairank::meanfield

#endif // FAIRANK_MEANFIELD_HPP
