#ifndef FAIRANK_RANKERS_HPP
#define FAIRANK_RANKERS_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fairank/errors.hpp"
#include "fairank/graph.hpp"
#include "fairank/linalg.hpp"
#include "fairank/ranking.hpp"
#include "fairank/rng.hpp"

namespace fairank {

// Every ranker is a pure function of the graph. Scores index by NodeId and
// orders follow rank_order().

inline RankingResult degree_rank(const ColoredDigraph& g, DegreeKind which = DegreeKind::In,
                                 std::optional<std::uint64_t> tie_seed = std::nullopt) {
    std::vector<double> scores(g.num_nodes());
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        scores[v] = static_cast<double>(g.degree(v, which));
    }
    return make_result(which == DegreeKind::Total ? "degree-total" : "degree", std::move(scores), tie_seed);
}

/**
 * PageRank by power iteration of x <- eta P x + (1 - eta)/N, where P is
 * column stochastic over out-links and the mass sitting on dangling nodes
 * is spread uniformly. Scores sum to 1.
 */
inline RankingResult pagerank(const ColoredDigraph& g, double eta = 0.85, IterationControl ctrl = {},
                              std::optional<std::uint64_t> tie_seed = std::nullopt) {
    ctrl.validate();
    if (!(eta >= 0.0 && eta < 1.0)) {
        throw std::invalid_argument("PageRank damping must lie in [0, 1)");
    }
    const std::size_t n = g.num_nodes();
    if (n == 0) {
        throw DataError("PageRank on an empty graph");
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    std::vector<double> inv_out(n, 0.0);
    for (NodeId v = 0; v < n; ++v) {
        if (g.outdegree(v) > 0) {
            inv_out[v] = 1.0 / static_cast<double>(g.outdegree(v));
        }
    }

    std::vector<double> x(n, inv_n), next(n), flow(n);
    RankingResult res;
    res.converged = false;
    for (std::size_t it = 1; it <= ctrl.max_iter; ++it) {
        double dangling = 0.0;
        for (NodeId v = 0; v < n; ++v) {
            flow[v] = x[v] * inv_out[v];
            if (g.outdegree(v) == 0) {
                dangling += x[v];
            }
        }
        const double base = (eta * dangling + (1.0 - eta)) * inv_n;
        double total = 0.0;
        for (NodeId v = 0; v < n; ++v) {
            double s = 0.0;
            for (NodeId w : g.in_neighbors(v)) {
                s += flow[w];
            }
            next[v] = eta * s + base;
            total += next[v];
        }
        for (double& y : next) {
            y /= total;
        }
        res.residual = linalg::l1_distance(next, x);
        res.iterations = it;
        x.swap(next);
        if (res.residual < ctrl.tol) {
            res.converged = true;
            break;
        }
    }
    res.algorithm = "pagerank";
    res.scores = std::move(x);
    res.order = rank_order(res.scores, tie_seed);
    return res;
}

struct HitsResult {
    RankingResult authorities;
    RankingResult hubs;
    double lambda1 = 0.0;          ///< leading eigenvalue of A^T A
    double lambda2_estimate = 0.0; ///< Rayleigh estimate of the second eigenvalue
};

inline constexpr double kEigengapTolerance = 1e-6;

namespace detail {

inline void normalize_l2(std::vector<double>& v) {
    const double nrm = linalg::norm2(v);
    if (nrm > 0.0) {
        for (double& x : v) {
            x /= nrm;
        }
    }
}

// Deflated power iteration on A^T A against the converged authority vector.
// The Rayleigh quotient approaches the second eigenvalue from below, so it
// cannot report a gap that is not there.
inline double second_eigenvalue_estimate(const ColoredDigraph& g, const std::vector<double>& a,
                                         std::size_t iterations = 200) {
    const std::size_t n = g.num_nodes();
    if (n < 2) {
        return 0.0;
    }
    Rng rng(0x5eed5eed5eedULL);
    std::vector<double> x(n), y(n), scratch(n);
    linalg::fill_random(x, rng);
    auto deflate = [&](std::vector<double>& v) {
        const double proj = linalg::dot(a, v);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] -= proj * a[i];
        }
    };
    deflate(x);
    normalize_l2(x);
    double estimate = 0.0;
    for (std::size_t it = 0; it < iterations; ++it) {
        linalg::multiply_gram(g, x, y, scratch);
        deflate(y);
        const double rq = linalg::dot(x, y);
        const double nrm = linalg::norm2(y);
        if (nrm == 0.0) {
            return std::max(estimate, rq);
        }
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = y[i] / nrm;
        }
        if (std::abs(rq - estimate) <= 1e-14 * std::abs(rq)) {
            return rq;
        }
        estimate = rq;
    }
    return estimate;
}

} // namespace detail

/**
 * Kleinberg's hubs and authorities. Starts from h = 1 and alternates
 * a = A^T h, h = A a with L2 normalization after each half step, so the
 * authority vector converges to the principal eigenvector of A^T A.
 * A leading eigenvalue that is numerically non-simple sets `degenerate`.
 */
inline HitsResult hits(const ColoredDigraph& g, IterationControl ctrl = {},
                       std::optional<std::uint64_t> tie_seed = std::nullopt) {
    ctrl.validate();
    if (g.num_edges() == 0) {
        throw DataError("HITS undefined on a graph without edges");
    }
    const std::size_t n = g.num_nodes();
    std::vector<double> a(n, 0.0), h(n, 1.0), a_next(n), h_next(n);

    HitsResult out;
    RankingResult& auth = out.authorities;
    auth.converged = false;
    for (std::size_t it = 1; it <= ctrl.max_iter; ++it) {
        linalg::multiply_transpose(g, h, a_next);
        detail::normalize_l2(a_next);
        linalg::multiply(g, a_next, h_next);
        detail::normalize_l2(h_next);
        auth.residual = std::max(linalg::l1_distance(a_next, a), it == 1 ? 0.0 : linalg::l1_distance(h_next, h));
        auth.iterations = it;
        a.swap(a_next);
        h.swap(h_next);
        if (it > 1 && auth.residual < ctrl.tol) {
            auth.converged = true;
            break;
        }
    }

    std::vector<double> ah(n);
    linalg::multiply(g, a, ah);
    out.lambda1 = linalg::dot(ah, ah);
    out.lambda2_estimate = detail::second_eigenvalue_estimate(g, a);
    auth.degenerate = out.lambda2_estimate >= out.lambda1 * (1.0 - kEigengapTolerance);
    if (auth.degenerate) {
        auth.warnings.push_back("leading eigenvalue of A^T A is not simple; authorities depend on the start vector");
    }

    auth.algorithm = "hits";
    auth.scores = std::move(a);
    auth.order = rank_order(auth.scores, tie_seed);

    RankingResult& hub = out.hubs;
    hub.algorithm = "hits-hub";
    hub.iterations = auth.iterations;
    hub.converged = auth.converged;
    hub.residual = auth.residual;
    hub.degenerate = auth.degenerate;
    hub.scores = std::move(h);
    hub.order = rank_order(hub.scores, tie_seed);
    return out;
}

/**
 * Unnormalized HITS authority iterates a(1..t_max) with h(0) = 1, so
 * a(1) = indegree and a(t+1) = A^T A a(t). Vectors are rescaled by exact
 * powers of two when they grow large; value() undoes the scaling.
 */
struct HitsTrace {
    std::vector<std::vector<double>> vectors;
    std::vector<int> exponents; ///< a(t) = vectors[t-1] * 2^exponents[t-1]

    double value(std::size_t t, NodeId v) const { return std::ldexp(vectors.at(t - 1)[v], exponents.at(t - 1)); }
    std::size_t steps() const noexcept { return vectors.size(); }
};

inline HitsTrace hits_trace(const ColoredDigraph& g, std::size_t t_max) {
    if (t_max < 1) {
        throw std::invalid_argument("hits_trace needs t_max >= 1");
    }
    const std::size_t n = g.num_nodes();
    HitsTrace trace;
    std::vector<double> a(n);
    for (NodeId v = 0; v < n; ++v) {
        a[v] = static_cast<double>(g.indegree(v));
    }
    trace.vectors.push_back(a);
    trace.exponents.push_back(0);
    std::vector<double> scratch(n), next(n);
    for (std::size_t t = 2; t <= t_max; ++t) {
        linalg::multiply_gram(g, trace.vectors.back(), next, scratch);
        int exponent = trace.exponents.back();
        double peak = 0.0;
        for (double x : next) {
            peak = std::max(peak, x);
        }
        if (peak > 0x1.0p500) {
            int e;
            std::frexp(peak, &e);
            for (double& x : next) {
                x = std::ldexp(x, -e);
            }
            exponent += e;
        }
        trace.vectors.push_back(next);
        trace.exponents.push_back(exponent);
    }
    return trace;
}

/**
 * Randomized HITS with restart probability eps:
 *   a = eps 1 + (1 - eps) A_row^T h,   h = eps 1 + (1 - eps) A_col a,
 * A_row row-stochastic and A_col column-stochastic. An empty row or column
 * is replaced by the uniform distribution. Scores are left unnormalized
 * (they sum to N at the fixed point); the residual uses sum-normalized
 * iterates.
 */
inline HitsResult randomized_hits(const ColoredDigraph& g, double eps = 0.15, IterationControl ctrl = {},
                                  std::optional<std::uint64_t> tie_seed = std::nullopt) {
    ctrl.validate();
    if (!(eps > 0.0 && eps <= 1.0)) {
        throw std::invalid_argument("randomized HITS restart must lie in (0, 1]");
    }
    const std::size_t n = g.num_nodes();
    if (n == 0) {
        throw DataError("randomized HITS on an empty graph");
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    std::vector<double> inv_out(n, 0.0), inv_in(n, 0.0);
    for (NodeId v = 0; v < n; ++v) {
        if (g.outdegree(v) > 0) {
            inv_out[v] = 1.0 / static_cast<double>(g.outdegree(v));
        }
        if (g.indegree(v) > 0) {
            inv_in[v] = 1.0 / static_cast<double>(g.indegree(v));
        }
    }
    auto l1_normalized_distance = [](const std::vector<double>& x, const std::vector<double>& y) {
        double sx = 0, sy = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            sx += x[i];
            sy += y[i];
        }
        double d = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            d += std::abs((sx > 0 ? x[i] / sx : 0.0) - (sy > 0 ? y[i] / sy : 0.0));
        }
        return d;
    };

    std::vector<double> a(n, 0.0), h(n, 1.0), a_next(n), h_next(n), flow(n);
    HitsResult out;
    RankingResult& auth = out.authorities;
    auth.converged = false;
    for (std::size_t it = 1; it <= ctrl.max_iter; ++it) {
        double stranded = 0.0;
        for (NodeId w = 0; w < n; ++w) {
            flow[w] = h[w] * inv_out[w];
            if (g.outdegree(w) == 0) {
                stranded += h[w];
            }
        }
        for (NodeId v = 0; v < n; ++v) {
            double s = 0.0;
            for (NodeId w : g.in_neighbors(v)) {
                s += flow[w];
            }
            a_next[v] = eps + (1.0 - eps) * (s + stranded * inv_n);
        }
        stranded = 0.0;
        for (NodeId v = 0; v < n; ++v) {
            flow[v] = a_next[v] * inv_in[v];
            if (g.indegree(v) == 0) {
                stranded += a_next[v];
            }
        }
        for (NodeId w = 0; w < n; ++w) {
            double s = 0.0;
            for (NodeId v : g.out_neighbors(w)) {
                s += flow[v];
            }
            h_next[w] = eps + (1.0 - eps) * (s + stranded * inv_n);
        }
        auth.residual = std::max(l1_normalized_distance(a_next, a), l1_normalized_distance(h_next, h));
        auth.iterations = it;
        a.swap(a_next);
        h.swap(h_next);
        if (auth.residual < ctrl.tol) {
            auth.converged = true;
            break;
        }
    }
    auth.algorithm = "rhits";
    auth.scores = std::move(a);
    auth.order = rank_order(auth.scores, tie_seed);
    out.hubs.algorithm = "rhits-hub";
    out.hubs.iterations = auth.iterations;
    out.hubs.converged = auth.converged;
    out.hubs.residual = auth.residual;
    out.hubs.scores = std::move(h);
    out.hubs.order = rank_order(out.hubs.scores, tie_seed);
    return out;
}

enum class SubspaceWeight { Unit, LambdaSquared };

struct SubspaceResult {
    RankingResult ranking;
    std::vector<double> eigenvalues; ///< top-k Ritz values of A^T A, descending
};

/**
 * Subspace HITS: score(j) = sum_{i<k} f(lambda_i) v_i(j)^2 over the top-k
 * eigenpairs of A^T A, with f = 1 or f = lambda^2.
 *
 * Eigenpairs come from block subspace iteration (block k + 2, Gram-Schmidt
 * every step, Rayleigh-Ritz on the block). Convergence is declared when the
 * sine of the largest principal angle between successive top-k Ritz
 * subspaces drops below ctrl.tol.
 */
inline SubspaceResult subspace_hits(const ColoredDigraph& g, std::size_t k, SubspaceWeight weight,
                                    IterationControl ctrl = {},
                                    std::optional<std::uint64_t> tie_seed = std::nullopt) {
    ctrl.validate();
    const std::size_t n = g.num_nodes();
    if (k < 1 || k > n) {
        throw std::invalid_argument("subspace HITS needs 1 <= k <= number of nodes");
    }
    const std::size_t p = std::min(k + 2, n);
    Rng rng(0x9e3779b97f4a7c15ULL);

    linalg::Block basis(n, p), image(n, p), ritz(n, p), ritz_image(n, p), previous;
    for (std::size_t j = 0; j < p; ++j) {
        linalg::fill_random(basis.col(j), rng);
    }
    linalg::orthonormalize(basis, rng);

    std::vector<double> scratch(n), theta;
    SubspaceResult out;
    RankingResult& res = out.ranking;
    res.converged = false;
    for (std::size_t it = 1; it <= ctrl.max_iter; ++it) {
        for (std::size_t j = 0; j < p; ++j) {
            linalg::multiply_gram(g, basis.col(j), image.col(j), scratch);
        }
        std::vector<double> projected(p * p);
        for (std::size_t i = 0; i < p; ++i) {
            for (std::size_t j = 0; j < p; ++j) {
                projected[i * p + j] = linalg::dot(basis.col(i), image.col(j));
            }
        }
        for (std::size_t i = 0; i < p; ++i) {
            for (std::size_t j = i + 1; j < p; ++j) {
                const double s = 0.5 * (projected[i * p + j] + projected[j * p + i]);
                projected[i * p + j] = projected[j * p + i] = s;
            }
        }
        auto eig = linalg::jacobi_eigen(std::move(projected), p);
        theta = eig.values;
        std::fill(ritz.data.begin(), ritz.data.end(), 0.0);
        std::fill(ritz_image.data.begin(), ritz_image.data.end(), 0.0);
        for (std::size_t j = 0; j < p; ++j) {
            for (std::size_t i = 0; i < p; ++i) {
                const double q = eig.vectors(i, j);
                auto src = basis.col(i);
                auto src_img = image.col(i);
                auto dst = ritz.col(j);
                auto dst_img = ritz_image.col(j);
                for (std::size_t r = 0; r < n; ++r) {
                    dst[r] += q * src[r];
                    dst_img[r] += q * src_img[r];
                }
            }
        }

        if (it > 1) {
            double angle = 0.0;
            std::vector<double> resid(n);
            for (std::size_t j = 0; j < k; ++j) {
                auto xj = ritz.col(j);
                std::copy(xj.begin(), xj.end(), resid.begin());
                for (std::size_t i = 0; i < k; ++i) {
                    auto pi = previous.col(i);
                    const double c = linalg::dot(pi, xj);
                    for (std::size_t r = 0; r < n; ++r) {
                        resid[r] -= c * pi[r];
                    }
                }
                angle = std::max(angle, linalg::norm2(resid));
            }
            res.residual = angle;
        }
        res.iterations = it;
        if (it > 1 && res.residual < ctrl.tol) {
            res.converged = true;
            break;
        }
        previous = ritz;
        basis = ritz_image;
        linalg::orthonormalize(basis, rng);
    }

    std::vector<double> scores(n, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
        const double lambda = std::max(theta[i], 0.0);
        const double f = weight == SubspaceWeight::Unit ? 1.0 : lambda * lambda;
        auto vi = ritz.col(i);
        for (std::size_t j = 0; j < n; ++j) {
            scores[j] += f * vi[j] * vi[j];
        }
    }
    out.eigenvalues.assign(theta.begin(), theta.begin() + static_cast<std::ptrdiff_t>(k));
    const double top = std::max(theta.front(), 0.0);
    if (theta[k - 1] <= 1e-12 * top) {
        res.degenerate = true;
        res.warnings.push_back("k exceeds the numeric rank of A^T A; trailing eigenvectors are arbitrary");
    }
    res.algorithm = weight == SubspaceWeight::Unit ? "subspace" : "subspace-lambda2";
    res.scores = std::move(scores);
    res.order = rank_order(res.scores, tie_seed);
    return out;
}

} // namespace fairank

#endif // FAIRANK_RANKERS_HPP
