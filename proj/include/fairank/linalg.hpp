#ifndef FAIRANK_LINALG_HPP
#define FAIRANK_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <vector>

#include "fairank/graph.hpp"
#include "fairank/rng.hpp"

namespace fairank::linalg {

// Sparse products with the adjacency matrix A (A[w][v] = multiplicity of w -> v).

/// y = A^T x, i.e. y[v] = sum over edges w -> v of x[w].
inline void multiply_transpose(const ColoredDigraph& g, std::span<const double> x, std::span<double> y) {
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        double s = 0.0;
        for (NodeId w : g.in_neighbors(v)) {
            s += x[w];
        }
        y[v] = s;
    }
}

/// y = A x, i.e. y[w] = sum over edges w -> v of x[v].
inline void multiply(const ColoredDigraph& g, std::span<const double> x, std::span<double> y) {
    for (NodeId w = 0; w < g.num_nodes(); ++w) {
        double s = 0.0;
        for (NodeId v : g.out_neighbors(w)) {
            s += x[v];
        }
        y[w] = s;
    }
}

/// y = A^T A x; scratch must hold num_nodes entries.
inline void multiply_gram(const ColoredDigraph& g, std::span<const double> x, std::span<double> y,
                          std::span<double> scratch) {
    multiply(g, x, scratch);
    multiply_transpose(g, scratch, y);
}

inline double dot(std::span<const double> a, std::span<const double> b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

inline double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

inline double l1_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::abs(a[i] - b[i]);
    }
    return s;
}

/// Column-major dense block of `cols` vectors of length `rows`.
struct Block {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Block() = default;
    Block(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    std::span<double> col(std::size_t j) { return {data.data() + j * rows, rows}; }
    std::span<const double> col(std::size_t j) const { return {data.data() + j * rows, rows}; }
    double& operator()(std::size_t i, std::size_t j) { return data[j * rows + i]; }
    double operator()(std::size_t i, std::size_t j) const { return data[j * rows + i]; }
};

inline void fill_random(std::span<double> v, Rng& rng) {
    for (double& x : v) {
        x = rng.uniform() - 0.5;
    }
}

/**
 * Modified Gram-Schmidt, two passes. A column that collapses (rank
 * deficiency) is replaced by a random vector and re-orthogonalized, so the
 * block always comes back with orthonormal columns. Returns the number of
 * replaced columns.
 */
inline std::size_t orthonormalize(Block& b, Rng& rng) {
    std::size_t replaced = 0;
    for (std::size_t j = 0; j < b.cols; ++j) {
        auto cj = b.col(j);
        const double original = norm2(cj);
        for (int attempt = 0;; ++attempt) {
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t i = 0; i < j; ++i) {
                    auto ci = b.col(i);
                    const double proj = dot(ci, cj);
                    for (std::size_t r = 0; r < b.rows; ++r) {
                        cj[r] -= proj * ci[r];
                    }
                }
            }
            const double nrm = norm2(cj);
            const double ref = attempt == 0 ? original : 1.0;
            if (nrm > 1e-10 * ref && nrm > 0.0) {
                for (double& x : cj) {
                    x /= nrm;
                }
                break;
            }
            if (attempt == 0) {
                ++replaced;
            }
            fill_random(cj, rng);
        }
    }
    return replaced;
}

struct SymmetricEigen {
    std::vector<double> values; ///< descending
    Block vectors;              ///< column i pairs with values[i]
};

/**
 * Cyclic Jacobi eigensolver for a small dense symmetric matrix given in
 * row-major order. Accurate to working precision; meant for Rayleigh-Ritz
 * blocks of a few dozen rows.
 */
inline SymmetricEigen jacobi_eigen(std::vector<double> m, std::size_t n) {
    Block v(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        v(i, i) = 1.0;
    }
    auto at = [&](std::size_t i, std::size_t j) -> double& { return m[i * n + j]; };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0, total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                total += at(i, j) * at(i, j);
                if (i != j) {
                    off += at(i, j) * at(i, j);
                }
            }
        }
        if (off <= 1e-30 * total || off == 0.0) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) {
                    continue;
                }
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return at(a, a) > at(b, b); });
    SymmetricEigen out;
    out.vectors = Block(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values.push_back(at(idx[j], idx[j]));
        std::copy(v.col(idx[j]).begin(), v.col(idx[j]).end(), out.vectors.col(j).begin());
    }
    return out;
}

} // namespace fairank::linalg

#endif // FAIRANK_LINALG_HPP
