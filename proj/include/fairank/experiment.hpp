#ifndef FAIRANK_EXPERIMENT_HPP
#define FAIRANK_EXPERIMENT_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "fairank/bpam.hpp"
#include "fairank/errors.hpp"
#include "fairank/fairness.hpp"
#include "fairank/graph.hpp"
#include "fairank/rankers.hpp"

namespace fairank {

enum class Algo { Degree, PageRank, Hits, RandomizedHits, Subspace };

inline std::string algo_name(Algo a) {
    switch (a) {
    case Algo::Degree: return "degree";
    case Algo::PageRank: return "pagerank";
    case Algo::Hits: return "hits";
    case Algo::RandomizedHits: return "rhits";
    case Algo::Subspace: return "subspace";
    }
    return "?";
}

inline Algo parse_algo(const std::string& s) {
    for (Algo a : {Algo::Degree, Algo::PageRank, Algo::Hits, Algo::RandomizedHits, Algo::Subspace}) {
        if (algo_name(a) == s) {
            return a;
        }
    }
    throw std::invalid_argument("unknown algorithm '" + s + "'");
}

struct AlgoParams {
    double eta = 0.85; ///< PageRank damping (restart 1 - eta)
    double eps = 0.15; ///< randomized HITS restart
    std::size_t k = 6;
    SubspaceWeight weight = SubspaceWeight::Unit;
    DegreeKind degree = DegreeKind::In;
    IterationControl ctrl;
    std::optional<std::uint64_t> tie_seed;
};

inline RankingResult run_algorithm(const ColoredDigraph& g, Algo algo, const AlgoParams& p) {
    switch (algo) {
    case Algo::Degree: return degree_rank(g, p.degree, p.tie_seed);
    case Algo::PageRank: return pagerank(g, p.eta, p.ctrl, p.tie_seed);
    case Algo::Hits: return hits(g, p.ctrl, p.tie_seed).authorities;
    case Algo::RandomizedHits: return randomized_hits(g, p.eps, p.ctrl, p.tie_seed).authorities;
    case Algo::Subspace: return subspace_hits(g, std::min(p.k, g.num_nodes()), p.weight, p.ctrl, p.tie_seed).ranking;
    }
    throw std::invalid_argument("unknown algorithm");
}

/**
 * Runs fn(k) for k in [0, reps) on up to `threads` workers. Each call owns
 * its slot in the output, so results do not depend on scheduling. The
 * lowest-index failure is rethrown with its replica index prepended.
 */
template <typename Fn>
auto for_each_replica(std::size_t reps, unsigned threads, Fn&& fn) {
    using Result = decltype(fn(std::size_t{0}));
    std::vector<std::optional<Result>> slots(reps);
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::optional<std::size_t> failed_at;
    std::exception_ptr failure;

    auto worker = [&] {
        for (std::size_t k = next++; k < reps; k = next++) {
            try {
                slots[k].emplace(fn(k));
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!failed_at || k < *failed_at) {
                    failed_at = k;
                    failure = std::current_exception();
                }
            }
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(reps)));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < workers; ++i) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    if (failed_at) {
        // Keep the error category so callers can still tell data from usage errors.
        const std::string where = "replica " + std::to_string(*failed_at) + ": ";
        try {
            std::rethrow_exception(failure);
        } catch (const DataError& e) {
            throw DataError(where + e.what());
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(where + e.what());
        } catch (const std::exception& e) {
            throw std::runtime_error(where + e.what());
        }
    }
    std::vector<Result> out;
    out.reserve(reps);
    for (auto& s : slots) {
        out.push_back(std::move(*s));
    }
    return out;
}

struct ExperimentConfig {
    BpamParams bpam;
    std::size_t reps = 100;
    std::uint64_t base_seed = 1;
    std::vector<Algo> algos{Algo::Degree, Algo::PageRank, Algo::Hits};
    AlgoParams params;
    std::size_t grid_points = 40;
    std::vector<double> grid; ///< explicit grid; empty means log_grid(N, grid_points)
    unsigned threads = 1;

    void validate() const {
        bpam.validate();
        params.ctrl.validate();
        if (reps < 1) {
            throw std::invalid_argument("reps must be >= 1");
        }
        if (algos.empty()) {
            throw std::invalid_argument("no algorithms selected");
        }
    }

    std::vector<double> resolved_grid(std::size_t n) const { return grid.empty() ? log_grid(n, grid_points) : grid; }
};

struct SyntheticResult {
    CurveTable curves; ///< replica means, in config algorithm order
    std::vector<std::uint64_t> seeds;
    std::vector<GenerationStats> stats;
    ColorCcdf ccdf; ///< replica mean of the total-degree CCDFs
    std::size_t nonconverged = 0; ///< replica x algorithm runs that hit max_iter
};

/// Curves of every configured algorithm on one graph.
inline CurveTable rank_curves(const ColoredDigraph& g, const std::vector<Algo>& algos, const AlgoParams& params,
                              const std::vector<double>& grid, std::size_t* nonconverged = nullptr) {
    CurveTable table;
    for (Algo a : algos) {
        const RankingResult res = run_algorithm(g, a, params);
        if (!res.converged && nonconverged) {
            ++*nonconverged;
        }
        table.emplace_back(algo_name(a), minority_share_curve(res.order, g.colors(), grid));
    }
    return table;
}

/**
 * Monte-Carlo ranking experiment on BPAM graphs: replica k uses seed
 * base_seed + k, and curves are averaged in replica order.
 */
inline SyntheticResult run_synthetic(const ExperimentConfig& cfg) {
    cfg.validate();
    const std::vector<double> grid = cfg.resolved_grid(cfg.bpam.nodes);
    struct Replica {
        CurveTable curves;
        GenerationStats stats;
        ColorCcdf ccdf;
        std::size_t nonconverged = 0;
    };
    auto replicas = for_each_replica(cfg.reps, cfg.threads, [&](std::size_t k) {
        Replica rep;
        auto sample = generate_bpam(cfg.bpam, replica_seed(cfg.base_seed, k));
        rep.curves = rank_curves(sample.graph, cfg.algos, cfg.params, grid, &rep.nonconverged);
        rep.stats = sample.stats;
        rep.ccdf = ccdf_by_color(sample.graph, DegreeKind::Total);
        return rep;
    });

    SyntheticResult out;
    for (std::size_t a = 0; a < cfg.algos.size(); ++a) {
        std::vector<FairnessCurve> per_replica;
        per_replica.reserve(replicas.size());
        for (const Replica& r : replicas) {
            per_replica.push_back(r.curves[a].second);
        }
        out.curves.emplace_back(algo_name(cfg.algos[a]), average_curves(per_replica));
    }
    std::vector<Ccdf> red, blue;
    for (const Replica& r : replicas) {
        red.push_back(r.ccdf.red);
        blue.push_back(r.ccdf.blue);
    }
    out.ccdf = {average_ccdf(red), average_ccdf(blue)};
    // Pad to a common grid so the CSV has matching rows per color.
    const std::size_t len = std::max(out.ccdf.red.size(), out.ccdf.blue.size());
    out.ccdf.red.value.resize(len, 0.0);
    out.ccdf.blue.value.resize(len, 0.0);
    for (std::size_t k = 0; k < replicas.size(); ++k) {
        out.seeds.push_back(replica_seed(cfg.base_seed, k));
        out.stats.push_back(replicas[k].stats);
        out.nonconverged += replicas[k].nonconverged;
    }
    return out;
}

struct RealResult {
    CurveTable curves;
    double hri = 0.0;
    double minority = 0.0;
    ColorCcdf ccdf;
    std::size_t nonconverged = 0;
};

inline RealResult run_real(const ColoredDigraph& g, const std::vector<Algo>& algos, const AlgoParams& params,
                           const std::vector<double>& grid, DegreeKind ccdf_degree = DegreeKind::Total) {
    if (g.count(Color::Red) == 0 || g.count(Color::Blue) == 0) {
        throw DataError("data has a single color; both communities are required");
    }
    RealResult out;
    out.hri = hri(g);
    out.minority = minority_fraction(g);
    out.ccdf = ccdf_by_color(g, ccdf_degree);
    out.curves = rank_curves(g, algos, params, grid, &out.nonconverged);
    return out;
}

enum class SweepAxis { Rho, K };

struct SweepPoint {
    double value;
    CurveTable curves;
};

/// One averaged curve set per axis value; the k axis sets AlgoParams::k.
inline std::vector<SweepPoint> sweep(const ExperimentConfig& cfg, SweepAxis axis, const std::vector<double>& values) {
    if (values.empty()) {
        throw std::invalid_argument("sweep axis has no values");
    }
    std::vector<SweepPoint> out;
    for (double v : values) {
        ExperimentConfig c = cfg;
        if (axis == SweepAxis::Rho) {
            c.bpam.homophily = v;
        } else {
            if (v < 1 || v != static_cast<double>(static_cast<std::size_t>(v))) {
                throw std::invalid_argument("k sweep values must be positive integers");
            }
            c.params.k = static_cast<std::size_t>(v);
        }
        out.push_back({v, run_synthetic(c).curves});
    }
    return out;
}

/// Same as sweep() over k, but on one fixed graph.
inline std::vector<SweepPoint> sweep_k(const ColoredDigraph& g, const std::vector<Algo>& algos, AlgoParams params,
                                       const std::vector<double>& grid, const std::vector<std::size_t>& ks) {
    if (ks.empty()) {
        throw std::invalid_argument("sweep axis has no values");
    }
    std::vector<SweepPoint> out;
    for (std::size_t k : ks) {
        params.k = k;
        out.push_back({static_cast<double>(k), rank_curves(g, algos, params, grid)});
    }
    return out;
}

/// Long-format CSV `value,algo,x,share,baseline`.
inline void write_sweep_csv(std::ostream& out, const std::vector<SweepPoint>& points) {
    out << "value,algo,x,share,baseline\n";
    for (const SweepPoint& p : points) {
        for (const auto& [algo, curve] : p.curves) {
            for (std::size_t i = 0; i < curve.grid.size(); ++i) {
                out << format_double(p.value) << ',' << algo << ',' << format_double(curve.grid[i]) << ','
                    << format_double(curve.share[i]) << ',' << format_double(curve.baseline) << '\n';
            }
        }
    }
}

} // namespace fairank

#endif // FAIRANK_EXPERIMENT_HPP
