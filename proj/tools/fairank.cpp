// fairank command line: BPAM generation, rankings, fairness curves and
// mean-field checks. Exit codes: 0 ok, 1 usage, 2 data error,
// 3 non-convergence under --strict, 4 a verify check failed.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fairank/bpam.hpp"
#include "fairank/errors.hpp"
#include "fairank/experiment.hpp"
#include "fairank/fairness.hpp"
#include "fairank/io.hpp"
#include "fairank/meanfield.hpp"
#include "fairank/rankers.hpp"
#include "fairank/svg.hpp"
#include "config_file.hpp"
#include "manifest.hpp"

namespace {

using namespace fairank;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNonConvergence = 3;
constexpr int kExitVerifyFailed = 4;

struct Common {
    unsigned threads = 1;
    bool strict = false;
    std::optional<std::uint64_t> tie_shuffle;
};

struct AlgoOptions {
    AlgoParams params;
    std::string weight = "unit";
    std::vector<std::string> algos{"degree", "pagerank", "hits"};

    AlgoParams resolved(const Common& common) const {
        AlgoParams p = params;
        if (weight == "unit") {
            p.weight = SubspaceWeight::Unit;
        } else if (weight == "lambda2") {
            p.weight = SubspaceWeight::LambdaSquared;
        } else {
            throw std::invalid_argument("--weight must be unit or lambda2");
        }
        p.tie_seed = common.tie_shuffle;
        p.ctrl.validate();
        return p;
    }

    std::vector<Algo> resolved_algos() const {
        std::vector<Algo> out;
        for (const auto& a : algos) {
            out.push_back(parse_algo(a));
        }
        if (out.empty()) {
            throw std::invalid_argument("--algos is empty");
        }
        return out;
    }
};

void add_common(CLI::App* app, Common& c) {
    // Expanded before parsing (see config_file.hpp); declared here for --help.
    app->add_option("--config", "flat `key = value` file; command line flags take precedence");
    app->add_option("--threads", c.threads, "worker threads for replicas")
        ->envname("FAIRANK_THREADS")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app->add_flag("--strict", c.strict, "exit with code 3 when an iteration does not converge");
    app->add_option("--tie-shuffle", c.tie_shuffle, "break score ties with a random permutation drawn from SEED");
}

void add_bpam(CLI::App* app, BpamParams& p) {
    app->add_option("--nodes", p.nodes, "number of nodes N")->capture_default_str();
    app->add_option("--outdeg", p.outdeg, "edges per arriving node d")->capture_default_str();
    app->add_option("--minority-ratio", p.minority_ratio, "probability r that a node is red")->capture_default_str();
    app->add_option("--homophily", p.homophily, "cross-color acceptance probability rho")->capture_default_str();
}

void add_algo(CLI::App* app, AlgoOptions& a, bool multi) {
    if (multi) {
        app->add_option("--algos", a.algos, "comma separated: degree,pagerank,hits,rhits,subspace")
            ->delimiter(',')
            ->capture_default_str();
    }
    app->add_option("--eta", a.params.eta, "PageRank damping")->capture_default_str();
    app->add_option("--eps", a.params.eps, "randomized HITS restart probability")->capture_default_str();
    app->add_option("--k", a.params.k, "subspace HITS eigenvector count")->capture_default_str();
    app->add_option("--weight", a.weight, "subspace HITS weight")
        ->check(CLI::IsMember({"unit", "lambda2"}))
        ->capture_default_str();
    app->add_option("--tol", a.params.ctrl.tol, "convergence tolerance")->capture_default_str();
    app->add_option("--max-iter", a.params.ctrl.max_iter, "iteration cap")->capture_default_str();
}

/// Effective settings as a flat config file that --config accepts back.
std::string config_echo(const CLI::App* app) {
    std::ostringstream out;
    for (const CLI::Option* opt : app->get_options()) {
        const std::string name = opt->get_single_name();
        if (name.empty() || name == "help" || name == "config") {
            continue;
        }
        std::string value;
        if (opt->get_expected_min() == 0) {
            value = opt->count() > 0 ? "true" : "false";
        } else if (opt->count() > 0) {
            for (const auto& r : opt->results()) {
                value += (value.empty() ? "" : ",") + r;
            }
        } else {
            value = opt->get_default_str();
            if (value.size() >= 2 && value.front() == '[' && value.back() == ']') {
                value = value.substr(1, value.size() - 2);
            }
        }
        if (!value.empty()) {
            out << name << " = " << value << '\n';
        }
    }
    return out.str();
}

std::string csv_header_stats() {
    return "replica,seed,nodes,edges,red_nodes,blue_nodes,alpha_hat,rejections,seed_nodes,seed_node_edges\n";
}

std::string stats_row(std::size_t k, std::uint64_t seed, const BpamSample& s) {
    std::ostringstream row;
    row << k << ',' << seed << ',' << s.graph.num_nodes() << ',' << s.graph.num_edges() << ',' << s.stats.red_nodes
        << ',' << s.stats.blue_nodes << ',' << format_double(s.stats.alpha_hat) << ',' << s.stats.rejections << ','
        << s.stats.seed_nodes << ",0\n";
    return row.str();
}

std::string stats_row(std::size_t k, std::uint64_t seed, std::size_t edges, const GenerationStats& st) {
    std::ostringstream row;
    row << k << ',' << seed << ',' << st.red_nodes + st.blue_nodes << ',' << edges << ',' << st.red_nodes << ','
        << st.blue_nodes << ',' << format_double(st.alpha_hat) << ',' << st.rejections << ',' << st.seed_nodes
        << ",0\n";
    return row.str();
}

const char* kSeedNote = "nodes 0 (red) and 1 (blue) form the seed graph with one edge 0->1; they emit no further edges";

std::string padded(std::size_t k, std::size_t reps) {
    const std::size_t width = std::to_string(reps > 0 ? reps - 1 : 0).size();
    std::string s = std::to_string(k);
    return std::string(width > s.size() ? width - s.size() : 0, '0') + s;
}

void report_convergence(std::size_t nonconverged, const Common& common, int& status) {
    if (nonconverged == 0) {
        return;
    }
    std::cerr << "warning: " << nonconverged << " ranking run(s) stopped at --max-iter without converging\n";
    if (common.strict) {
        status = kExitNonConvergence;
    }
}

nlohmann::ordered_json curve_meta(const ExperimentConfig& cfg) {
    nlohmann::ordered_json m;
    m["threads"] = cfg.threads;
    m["reps"] = cfg.reps;
    m["base_seed"] = cfg.base_seed;
    m["seed_rule"] = "replica k uses base_seed + k";
    m["seed_nodes"] = kSeedNote;
    m["rng"] = "std::mt19937_64";
    return m;
}

// ---- subcommands ---------------------------------------------------------

struct GenerateCmd {
    Common common;
    BpamParams bpam;
    std::uint64_t seed = 1;
    std::size_t reps = 1;
    std::string out_dir;

    void attach(CLI::App& root, std::function<int()>& run) {
        auto* app = root.add_subcommand("generate", "sample BPAM graphs");
        add_common(app, common);
        add_bpam(app, bpam);
        app->add_option("--seed", seed, "base seed; replica k uses seed + k")->capture_default_str();
        app->add_option("--reps", reps, "number of replicas")->check(CLI::PositiveNumber)->capture_default_str();
        app->add_option("--out-dir", out_dir, "output directory")->required();
        app->callback([this, app, &run] { run = [this, app] { return execute(app); }; });
    }

    int execute(const CLI::App* app) {
        bpam.validate();
        if (bpam.minority_warning()) {
            std::cerr << "warning: minority ratio above 0.5 makes red the majority\n";
        }
        auto samples = for_each_replica(reps, common.threads,
                                        [&](std::size_t k) { return generate_bpam(bpam, replica_seed(seed, k)); });
        tool::OutputDir out(out_dir);
        std::vector<std::uint64_t> seeds;
        for (std::size_t k = 0; k < reps; ++k) {
            const std::uint64_t s = replica_seed(seed, k);
            seeds.push_back(s);
            const std::string stem = "replica_" + padded(k, reps);
            std::ostringstream edges, colors, stats;
            write_edge_list(edges, samples[k].graph);
            write_color_file(colors, samples[k].graph);
            stats << csv_header_stats() << stats_row(k, s, samples[k]);
            out.write(stem + ".edges", edges.str());
            out.write(stem + ".colors", colors.str());
            out.write(stem + "_stats.csv", stats.str());
        }
        out.meta()["threads"] = common.threads;
        out.meta()["seed_rule"] = "replica k uses seed + k";
        out.meta()["seed_nodes"] = kSeedNote;
        out.meta()["rng"] = "std::mt19937_64";
        out.finish("generate", config_echo(app), seeds);
        return 0;
    }
};

struct RankCmd {
    Common common;
    BpamParams bpam;
    AlgoOptions algo;
    std::string algo_name = "hits";
    std::uint64_t seed = 1;
    std::string edges, colors, out;

    void attach(CLI::App& root, std::function<int()>& run) {
        auto* app = root.add_subcommand("rank", "rank the nodes of one graph");
        add_common(app, common);
        add_bpam(app, bpam);
        add_algo(app, algo, false);
        app->add_option("--algo", algo_name, "ranking algorithm")
            ->check(CLI::IsMember({"degree", "pagerank", "hits", "rhits", "subspace"}))
            ->capture_default_str();
        app->add_option("--seed", seed, "BPAM seed when no input files are given")->capture_default_str();
        auto* e = app->add_option("--edges", edges, "edge list file (whitespace separated `src dst`)");
        auto* c = app->add_option("--colors", colors, "color file (`node R|B`)");
        e->needs(c);
        c->needs(e);
        app->add_option("--out", out, "output CSV path (default: stdout)");
        app->callback([this, app, &run] { run = [this, app] { return execute(app); }; });
    }

    int execute(const CLI::App* app) {
        const AlgoParams params = algo.resolved(common);
        const LabeledGraph lg = [&] {
            if (!edges.empty()) {
                return load_graph(edges, colors);
            }
            bpam.validate();
            return LabeledGraph{generate_bpam(bpam, seed).graph, {}};
        }();
        const RankingResult res = run_algorithm(lg.graph, parse_algo(algo_name), params);
        for (const auto& w : res.warnings) {
            std::cerr << "warning: " << w << '\n';
        }
        const auto pos = positions(res.order);
        std::ostringstream csv;
        csv << "node,score,rank\n";
        for (NodeId v = 0; v < lg.graph.num_nodes(); ++v) {
            csv << (lg.labels.empty() ? std::to_string(v) : lg.labels[v]) << ',' << format_double(res.scores[v]) << ','
                << pos[v] + 1 << '\n';
        }
        if (out.empty()) {
            std::cout << csv.str();
        } else {
            const std::filesystem::path p(out);
            tool::OutputDir dir(p.has_parent_path() ? p.parent_path() : std::filesystem::path("."));
            dir.write(p.filename().string(), csv.str());
            dir.meta()["algorithm"] = res.algorithm;
            dir.meta()["iterations"] = res.iterations;
            dir.meta()["converged"] = res.converged;
            dir.meta()["degenerate"] = res.degenerate;
            dir.finish("rank", config_echo(app), edges.empty() ? std::vector<std::uint64_t>{seed} : std::vector<std::uint64_t>{});
        }
        int status = 0;
        report_convergence(res.converged ? 0 : 1, common, status);
        return status;
    }
};

struct CurveCmd {
    Common common;
    ExperimentConfig cfg;
    AlgoOptions algo;
    std::string out_dir;
    bool svg = false;

    void attach(CLI::App& root, std::function<int()>& run) {
        auto* app = root.add_subcommand("curve", "replica-averaged minority share curves on BPAM graphs");
        add_common(app, common);
        add_bpam(app, cfg.bpam);
        add_algo(app, algo, true);
        app->add_option("--reps", cfg.reps, "number of replicas")->check(CLI::PositiveNumber)->capture_default_str();
        app->add_option("--seed", cfg.base_seed, "base seed; replica k uses seed + k")->capture_default_str();
        app->add_option("--grid-points", cfg.grid_points, "log-spaced fractions from 1/N to 1")
            ->check(CLI::Range(2, 100000))
            ->capture_default_str();
        app->add_option("--out-dir", out_dir, "output directory")->required();
        app->add_flag("--svg", svg, "also write curves.svg");
        app->callback([this, app, &run] { run = [this, app] { return execute(app); }; });
    }

    int execute(const CLI::App* app) {
        cfg.params = algo.resolved(common);
        cfg.algos = algo.resolved_algos();
        cfg.threads = common.threads;
        const SyntheticResult res = run_synthetic(cfg);

        tool::OutputDir out(out_dir);
        std::ostringstream curves, ccdf, stats;
        write_curve_table(curves, res.curves);
        out.write("curves.csv", curves.str());
        write_ccdf_csv(ccdf, res.ccdf);
        out.write("ccdf.csv", ccdf.str());
        stats << csv_header_stats();
        const std::size_t edges = 1 + (cfg.bpam.nodes - 2) * cfg.bpam.outdeg;
        for (std::size_t k = 0; k < res.stats.size(); ++k) {
            stats << stats_row(k, res.seeds[k], edges, res.stats[k]);
        }
        out.write("stats.csv", stats.str());
        if (svg) {
            std::ostringstream chart;
            write_curve_svg(chart, res.curves, "minority share, r=" + format_double(cfg.bpam.minority_ratio) +
                                                   " rho=" + format_double(cfg.bpam.homophily));
            out.write("curves.svg", chart.str());
        }
        const auto meta = curve_meta(cfg);
        for (auto& [k, v] : meta.items()) {
            out.meta()[k] = v;
        }
        out.meta()["nonconverged_runs"] = res.nonconverged;
        out.finish("curve", config_echo(app), res.seeds);
        int status = 0;
        report_convergence(res.nonconverged, common, status);
        return status;
    }
};

std::vector<double> default_r_grid() {
    std::vector<double> v;
    for (int i = 1; i <= 10; ++i) {
        v.push_back(0.05 * i);
    }
    return v;
}

std::vector<double> default_rho_grid() {
    std::vector<double> v;
    for (int i = 1; i <= 19; ++i) {
        v.push_back(0.05 * i);
    }
    return v;
}

struct MeanFieldCmd {
    Common common;
    double r = 0.3;
    double rho = 0.5;
    bool grid = false;
    std::string out;

    void attach(CLI::App& root, std::function<int()>& run) {
        auto* app = root.add_subcommand("meanfield", "mean-field exponents and HITS factors");
        add_common(app, common);
        app->add_option("--r", r, "minority ratio")->capture_default_str();
        app->add_option("--rho", rho, "homophily")->capture_default_str();
        app->add_flag("--grid", grid, "evaluate r in 0.05..0.5 by rho in 0.05..0.95 instead");
        app->add_option("--out", out, "output CSV path (default: stdout)");
        app->callback([this, app, &run] { run = [this, app] { return execute(app); }; });
    }

    int execute(const CLI::App* app) {
        std::ostringstream csv;
        csv << "r,rho,alpha,K_B,K_R,beta_B,beta_R,q_BB,q_RB,q_BR,q_RR,F\n";
        auto row = [&](double rv, double pv) {
            const auto rep = meanfield::mean_field_report(rv, pv);
            const Color R = Color::Red, B = Color::Blue;
            csv << format_double(rep.r) << ',' << format_double(rep.rho) << ',' << format_double(rep.alpha) << ','
                << format_double(rep.K_B) << ',' << format_double(rep.K_R) << ',' << format_double(rep.beta_B) << ','
                << format_double(rep.beta_R) << ',' << format_double(rep.q(B, B)) << ','
                << format_double(rep.q(R, B)) << ',' << format_double(rep.q(B, R)) << ','
                << format_double(rep.q(R, R)) << ',' << format_double(rep.F) << '\n';
        };
        if (grid) {
            for (double rv : default_r_grid()) {
                for (double pv : default_rho_grid()) {
                    row(rv, pv);
                }
            }
        } else {
            row(r, rho);
        }
        emit(app, "meanfield", csv.str());
        return 0;
    }

    void emit(const CLI::App* app, const std::string& command, const std::string& csv) const {
        if (out.empty()) {
            std::cout << csv;
            return;
        }
        const std::filesystem::path p(out);
        tool::OutputDir dir(p.has_parent_path() ? p.parent_path() : std::filesystem::path("."));
        dir.write(p.filename().string(), csv);
        dir.finish(command, config_echo(app), {});
    }
};

struct VerifyCmd {
    Common common;
    std::vector<double> r_values = default_r_grid();
    std::vector<double> rho_values = default_rho_grid();
    std::string out;

    void attach(CLI::App& root, std::function<int()>& run) {
        auto* app = root.add_subcommand("verify", "check the mean-field propositions over a grid");
        add_common(app, common);
        app->add_option("--r-values", r_values, "minority ratios")->delimiter(',');
        app->add_option("--rho-values", rho_values, "homophily values")->delimiter(',');
        app->add_option("--out", out, "output CSV path (default: stdout)");
        app->callback([this, app, &run] { run = [this, app] { return execute(app); }; });
    }

    int execute(const CLI::App* app) {
        std::ostringstream csv;
        csv << "r,rho,check,status,margin,detail\n";
        std::size_t total = 0, failed = 0, skipped = 0;
        for (double rv : r_values) {
            for (double pv : rho_values) {
                for (const auto& c : meanfield::verify_propositions(rv, pv)) {
                    ++total;
                    failed += c.status == meanfield::CheckStatus::Fail;
                    skipped += c.status == meanfield::CheckStatus::Skip;
                    csv << format_double(rv) << ',' << format_double(pv) << ',' << c.name << ','
                        << meanfield::to_string(c.status) << ',' << format_double(c.margin) << ',' << c.detail
                        << '\n';
                }
            }
        }
        if (out.empty()) {
            std::cout << csv.str();
        } else {
            const std::filesystem::path p(out);
            tool::OutputDir dir(p.has_parent_path() ? p.parent_path() : std::filesystem::path("."));
            dir.write(p.filename().string(), csv.str());
            dir.meta()["checks"] = total;
            dir.meta()["failed"] = failed;
            dir.meta()["skipped"] = skipped;
            dir.finish("verify", config_echo(app), {});
        }
        std::cerr << total << " checks, " << failed << " failed, " << skipped << " skipped\n";
        return failed == 0 ? 0 : kExitVerifyFailed;
    }
};

struct SweepCmd {
    Common common;
    ExperimentConfig cfg;
    AlgoOptions algo;
    std::string axis = "rho";
    std::vector<double> values;
    std::string edges, colors, out_dir;

    void attach(CLI::App& root, std::function<int()>& run) {
        auto* app = root.add_subcommand("sweep", "curve sets across homophily or subspace size");
        add_common(app, common);
        add_bpam(app, cfg.bpam);
        add_algo(app, algo, true);
        app->add_option("--axis", axis, "swept parameter")->check(CLI::IsMember({"rho", "k"}))->capture_default_str();
        app->add_option("--values", values, "axis values, comma separated")->delimiter(',')->required();
        app->add_option("--reps", cfg.reps, "replicas per value")->check(CLI::PositiveNumber)->capture_default_str();
        app->add_option("--seed", cfg.base_seed, "base seed; replica k uses seed + k")->capture_default_str();
        app->add_option("--grid-points", cfg.grid_points, "log-spaced fractions from 1/N to 1")
            ->check(CLI::Range(2, 100000))
            ->capture_default_str();
        auto* e = app->add_option("--edges", edges, "sweep k on this graph instead of BPAM samples");
        auto* c = app->add_option("--colors", colors, "color file for --edges");
        e->needs(c);
        c->needs(e);
        app->add_option("--out-dir", out_dir, "output directory")->required();
        app->callback([this, app, &run] { run = [this, app] { return execute(app); }; });
    }

    int execute(const CLI::App* app) {
        cfg.params = algo.resolved(common);
        cfg.algos = algo.resolved_algos();
        cfg.threads = common.threads;
        std::vector<SweepPoint> points;
        std::vector<std::uint64_t> seeds;
        if (!edges.empty()) {
            if (axis != "k") {
                throw std::invalid_argument("a rho sweep needs generated graphs; drop --edges");
            }
            const LabeledGraph lg = load_graph(edges, colors);
            std::vector<std::size_t> ks;
            for (double v : values) {
                if (v < 1 || v != static_cast<double>(static_cast<std::size_t>(v))) {
                    throw std::invalid_argument("k sweep values must be positive integers");
                }
                ks.push_back(static_cast<std::size_t>(v));
            }
            points = sweep_k(lg.graph, cfg.algos, cfg.params, cfg.resolved_grid(lg.graph.num_nodes()), ks);
        } else {
            points = sweep(cfg, axis == "rho" ? SweepAxis::Rho : SweepAxis::K, values);
            for (std::size_t k = 0; k < cfg.reps; ++k) {
                seeds.push_back(replica_seed(cfg.base_seed, k));
            }
        }
        tool::OutputDir out(out_dir);
        std::ostringstream csv;
        write_sweep_csv(csv, points);
        out.write("sweep.csv", csv.str());
        if (edges.empty()) {
            const auto meta = curve_meta(cfg);
            for (auto& [k, v] : meta.items()) {
                out.meta()[k] = v;
            }
        }
        out.meta()["axis"] = axis;
        out.finish("sweep", config_echo(app), seeds);
        return 0;
    }
};

struct RealCmd {
    Common common;
    AlgoOptions algo;
    std::size_t grid_points = 40;
    std::string edges, colors, out_dir;
    bool svg = false;

    void attach(CLI::App& root, std::function<int()>& run) {
        auto* app = root.add_subcommand("real", "curves, HRI and CCDFs for a labelled graph");
        add_common(app, common);
        add_algo(app, algo, true);
        app->add_option("--edges", edges, "edge list file")->required();
        app->add_option("--colors", colors, "color file")->required();
        app->add_option("--grid-points", grid_points, "log-spaced fractions from 1/N to 1")
            ->check(CLI::Range(2, 100000))
            ->capture_default_str();
        app->add_option("--out-dir", out_dir, "output directory")->required();
        app->add_flag("--svg", svg, "also write curves.svg");
        app->callback([this, app, &run] { run = [this, app] { return execute(app); }; });
    }

    int execute(const CLI::App* app) {
        const AlgoParams params = algo.resolved(common);
        const auto algos = algo.resolved_algos();
        const LabeledGraph lg = load_graph(edges, colors);
        const RealResult res =
            run_real(lg.graph, algos, params, log_grid(lg.graph.num_nodes(), grid_points), DegreeKind::Total);

        tool::OutputDir out(out_dir);
        std::ostringstream curves, ccdf, summary;
        write_curve_table(curves, res.curves);
        out.write("curves.csv", curves.str());
        write_ccdf_csv(ccdf, res.ccdf);
        out.write("ccdf.csv", ccdf.str());
        summary << "nodes,edges,red_nodes,blue_nodes,minority_fraction,hri\n"
                << lg.graph.num_nodes() << ',' << lg.graph.num_edges() << ',' << lg.graph.count(Color::Red) << ','
                << lg.graph.count(Color::Blue) << ',' << format_double(res.minority) << ',' << format_double(res.hri)
                << '\n';
        out.write("summary.csv", summary.str());
        if (svg) {
            std::ostringstream chart;
            write_curve_svg(chart, res.curves, "minority share");
            out.write("curves.svg", chart.str());
        }
        out.meta()["nonconverged_runs"] = res.nonconverged;
        out.finish("real", config_echo(app), {});
        int status = 0;
        report_convergence(res.nonconverged, common, status);
        return status;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fairank: minority representation in link-analysis rankings", "fairank"};
    app.set_version_flag("--version", FAIRANK_VERSION);
    app.require_subcommand(1);

    std::function<int()> run;
    GenerateCmd generate;
    RankCmd rank;
    CurveCmd curve;
    MeanFieldCmd meanfield;
    VerifyCmd verify;
    SweepCmd sweep_cmd;
    RealCmd real;
    generate.attach(app, run);
    rank.attach(app, run);
    curve.attach(app, run);
    meanfield.attach(app, run);
    verify.attach(app, run);
    sweep_cmd.attach(app, run);
    real.attach(app, run);

    std::vector<std::string> args(argv, argv + argc);
    try {
        args = tool::expand_config(args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    std::reverse(args.begin(), args.end());
    args.pop_back(); // program name
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        return run();
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kExitData;
    }
}
