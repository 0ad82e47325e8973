#include "specnet/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "specnet/experiment.hpp"
#include "specnet/output.hpp"

namespace specnet::cli {

namespace fs = std::filesystem;

namespace {

struct SharedFlags {
    std::size_t runs = 100;
    std::optional<std::uint64_t> seed;
    std::string out_dir = ".";
    unsigned threads = 1;
    double tolerance = PowerIterationConfig{}.tolerance;
    std::size_t max_iterations = PowerIterationConfig{}.max_iterations;
};

void add_shared(CLI::App* cmd, SharedFlags& f) {
    cmd->add_option("--runs", f.runs, "Independent runs to average")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--seed", f.seed, "Master seed (random if omitted; printed and embedded in outputs)");
    cmd->add_option("--out", f.out_dir, "Output directory")->capture_default_str();
    cmd->add_option("--threads", f.threads, "Worker threads, 0 = all cores")->capture_default_str();
    cmd->add_option("--tolerance", f.tolerance, "Power-iteration tolerance on successive norms")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--max-iterations", f.max_iterations, "Power-iteration cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

std::uint64_t resolve_seed(const SharedFlags& f, std::ostream& out) {
    if (f.seed) return *f.seed;
    std::random_device rd;
    const std::uint64_t seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    out << "seed: " << seed << " (randomly chosen)\n";
    return seed;
}

ExperimentConfig base_config(const SharedFlags& f, std::ostream& out) {
    ExperimentConfig cfg;
    cfg.runs = f.runs;
    cfg.master_seed = resolve_seed(f, out);
    cfg.threads = f.threads;
    cfg.power.tolerance = f.tolerance;
    cfg.power.max_iterations = f.max_iterations;
    return cfg;
}

void write_file(const fs::path& path, const std::string& contents) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
    file << contents;
    if (!file) throw std::runtime_error("failed writing " + path.string());
}

fs::path prepare_dir(const std::string& dir) {
    fs::path p(dir);
    fs::create_directories(p);
    return p;
}

std::string correlation_text(const std::optional<double>& c) {
    return c ? format_real(*c) : std::string("undefined");
}

void print_summary(std::ostream& out, const AveragedSummary& s) {
    out << "runs: " << s.runs << '\n'
        << "mean_lambda_ratio: " << format_real(s.mean_lambda_ratio) << '\n'
        << "mean_cv: " << format_real(s.mean_cv) << '\n'
        << "mean_correlation: " << correlation_text(s.mean_correlation) << '\n';
}

int cmd_analyze(const std::string& path, const PowerIterationConfig& power, std::ostream& out,
                std::ostream& err) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        err << "error: cannot read " << path << '\n';
        return kInputError;
    }
    std::ostringstream buf;
    buf << file.rdbuf();

    Graph g;
    try {
        g = parse_edge_list(buf.str());
    } catch (const ParseError& e) {
        err << "error: " << path << ": " << to_string(e.code()) << " at " << e.what() << '\n';
        return kInputError;
    }

    const DegreeStats stats = degree_stats(g);
    out << "nodes: " << g.node_count() << '\n'
        << "edges: " << g.edge_count() << '\n'
        << "k_min: " << stats.k_min << '\n'
        << "k_avg: " << format_real(stats.k_avg) << '\n'
        << "k_max: " << stats.k_max << '\n'
        << "k_sd: " << format_real(stats.k_sd) << '\n';

    SpectralResult spectral;
    bool converged = true;
    try {
        spectral = power_iteration(g, power);
    } catch (const NotConvergedError& e) {
        spectral = e.partial();
        converged = false;
    }

    out << "lambda_sp: " << format_real(spectral.spectral_radius) << '\n';
    if (stats.k_avg > 0.0) {
        out << "lambda_ratio: " << format_real(spectral.spectral_radius / stats.k_avg) << '\n'
            << "cv: " << format_real(stats.cv()) << '\n';
    } else {
        out << "lambda_ratio: undefined\n"
            << "cv: undefined\n";
    }
    out << "iterations: " << spectral.iterations << '\n'
        << "converged: " << (spectral.converged ? "true" : "false") << '\n'
        << "residual: " << format_real(spectral.residual) << '\n'
        << "shifted: " << (spectral.shifted ? "true" : "false") << '\n';

    if (!converged) {
        err << "warning: power iteration did not converge; values above are partial\n";
        return kNotConverged;
    }
    return kSuccess;
}

int cmd_ba(ExperimentConfig cfg, const std::string& out_dir, std::ostream& out) {
    cfg.model = Model::BA;
    const ExperimentResult result = run_ba_experiment(cfg);
    const fs::path dir = prepare_dir(out_dir);
    write_file(dir / "ba_timeseries.csv", timeseries_csv(*result.summary.per_step));
    write_file(dir / "ba_summary.json", summary_json(cfg, result.summary));
    print_summary(out, result.summary);
    out << "wrote " << (dir / "ba_timeseries.csv").string() << ", " << (dir / "ba_summary.json").string()
        << '\n';
    return kSuccess;
}

int cmd_ws(ExperimentConfig cfg, const std::string& out_dir, std::ostream& out) {
    cfg.model = Model::WS;
    const ExperimentResult result = run_ws_experiment(cfg);
    const fs::path dir = prepare_dir(out_dir);
    write_file(dir / "ws_timeseries.csv", timeseries_csv(result.runs.front()));
    write_file(dir / "ws_summary.json", summary_json(cfg, result.summary));
    print_summary(out, result.summary);
    out << "wrote " << (dir / "ws_timeseries.csv").string() << ", " << (dir / "ws_summary.json").string()
        << '\n';
    return kSuccess;
}

int cmd_sweep(ExperimentConfig cfg, const std::string& out_dir, std::ostream& out) {
    const std::vector<SweepRow> rows = cfg.model == Model::BA ? run_ba_table(cfg) : run_ws_sweep(cfg);
    const fs::path dir = prepare_dir(out_dir);
    const std::string stem = std::string(to_string(cfg.model)) + "_sweep";
    write_file(dir / (stem + ".csv"), sweep_csv(rows));
    write_file(dir / (stem + ".json"), sweep_json(cfg, rows));
    out << sweep_csv(rows);
    out << "wrote " << (dir / (stem + ".csv")).string() << ", " << (dir / (stem + ".json")).string() << '\n';
    return kSuccess;
}

int cmd_generate(const ExperimentConfig& cfg, const std::string& out_path, std::ostream& out) {
    Rng rng(derive_seed(cfg.master_seed, 0));
    Graph g;
    if (cfg.model == Model::BA) {
        g = ba_evolve(cfg.ba, rng);
    } else {
        cfg.ws.validate();
        g = ws_initialize(cfg.ws.nodes_per_ring);
        ws_rewire(g, cfg.ws.rewiring_probability, rng);
    }
    const std::string text = write_edge_list(g);
    if (out_path.empty() || out_path == "-") {
        out << text;
    } else {
        write_file(out_path, text);
    }
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectral radius ratio and degree variation of evolving scale-free and small-world networks"};
    app.name("specnet");
    app.require_subcommand(1);

    // analyze
    std::string analyze_path;
    SharedFlags analyze_flags;
    auto* analyze = app.add_subcommand("analyze", "Degree statistics and spectral radius of an edge list");
    analyze->add_option("edge_list", analyze_path, "Edge-list file")->required();
    analyze->add_option("--tolerance", analyze_flags.tolerance)->check(CLI::PositiveNumber);
    analyze->add_option("--max-iterations", analyze_flags.max_iterations)->check(CLI::PositiveNumber);

    // ba
    BAConfig ba_params;
    SharedFlags ba_flags;
    auto* ba = app.add_subcommand("ba", "Preferential-attachment evolution, averaged over runs");
    ba->add_option("--initial", ba_params.initial_nodes, "Initial node count n0")
        ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()))
        ->capture_default_str();
    ba->add_option("--total", ba_params.total_nodes, "Final node count n")->capture_default_str();
    ba->add_option("--links", ba_params.links_per_node, "Links per new node m")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_shared(ba, ba_flags);

    // ws
    WSConfig ws_params;
    SharedFlags ws_flags;
    auto* ws = app.add_subcommand("ws", "Two-ring lattice rewiring, averaged over runs");
    ws->add_option("--ring", ws_params.nodes_per_ring, "Nodes per ring N (2N total)")
        ->check(CLI::Range(std::size_t{3}, std::numeric_limits<std::size_t>::max()))
        ->capture_default_str();
    ws->add_option("--beta", ws_params.rewiring_probability, "Rewiring probability")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    add_shared(ws, ws_flags);

    // sweep
    std::string sweep_model;
    std::vector<double> sweep_values;
    BAConfig sweep_ba;
    WSConfig sweep_ws;
    SharedFlags sweep_flags;
    auto* sweep = app.add_subcommand("sweep", "One averaged row per m (ba) or beta (ws)");
    sweep->add_option("--model", sweep_model, "ba or ws")->required()->check(CLI::IsMember({"ba", "ws"}));
    sweep->add_option("--values", sweep_values, "Comma-separated m or beta values")
        ->required()
        ->delimiter(',');
    sweep->add_option("--initial", sweep_ba.initial_nodes, "BA initial node count n0")
        ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()))
        ->capture_default_str();
    sweep->add_option("--total", sweep_ba.total_nodes, "BA final node count n")->capture_default_str();
    sweep->add_option("--ring", sweep_ws.nodes_per_ring, "WS nodes per ring N")
        ->check(CLI::Range(std::size_t{3}, std::numeric_limits<std::size_t>::max()))
        ->capture_default_str();
    add_shared(sweep, sweep_flags);

    // generate
    std::string gen_model;
    BAConfig gen_ba;
    WSConfig gen_ws;
    std::optional<std::uint64_t> gen_seed;
    std::string gen_out;
    auto* generate = app.add_subcommand("generate", "Write one generated network as an edge list");
    generate->add_option("--model", gen_model, "ba or ws")->required()->check(CLI::IsMember({"ba", "ws"}));
    generate->add_option("--initial", gen_ba.initial_nodes)
        ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()))
        ->capture_default_str();
    generate->add_option("--total", gen_ba.total_nodes)->capture_default_str();
    generate->add_option("--links", gen_ba.links_per_node)->check(CLI::PositiveNumber)->capture_default_str();
    generate->add_option("--ring", gen_ws.nodes_per_ring)
        ->check(CLI::Range(std::size_t{3}, std::numeric_limits<std::size_t>::max()))
        ->capture_default_str();
    generate->add_option("--beta", gen_ws.rewiring_probability)->check(CLI::Range(0.0, 1.0))->capture_default_str();
    generate->add_option("--seed", gen_seed, "Seed (random if omitted)");
    generate->add_option("--out", gen_out, "Output file (stdout if omitted)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (analyze->parsed()) {
            return cmd_analyze(analyze_path, {analyze_flags.tolerance, analyze_flags.max_iterations}, out, err);
        }
        if (ba->parsed()) {
            ExperimentConfig cfg = base_config(ba_flags, out);
            cfg.ba = ba_params;
            return cmd_ba(cfg, ba_flags.out_dir, out);
        }
        if (ws->parsed()) {
            ExperimentConfig cfg = base_config(ws_flags, out);
            cfg.model = Model::WS;
            cfg.ws = ws_params;
            return cmd_ws(cfg, ws_flags.out_dir, out);
        }
        if (sweep->parsed()) {
            if (sweep_values.empty()) {
                err << "error: --values needs at least one value\n";
                return kUsageError;
            }
            ExperimentConfig cfg = base_config(sweep_flags, out);
            cfg.model = sweep_model == "ba" ? Model::BA : Model::WS;
            cfg.ba = sweep_ba;
            cfg.ws = sweep_ws;
            cfg.sweep = sweep_values;
            return cmd_sweep(cfg, sweep_flags.out_dir, out);
        }
        if (generate->parsed()) {
            SharedFlags f;
            f.seed = gen_seed;
            ExperimentConfig cfg;
            cfg.model = gen_model == "ba" ? Model::BA : Model::WS;
            cfg.master_seed = resolve_seed(f, err);
            cfg.ba = gen_ba;
            cfg.ws = gen_ws;
            return cmd_generate(cfg, gen_out, out);
        }
    } catch (const NotConvergedError& e) {
        err << "error: " << e.what() << '\n';
        return kNotConverged;
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        const bool usage = e.code() == Errc::InvalidConfig || e.code() == Errc::TooFewNodes;
        return usage ? kUsageError : kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kUsageError;
}

}  // namespace specnet::cli
