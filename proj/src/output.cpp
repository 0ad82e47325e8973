#include "specnet/output.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

#include "specnet/random.hpp"

namespace specnet {

using Json = nlohmann::ordered_json;

std::string format_real(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
    return std::string(buf, ptr);
}

std::string timeseries_csv(const TimeSeries& series) {
    std::ostringstream out;
    out << kTimeSeriesHeader << '\n';
    for (const auto& r : series.records()) {
        out << r.step << ',' << r.node_count << ',' << r.edge_count << ',' << format_real(r.lambda_ratio)
            << ',' << format_real(r.cv) << '\n';
    }
    return out.str();
}

std::string timeseries_csv(std::span<const StepMean> means) {
    std::ostringstream out;
    out << kTimeSeriesHeader << '\n';
    for (const auto& r : means) {
        out << r.step << ',' << r.node_count << ',' << format_real(r.edge_count) << ','
            << format_real(r.lambda_ratio) << ',' << format_real(r.cv) << '\n';
    }
    return out.str();
}

std::string sweep_csv(std::span<const SweepRow> rows) {
    std::ostringstream out;
    out << kSweepHeader << '\n';
    for (const auto& row : rows) {
        const auto& s = row.summary;
        out << format_real(row.param) << ',' << format_real(s.mean_lambda_ratio) << ','
            << format_real(s.mean_cv) << ','
            << (s.mean_correlation ? format_real(*s.mean_correlation) : kUndefinedField) << ','
            << s.runs << '\n';
    }
    return out.str();
}

namespace {

Json config_json(const ExperimentConfig& cfg) {
    Json j;
    j["model"] = std::string(to_string(cfg.model));
    if (cfg.model == Model::BA) {
        j["initial_nodes"] = cfg.ba.initial_nodes;
        j["total_nodes"] = cfg.ba.total_nodes;
        j["links_per_node"] = cfg.ba.links_per_node;
    } else {
        j["nodes_per_ring"] = cfg.ws.nodes_per_ring;
        j["total_nodes"] = 2 * cfg.ws.nodes_per_ring;
        j["rewiring_probability"] = cfg.ws.rewiring_probability;
    }
    if (!cfg.sweep.empty()) j["sweep"] = cfg.sweep;
    j["runs"] = cfg.runs;
    j["master_seed"] = cfg.master_seed;
    j["rng"] = std::string(kRngAlgorithm);
    j["power_iteration"] = {{"tolerance", cfg.power.tolerance},
                            {"max_iterations", cfg.power.max_iterations}};
    Json seeds = Json::array();
    for (const auto& s : run_seeds(cfg.master_seed, cfg.runs)) seeds.push_back(s.derived_seed);
    j["run_seeds"] = std::move(seeds);
    return j;
}

Json summary_fields(const AveragedSummary& s) {
    Json j;
    j["runs"] = s.runs;
    j["mean_lambda_ratio"] = s.mean_lambda_ratio;
    j["mean_cv"] = s.mean_cv;
    j["mean_correlation"] = s.mean_correlation ? Json(*s.mean_correlation) : Json(nullptr);
    j["correlated_runs"] = s.correlated_runs;
    return j;
}

}  // namespace

std::string summary_json(const ExperimentConfig& cfg, const AveragedSummary& summary) {
    Json j;
    j["config"] = config_json(cfg);
    j["summary"] = summary_fields(summary);
    return j.dump(2) + "\n";
}

std::string sweep_json(const ExperimentConfig& cfg, std::span<const SweepRow> rows) {
    Json j;
    j["config"] = config_json(cfg);
    Json out_rows = Json::array();
    for (const auto& row : rows) {
        Json r;
        r["param"] = row.param;
        r.update(summary_fields(row.summary));
        out_rows.push_back(std::move(r));
    }
    j["rows"] = std::move(out_rows);
    return j.dump(2) + "\n";
}

}  // namespace specnet
