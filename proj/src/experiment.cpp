#include "specnet/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace specnet {

std::string_view to_string(Model model) noexcept {
    return model == Model::BA ? "ba" : "ws";
}

void ExperimentConfig::validate() const {
    if (runs < 1) throw Error(Errc::InvalidConfig, "runs must be at least 1");
    if (model == Model::BA) {
        ba.validate();
        for (double m : sweep) {
            if (!(m >= 1.0) || m != std::floor(m)) {
                throw Error(Errc::InvalidConfig, "BA sweep values must be integers >= 1");
            }
        }
    } else {
        ws.validate();
        for (double beta : sweep) {
            if (!(beta >= 0.0 && beta <= 1.0)) {
                throw Error(Errc::InvalidConfig, "WS sweep values must lie in [0, 1]");
            }
        }
    }
}

std::vector<RunSeed> run_seeds(std::uint64_t master_seed, std::size_t runs) {
    std::vector<RunSeed> seeds(runs);
    for (std::size_t i = 0; i < runs; ++i) seeds[i] = {i, derive_seed(master_seed, i)};
    return seeds;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::size_t failed_index = count;
    std::exception_ptr failure;

    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (i < failed_index) {
                    failed_index = i;
                    failure = std::current_exception();
                }
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
}

TimeSeries run_ba_once(const BAConfig& cfg, std::uint64_t seed, const PowerIterationConfig& power) {
    Rng rng(seed);
    TimeSeries series;
    ba_evolve(cfg, rng, [&](std::size_t step, const Graph& g) { series.push(snapshot(g, step, power)); });
    return series;
}

WSRun run_ws_once(const WSConfig& cfg, std::uint64_t seed, const PowerIterationConfig& power,
                  const std::function<void(const RewireEvent&, const Graph&)>& probe) {
    cfg.validate();
    Rng rng(seed);
    Graph g = ws_initialize(cfg.nodes_per_ring);

    WSRun run;
    run.series.push(snapshot(g, 0, power));
    const auto events = ws_rewire(g, cfg.rewiring_probability, rng, [&](const RewireEvent& ev, const Graph& cur) {
        if (probe) probe(ev, cur);
        run.series.push(snapshot(cur, ev.event_index, power));
    });
    run.attempts = events.size();
    run.skipped = static_cast<std::size_t>(
        std::count_if(events.begin(), events.end(), [](const RewireEvent& e) { return e.skipped; }));
    return run;
}

ExperimentResult run_ba_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const auto seeds = run_seeds(cfg.master_seed, cfg.runs);
    ExperimentResult result;
    result.runs.resize(cfg.runs);
    parallel_for(cfg.runs, cfg.threads, [&](std::size_t i) {
        result.runs[i] = run_ba_once(cfg.ba, seeds[i].derived_seed, cfg.power);
    });
    result.summary = average_runs(result.runs);
    return result;
}

ExperimentResult run_ws_experiment(const ExperimentConfig& cfg, const WSProbe& probe) {
    cfg.validate();
    const auto seeds = run_seeds(cfg.master_seed, cfg.runs);
    ExperimentResult result;
    result.runs.resize(cfg.runs);
    parallel_for(cfg.runs, cfg.threads, [&](std::size_t i) {
        std::function<void(const RewireEvent&, const Graph&)> run_probe;
        if (probe) run_probe = [&probe, i](const RewireEvent& ev, const Graph& g) { probe(i, ev, g); };
        result.runs[i] = run_ws_once(cfg.ws, seeds[i].derived_seed, cfg.power, run_probe).series;
    });
    result.summary = average_final_values(result.runs);
    return result;
}

std::vector<SweepRow> run_ba_table(const ExperimentConfig& cfg) {
    cfg.validate();
    if (cfg.model != Model::BA) throw Error(Errc::InvalidConfig, "run_ba_table needs a BA config");
    std::vector<double> values = cfg.sweep;
    if (values.empty()) values.push_back(static_cast<double>(cfg.ba.links_per_node));

    std::vector<SweepRow> rows;
    for (double m : values) {
        ExperimentConfig point = cfg;
        point.ba.links_per_node = static_cast<std::size_t>(m);
        point.sweep.clear();
        rows.push_back({m, run_ba_experiment(point).summary});
    }
    return rows;
}

std::vector<SweepRow> run_ws_sweep(const ExperimentConfig& cfg, const WSProbe& probe) {
    cfg.validate();
    if (cfg.model != Model::WS) throw Error(Errc::InvalidConfig, "run_ws_sweep needs a WS config");
    std::vector<double> values = cfg.sweep;
    if (values.empty()) values.push_back(cfg.ws.rewiring_probability);

    std::vector<SweepRow> rows;
    for (double beta : values) {
        ExperimentConfig point = cfg;
        point.ws.rewiring_probability = beta;
        point.sweep.clear();
        rows.push_back({beta, run_ws_experiment(point, probe).summary});
    }
    return rows;
}

}  // namespace specnet
