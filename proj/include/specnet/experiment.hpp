#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "specnet/ba_model.hpp"
#include "specnet/metrics.hpp"
#include "specnet/spectral.hpp"
#include "specnet/ws_model.hpp"

namespace specnet {

enum class Model { BA, WS };

std::string_view to_string(Model model) noexcept;

struct ExperimentConfig {
    Model model = Model::BA;
    BAConfig ba;
    WSConfig ws;
    std::size_t runs = 100;
    std::uint64_t master_seed = 0;
    /// m values for BA, beta values for WS. Empty means "just the base config".
    std::vector<double> sweep;
    PowerIterationConfig power;
    /// Worker threads for independent runs; 0 picks the hardware concurrency.
    /// Results do not depend on this value.
    unsigned threads = 1;

    /// Throws Error{InvalidConfig}.
    void validate() const;
};

struct RunSeed {
    std::size_t run_index = 0;
    std::uint64_t derived_seed = 0;
};

std::vector<RunSeed> run_seeds(std::uint64_t master_seed, std::size_t runs);

/// Runs fn(0) .. fn(count - 1) on up to `threads` workers. The first
/// exception by index is rethrown after all workers stop.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

/// One BA evolution, snapshotted after the initial wiring and after every
/// node introduction.
TimeSeries run_ba_once(const BAConfig& cfg, std::uint64_t seed, const PowerIterationConfig& power = {});

/// Called from inside each WS run after every completed rewiring; must be
/// safe to call concurrently when threads > 1.
using WSProbe = std::function<void(std::size_t run_index, const RewireEvent&, const Graph&)>;

struct WSRun {
    /// Step 0 is the regular lattice, then one record per completed
    /// rewiring, keyed by its event index.
    TimeSeries series;
    std::size_t attempts = 0;
    std::size_t skipped = 0;
};

WSRun run_ws_once(const WSConfig& cfg, std::uint64_t seed, const PowerIterationConfig& power = {},
                  const std::function<void(const RewireEvent&, const Graph&)>& probe = {});

struct ExperimentResult {
    AveragedSummary summary;
    std::vector<TimeSeries> runs;  // by run index
};

/// `cfg.runs` BA evolutions of `cfg.ba`, averaged pointwise.
ExperimentResult run_ba_experiment(const ExperimentConfig& cfg);

/// `cfg.runs` WS rewirings of `cfg.ws`, averaged on final values.
ExperimentResult run_ws_experiment(const ExperimentConfig& cfg, const WSProbe& probe = {});

struct SweepRow {
    double param = 0.0;
    AveragedSummary summary;
};

/// One row per m in `cfg.sweep` (or cfg.ba.links_per_node if the sweep is
/// empty): mean final lambda_ratio, mean final cv, mean within-run
/// correlation.
std::vector<SweepRow> run_ba_table(const ExperimentConfig& cfg);

/// One row per beta in `cfg.sweep` (or cfg.ws.rewiring_probability).
std::vector<SweepRow> run_ws_sweep(const ExperimentConfig& cfg, const WSProbe& probe = {});

}  // namespace specnet
