#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "specnet/experiment.hpp"
#include "specnet/metrics.hpp"

namespace specnet {

inline constexpr const char* kTimeSeriesHeader = "step,node_count,edge_count,lambda_ratio,cv";
inline constexpr const char* kSweepHeader = "param,mean_lambda_ratio,mean_cv,mean_correlation,runs";
/// Written in place of a correlation that is undefined for every run.
inline constexpr const char* kUndefinedField = "NA";

/// printf-style %.12g.
std::string format_real(double value);

std::string timeseries_csv(const TimeSeries& series);
std::string timeseries_csv(std::span<const StepMean> means);
std::string sweep_csv(std::span<const SweepRow> rows);

/// Summary document: resolved config (including master seed, RNG algorithm
/// and per-run derived seeds) plus final means. Serialized with a fixed key
/// order so identical inputs give identical bytes.
std::string summary_json(const ExperimentConfig& cfg, const AveragedSummary& summary);
std::string sweep_json(const ExperimentConfig& cfg, std::span<const SweepRow> rows);

}  // namespace specnet
