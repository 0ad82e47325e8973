#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "specnet/graph.hpp"
#include "specnet/spectral.hpp"

namespace specnet {

/// Neumaier-compensated running sum; the result does not depend on the
/// order of additions beyond the last few ulps.
class CompensatedSum {
public:
    void add(double x) noexcept;
    double value() const noexcept { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

double compensated_mean(std::span<const double> values);

/// Degree-variation metrics of the graph at one point of its evolution.
struct EvolutionRecord {
    std::size_t step = 0;
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    double lambda_ratio = 0.0;  // λ_sp / k_avg
    double cv = 0.0;            // k_sd / k_avg
};

/// Records in strictly increasing step order.
class TimeSeries {
public:
    /// Throws Error{StepMismatch} if `r.step` does not exceed the last step.
    void push(const EvolutionRecord& r);

    const std::vector<EvolutionRecord>& records() const noexcept { return records_; }
    bool empty() const noexcept { return records_.empty(); }
    std::size_t size() const noexcept { return records_.size(); }
    const EvolutionRecord& back() const { return records_.back(); }

    std::vector<double> lambda_ratios() const;
    std::vector<double> cvs() const;

private:
    std::vector<EvolutionRecord> records_;
};

/// Pointwise mean over runs at one step.
struct StepMean {
    std::size_t step = 0;
    std::size_t node_count = 0;
    double edge_count = 0.0;
    double lambda_ratio = 0.0;
    double cv = 0.0;
};

struct AveragedSummary {
    std::size_t runs = 0;
    double mean_lambda_ratio = 0.0;  // of final values
    double mean_cv = 0.0;            // of final values
    /// Mean of per-run correlations, over runs where it is defined; empty
    /// when no run has a defined correlation.
    std::optional<double> mean_correlation;
    std::size_t correlated_runs = 0;
    /// Present only when every run shares the same step grid.
    std::optional<std::vector<StepMean>> per_step;
};

/// Throws Error{ZeroMeanDegree} on an edgeless graph; propagates spectral
/// errors.
EvolutionRecord snapshot(const Graph& g, std::size_t step, const PowerIterationConfig& cfg = {});

/// Pearson product-moment correlation, clamped to [-1, 1].
/// Throws Error{LengthMismatch} for unequal lengths and Error{ConstantSeries}
/// when either series is constant or shorter than 2.
double pearson(std::span<const double> x, std::span<const double> y);

/// pearson(), with an empty result where it is undefined (constant series).
std::optional<double> try_pearson(std::span<const double> x, std::span<const double> y);

/// Correlation between the lambda_ratio and cv series of one run.
std::optional<double> series_correlation(const TimeSeries& series);

/// Averages runs sharing one step grid: final-value means, mean per-run
/// correlation, and pointwise means. Throws Error{StepMismatch} when step
/// sequences differ, Error{InvalidConfig} on an empty list or empty series.
AveragedSummary average_runs(std::span<const TimeSeries> runs);

/// Same as average_runs but accepts ragged step grids; `per_step` is left
/// empty.
AveragedSummary average_final_values(std::span<const TimeSeries> runs);

}  // namespace specnet
