#include "specnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace specnet {

void CompensatedSum::add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
        compensation_ += (sum_ - t) + x;
    } else {
        compensation_ += (x - t) + sum_;
    }
    sum_ = t;
}

double compensated_mean(std::span<const double> values) {
    CompensatedSum s;
    for (double v : values) s.add(v);
    return s.value() / static_cast<double>(values.size());
}

void TimeSeries::push(const EvolutionRecord& r) {
    if (!records_.empty() && r.step <= records_.back().step) {
        throw Error(Errc::StepMismatch, "time series steps must increase: " + std::to_string(r.step) +
                                            " after " + std::to_string(records_.back().step));
    }
    records_.push_back(r);
}

std::vector<double> TimeSeries::lambda_ratios() const {
    std::vector<double> out;
    out.reserve(records_.size());
    for (const auto& r : records_) out.push_back(r.lambda_ratio);
    return out;
}

std::vector<double> TimeSeries::cvs() const {
    std::vector<double> out;
    out.reserve(records_.size());
    for (const auto& r : records_) out.push_back(r.cv);
    return out;
}

EvolutionRecord snapshot(const Graph& g, std::size_t step, const PowerIterationConfig& cfg) {
    const DegreeStats stats = degree_stats(g);
    const double cv = stats.cv();
    const SpectralResult spectral = power_iteration(g, cfg);

    EvolutionRecord r;
    r.step = step;
    r.node_count = g.node_count();
    r.edge_count = g.edge_count();
    r.lambda_ratio = spectral.spectral_radius / stats.k_avg;
    r.cv = cv;
    return r;
}

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw Error(Errc::LengthMismatch, "pearson: series lengths differ (" + std::to_string(x.size()) +
                                              " vs " + std::to_string(y.size()) + ")");
    }
    if (x.size() < 2) throw Error(Errc::ConstantSeries, "pearson: need at least 2 points");

    const double mx = compensated_mean(x);
    const double my = compensated_mean(y);
    CompensatedSum sxy, sxx, syy;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy.add(dx * dy);
        sxx.add(dx * dx);
        syy.add(dy * dy);
    }
    if (sxx.value() <= 0.0 || syy.value() <= 0.0) {
        throw Error(Errc::ConstantSeries, "pearson: correlation undefined for a constant series");
    }
    const double r = sxy.value() / std::sqrt(sxx.value() * syy.value());
    return std::clamp(r, -1.0, 1.0);
}

std::optional<double> try_pearson(std::span<const double> x, std::span<const double> y) {
    try {
        return pearson(x, y);
    } catch (const Error& e) {
        if (e.code() == Errc::ConstantSeries) return std::nullopt;
        throw;
    }
}

std::optional<double> series_correlation(const TimeSeries& series) {
    const auto lr = series.lambda_ratios();
    const auto cv = series.cvs();
    return try_pearson(lr, cv);
}

namespace {

AveragedSummary summarize_finals(std::span<const TimeSeries> runs) {
    if (runs.empty()) throw Error(Errc::InvalidConfig, "no runs to average");
    std::vector<double> finals_lr;
    std::vector<double> finals_cv;
    std::vector<double> correlations;
    for (const auto& run : runs) {
        if (run.empty()) throw Error(Errc::InvalidConfig, "cannot average an empty time series");
        finals_lr.push_back(run.back().lambda_ratio);
        finals_cv.push_back(run.back().cv);
        if (auto c = series_correlation(run)) correlations.push_back(*c);
    }

    AveragedSummary s;
    s.runs = runs.size();
    s.mean_lambda_ratio = compensated_mean(finals_lr);
    s.mean_cv = compensated_mean(finals_cv);
    s.correlated_runs = correlations.size();
    if (!correlations.empty()) s.mean_correlation = compensated_mean(correlations);
    return s;
}

}  // namespace

AveragedSummary average_runs(std::span<const TimeSeries> runs) {
    AveragedSummary s = summarize_finals(runs);

    const auto& grid = runs.front().records();
    for (const auto& run : runs) {
        const auto& recs = run.records();
        if (recs.size() != grid.size()) {
            throw Error(Errc::StepMismatch, "runs have different numbers of steps");
        }
        for (std::size_t i = 0; i < recs.size(); ++i) {
            if (recs[i].step != grid[i].step) {
                throw Error(Errc::StepMismatch, "runs disagree at step index " + std::to_string(i));
            }
        }
    }

    std::vector<StepMean> means(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CompensatedSum edges, lr, cv;
        for (const auto& run : runs) {
            const auto& r = run.records()[i];
            edges.add(static_cast<double>(r.edge_count));
            lr.add(r.lambda_ratio);
            cv.add(r.cv);
        }
        const auto k = static_cast<double>(runs.size());
        means[i] = {grid[i].step, grid[i].node_count, edges.value() / k, lr.value() / k, cv.value() / k};
    }
    s.per_step = std::move(means);
    return s;
}

AveragedSummary average_final_values(std::span<const TimeSeries> runs) {
    return summarize_finals(runs);
}

}  // namespace specnet
