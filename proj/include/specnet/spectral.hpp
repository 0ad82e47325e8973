#pragma once

#include <cstddef>
#include <vector>

#include "specnet/errors.hpp"
#include "specnet/graph.hpp"

namespace specnet {

struct PowerIterationConfig {
    double tolerance = 1e-10;
    std::size_t max_iterations = 100000;
};

struct SpectralResult {
    double spectral_radius = 0.0;
    /// Unit L2 norm, entrywise >= 0.
    std::vector<double> principal_eigenvector;
    std::size_t iterations = 0;
    bool converged = false;
    /// |‖A x_{i+1}‖ - ‖A x_i‖| at termination.
    double residual = 0.0;
    /// True when the plain iteration stalled and the radius came from A + I.
    bool shifted = false;
};

/// Thrown when neither the plain nor the shifted iteration settles.
/// `partial()` holds the best estimate reached.
class NotConvergedError : public Error {
public:
    explicit NotConvergedError(SpectralResult partial);

    const SpectralResult& partial() const noexcept { return partial_; }

private:
    SpectralResult partial_;
};

/// Principal eigenpair of the adjacency matrix by power iteration.
///
/// Starts from the all-ones vector and repeats x <- A x / ‖A x‖ until two
/// successive values of ‖A x‖₂ (x taken at unit length) differ by at most
/// `cfg.tolerance`; the last value is the spectral radius. A few extra
/// steps may follow to tighten the eigenvector, never more than the count
/// already taken. If the norm has not settled after `cfg.max_iterations`,
/// the iteration is rerun once on A + I and 1 is subtracted from the result.
///
/// Edgeless graphs give radius 0 with the normalized all-ones vector.
/// Disconnected graphs give the largest component radius.
///
/// Throws Error{EmptyGraph}, NotConvergedError.
SpectralResult power_iteration(const Graph& g, const PowerIterationConfig& cfg = {});

/// λ_sp / k_avg. Throws Error{ZeroMeanDegree} on an edgeless graph.
double spectral_radius_ratio(const Graph& g, const PowerIterationConfig& cfg = {});

}  // namespace specnet
