#include "specnet/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace specnet {

namespace {

/// Compressed neighbor lists; contiguous storage for the inner product loop.
struct Csr {
    std::vector<std::size_t> offsets;
    std::vector<NodeId> targets;

    explicit Csr(const Graph& g) {
        const std::size_t n = g.node_count();
        offsets.resize(n + 1, 0);
        targets.reserve(2 * g.edge_count());
        for (NodeId u = 0; u < n; ++u) {
            const auto nbrs = g.neighbors(u);
            targets.insert(targets.end(), nbrs.begin(), nbrs.end());
            offsets[u + 1] = targets.size();
        }
    }

    // y = A x + shift * x
    void multiply(const std::vector<double>& x, std::vector<double>& y, double shift) const {
        const std::size_t n = x.size();
        for (std::size_t u = 0; u < n; ++u) {
            double acc = shift * x[u];
            for (std::size_t k = offsets[u]; k < offsets[u + 1]; ++k) acc += x[targets[k]];
            y[u] = acc;
        }
    }
};

double sum_squares(const std::vector<double>& v) {
    double s = 0.0;
    for (double e : v) s += e * e;
    return s;
}

// ‖y - λ x‖₂ / ‖x‖₂ with y = A x.
double eigen_residual(const std::vector<double>& x, const std::vector<double>& y, double lambda) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = y[i] - lambda * x[i];
        s += d * d;
    }
    return std::sqrt(s / sum_squares(x));
}

// Iterates are kept scaled to max entry 1 rather than unit L2 norm; the
// reported norm ‖A x‖₂ / ‖x‖₂ is the same quantity as ‖A x̂‖₂ for the unit
// vector x̂, and on a regular graph every step stays in small integers, so
// the radius comes out exact.
//
// The norm settles quadratically faster than the vector, so once it passes
// the tolerance the vector gets a bounded polish: keep stepping while
// ‖A x̂ - λ x̂‖ is above kPolishTarget·λ and still shrinking, for at most as
// many steps again. Bipartite graphs stall at once and stop.
constexpr double kPolishTarget = 1e-8;

SpectralResult iterate(const Csr& a, std::size_t n, const PowerIterationConfig& cfg, double shift) {
    std::vector<double> x(n, 1.0);
    std::vector<double> y(n, 0.0);

    a.multiply(x, y, shift);
    double prev = std::sqrt(sum_squares(y) / sum_squares(x));

    SpectralResult r;
    r.residual = prev;
    std::size_t polish_until = 0;
    double last_fit = 0.0;
    for (std::size_t it = 1; it <= cfg.max_iterations; ++it) {
        const double peak = *std::max_element(y.begin(), y.end());
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / peak;
        a.multiply(x, y, shift);
        const double norm = std::sqrt(sum_squares(y) / sum_squares(x));
        const double step = std::abs(norm - prev);
        r.iterations = it;
        r.residual = step;
        prev = norm;

        if (!r.converged) {
            if (step > cfg.tolerance) continue;
            r.converged = true;
            polish_until = 2 * it;
            last_fit = eigen_residual(x, y, norm);
            if (last_fit <= kPolishTarget * norm) break;
            continue;
        }
        const double fit = eigen_residual(x, y, norm);
        if (fit <= kPolishTarget * norm || fit >= last_fit || it >= polish_until) break;
        last_fit = fit;
    }

    const double length = std::sqrt(sum_squares(x));
    for (double& e : x) e /= length;
    r.spectral_radius = prev - shift;
    r.principal_eigenvector = std::move(x);
    r.shifted = shift != 0.0;
    return r;
}

}  // namespace

NotConvergedError::NotConvergedError(SpectralResult partial)
    : Error(Errc::NotConverged,
            "power iteration did not converge after " + std::to_string(partial.iterations) +
                " iterations (residual " + std::to_string(partial.residual) + ")"),
      partial_(std::move(partial)) {}

SpectralResult power_iteration(const Graph& g, const PowerIterationConfig& cfg) {
    const std::size_t n = g.node_count();
    if (n == 0) throw Error(Errc::EmptyGraph, "power iteration on an empty graph");
    if (!(cfg.tolerance > 0.0) || cfg.max_iterations < 1) {
        throw Error(Errc::InvalidConfig, "power iteration needs tolerance > 0 and max_iterations >= 1");
    }

    if (g.edge_count() == 0) {
        SpectralResult r;
        r.principal_eigenvector.assign(n, 1.0 / std::sqrt(static_cast<double>(n)));
        r.iterations = 1;
        r.converged = true;
        return r;
    }

    const Csr a(g);
    SpectralResult r = iterate(a, n, cfg, 0.0);
    if (r.converged) return r;

    SpectralResult shifted = iterate(a, n, cfg, 1.0);
    if (shifted.converged) return shifted;
    throw NotConvergedError(std::move(shifted));
}

double spectral_radius_ratio(const Graph& g, const PowerIterationConfig& cfg) {
    const double k_avg = degree_stats(g).k_avg;
    if (k_avg <= 0.0) {
        throw Error(Errc::ZeroMeanDegree, "spectral radius ratio undefined: mean degree is 0");
    }
    return power_iteration(g, cfg).spectral_radius / k_avg;
}

}  // namespace specnet
