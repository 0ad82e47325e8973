#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "specnet/graph.hpp"
#include "specnet/random.hpp"

namespace specnet {

/// Preferential-attachment growth parameters.
struct BAConfig {
    std::size_t initial_nodes = 3;  // n0
    std::size_t total_nodes = 100;  // n
    std::size_t links_per_node = 2; // m

    /// Throws Error{InvalidConfig} unless 2 <= n0 <= n and m >= 1.
    void validate() const;
};

/// P(k_i) = k_i / sum_j k_j over the nodes present in `g`.
struct AttachmentDistribution {
    std::vector<double> probabilities;
};

/// Called with (step, graph). Step is the ID of the node just introduced;
/// the first call, after the initial wiring, uses step n0 - 1.
using BAObserver = std::function<void(std::size_t, const Graph&)>;

/// Initial wiring: every node i in [0, n0) is paired once with a uniform
/// random partner j != i. A pairing that already exists (j picked i earlier)
/// is skipped. Throws Error{TooFewNodes} if n0 < 2.
Graph ba_initialize(std::size_t initial_nodes, Rng& rng);

/// Throws Error{ZeroDegreeSum} if every degree is 0.
AttachmentDistribution attachment_distribution(const Graph& g);

/// Nodes the next newcomer links to. With m >= node_count all existing nodes
/// are returned. Otherwise m distinct nodes are drawn one at a time with
/// probability proportional to their current degree, renormalized over the
/// nodes not yet drawn. Degrees stay frozen at their values in `g`.
/// Result is in draw order. Throws Error{ZeroDegreeSum}.
std::vector<NodeId> select_targets(const Graph& g, std::size_t m, Rng& rng);

/// Grows a network from ba_initialize(n0) to n nodes, linking each newcomer
/// to select_targets(graph before the newcomer, m).
Graph ba_evolve(const BAConfig& cfg, Rng& rng, const BAObserver& observer = {});

}  // namespace specnet
