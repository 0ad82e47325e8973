#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "specnet/graph.hpp"
#include "specnet/random.hpp"

namespace specnet {

/// Two concentric rings of `nodes_per_ring` nodes each (2N total), rewired
/// with probability `rewiring_probability`.
struct WSConfig {
    std::size_t nodes_per_ring = 50;
    double rewiring_probability = 0.5;

    /// Throws Error{InvalidConfig} unless N >= 3 and 0 <= beta <= 1.
    void validate() const;
};

/// One rewiring attempt: (u, v) -> (u, w). A skipped event had no eligible w
/// and left (u, v) in place; its `new_edge` is meaningless.
struct RewireEvent {
    Edge original_edge;   // u < v
    NodeId new_target = 0; // w
    std::size_t event_index = 0; // 1-based over attempts
    bool skipped = false;

    /// (u, w); the endpoint order is not normalized.
    Edge new_edge() const { return {original_edge.u, new_target}; }
};

using WSObserver = std::function<void(const RewireEvent&, const Graph&)>;

/// Regular 4-regular lattice on 2N nodes.
///
/// Outer ring 0..N-1 links i to (i+1) mod N, inner ring N..2N-1 links N+i to
/// N+((i+1) mod N), and each outer node i links to inner nodes N+i and
/// N+((i+1) mod N). Edges are listed by g.edges() in sorted order, but the
/// construction order (outer ring, inner ring, cross links) is what
/// ws_initial_edges() returns and what ws_rewire() walks.
///
/// Throws Error{TooFewNodes} if N < 3.
Graph ws_initialize(std::size_t nodes_per_ring);

/// Construction-ordered edge list of ws_initialize(N), each normalized u < v.
std::vector<Edge> ws_initial_edges(std::size_t nodes_per_ring);

/// Walks the initial edges once in construction order. For each (u, v) a
/// draw x uniform on (0, 1] with x <= beta replaces (u, v) by (u, w), with w
/// uniform over nodes outside {u, v} and the current neighbors of u. Edges
/// created this way are never revisited. `observer` fires after each
/// completed rewiring; skipped attempts (no eligible w) are returned but not
/// observed.
///
/// `g` must be the unmodified output of ws_initialize(N).
std::vector<RewireEvent> ws_rewire(Graph& g, double beta, Rng& rng, const WSObserver& observer = {});

}  // namespace specnet
