#include "specnet/ws_model.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace specnet {

namespace {

Edge normalized(NodeId a, NodeId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

}  // namespace

void WSConfig::validate() const {
    if (nodes_per_ring < 3) {
        throw Error(Errc::InvalidConfig, "nodes per ring must be at least 3");
    }
    if (!(rewiring_probability >= 0.0 && rewiring_probability <= 1.0)) {
        throw Error(Errc::InvalidConfig, "rewiring probability must lie in [0, 1]");
    }
}

std::vector<Edge> ws_initial_edges(std::size_t nodes_per_ring) {
    if (nodes_per_ring < 3) {
        throw Error(Errc::TooFewNodes, "ring lattice needs at least 3 nodes per ring, got " +
                                           std::to_string(nodes_per_ring));
    }
    const auto n = static_cast<NodeId>(nodes_per_ring);
    std::vector<Edge> edges;
    edges.reserve(4 * nodes_per_ring);
    for (NodeId i = 0; i < n; ++i) edges.push_back(normalized(i, (i + 1) % n));
    for (NodeId i = 0; i < n; ++i) edges.push_back(normalized(n + i, n + (i + 1) % n));
    for (NodeId i = 0; i < n; ++i) {
        edges.push_back(normalized(i, n + i));
        edges.push_back(normalized(i, n + (i + 1) % n));
    }
    return edges;
}

Graph ws_initialize(std::size_t nodes_per_ring) {
    const auto edges = ws_initial_edges(nodes_per_ring);
    Graph g(2 * nodes_per_ring);
    for (const auto& e : edges) g.add_edge(e.u, e.v);
    return g;
}

std::vector<RewireEvent> ws_rewire(Graph& g, double beta, Rng& rng, const WSObserver& observer) {
    if (g.node_count() % 2 != 0) {
        throw Error(Errc::InvalidConfig, "rewiring expects a two-ring lattice with 2N nodes");
    }
    WSConfig{g.node_count() / 2, beta}.validate();

    const auto initial = ws_initial_edges(g.node_count() / 2);
    const std::size_t n = g.node_count();

    std::vector<RewireEvent> events;
    std::vector<NodeId> candidates;
    candidates.reserve(n);
    for (const Edge& e : initial) {
        if (rng.uniform_open_closed() > beta) continue;

        RewireEvent ev;
        ev.original_edge = e;
        ev.event_index = events.size() + 1;

        candidates.clear();
        const auto nbrs = g.neighbors(e.u);
        auto it = nbrs.begin();
        for (NodeId w = 0; w < n; ++w) {
            while (it != nbrs.end() && *it < w) ++it;
            if (w == e.u || w == e.v || (it != nbrs.end() && *it == w)) continue;
            candidates.push_back(w);
        }
        if (candidates.empty()) {
            ev.skipped = true;
            events.push_back(ev);
            continue;
        }

        ev.new_target = candidates[rng.below(candidates.size())];
        g.remove_edge(e.u, e.v);
        g.add_edge(e.u, ev.new_target);
        events.push_back(ev);
        if (observer) observer(ev, g);
    }
    return events;
}

}  // namespace specnet
