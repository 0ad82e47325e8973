#include "specnet/ba_model.hpp"

#include <numeric>
#include <string>

namespace specnet {

void BAConfig::validate() const {
    if (initial_nodes < 2) {
        throw Error(Errc::InvalidConfig, "initial node count must be at least 2");
    }
    if (total_nodes < initial_nodes) {
        throw Error(Errc::InvalidConfig, "total node count must be >= initial node count");
    }
    if (links_per_node < 1) {
        throw Error(Errc::InvalidConfig, "links per node must be at least 1");
    }
}

Graph ba_initialize(std::size_t initial_nodes, Rng& rng) {
    if (initial_nodes < 2) {
        throw Error(Errc::TooFewNodes, "initial wiring needs at least 2 nodes, got " +
                                           std::to_string(initial_nodes));
    }
    Graph g(initial_nodes);
    for (NodeId i = 0; i < initial_nodes; ++i) {
        // Uniform over the n0 - 1 nodes other than i.
        auto j = static_cast<NodeId>(rng.below(initial_nodes - 1));
        if (j >= i) ++j;
        if (!g.has_edge(i, j)) g.add_edge(i, j);
    }
    return g;
}

AttachmentDistribution attachment_distribution(const Graph& g) {
    const auto degrees = g.degrees();
    const std::size_t total = std::accumulate(degrees.begin(), degrees.end(), std::size_t{0});
    if (total == 0) throw Error(Errc::ZeroDegreeSum, "attachment distribution: degree sum is 0");

    AttachmentDistribution dist;
    dist.probabilities.reserve(degrees.size());
    for (std::size_t d : degrees) {
        dist.probabilities.push_back(static_cast<double>(d) / static_cast<double>(total));
    }
    return dist;
}

std::vector<NodeId> select_targets(const Graph& g, std::size_t m, Rng& rng) {
    const std::size_t n = g.node_count();
    if (n == 0) throw Error(Errc::EmptyGraph, "no existing nodes to attach to");

    std::vector<NodeId> chosen;
    if (m >= n) {
        chosen.resize(n);
        std::iota(chosen.begin(), chosen.end(), NodeId{0});
        return chosen;
    }

    // Roulette wheel on integer weights: a draw in [0, remaining) lands on
    // node i with probability exactly k_i / remaining.
    std::vector<std::size_t> weight = g.degrees();
    std::size_t remaining = std::accumulate(weight.begin(), weight.end(), std::size_t{0});
    chosen.reserve(m);
    while (chosen.size() < m) {
        if (remaining == 0) {
            throw Error(Errc::ZeroDegreeSum, "attachment: remaining candidates all have degree 0");
        }
        std::size_t ticket = rng.below(remaining);
        NodeId pick = 0;
        while (ticket >= weight[pick]) {
            ticket -= weight[pick];
            ++pick;
        }
        chosen.push_back(pick);
        remaining -= weight[pick];
        weight[pick] = 0;
    }
    return chosen;
}

Graph ba_evolve(const BAConfig& cfg, Rng& rng, const BAObserver& observer) {
    cfg.validate();
    Graph g = ba_initialize(cfg.initial_nodes, rng);
    if (observer) observer(cfg.initial_nodes - 1, g);

    for (std::size_t t = cfg.initial_nodes; t < cfg.total_nodes; ++t) {
        const auto targets = select_targets(g, cfg.links_per_node, rng);
        const NodeId newcomer = g.add_node();
        for (NodeId target : targets) g.add_edge(newcomer, target);
        if (observer) observer(t, g);
    }
    return g;
}

}  // namespace specnet
