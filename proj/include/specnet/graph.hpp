#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "specnet/errors.hpp"

namespace specnet {

using NodeId = std::uint32_t;

/// Undirected edge, normalized so that u < v.
struct Edge {
    NodeId u = 0;
    NodeId v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected simple graph with dense 0-based node IDs.
///
/// Each node keeps a sorted neighbor vector, which acts as a set: no
/// self-loops, no parallel edges, and v is listed under u exactly when u is
/// listed under v. Node IDs are handed out in creation order, so a node's ID
/// doubles as its introduction time in growth models.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t node_count);

    std::size_t node_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    /// Appends an isolated node and returns its ID (the previous node count).
    NodeId add_node();

    /// Throws Error{SelfLoop | DuplicateEdge | OutOfRange}.
    void add_edge(NodeId u, NodeId v);

    /// Throws Error{MissingEdge | OutOfRange}.
    void remove_edge(NodeId u, NodeId v);

    bool has_edge(NodeId u, NodeId v) const;

    std::size_t degree(NodeId u) const;

    /// Sorted ascending.
    std::span<const NodeId> neighbors(NodeId u) const;

    std::vector<std::size_t> degrees() const;

    /// All edges with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_node(NodeId u) const;

    std::vector<std::vector<NodeId>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Population statistics of a degree sequence.
struct DegreeStats {
    std::size_t k_min = 0;
    std::size_t k_max = 0;
    double k_avg = 0.0;
    double k_sd = 0.0;  // population standard deviation

    /// k_sd / k_avg. Throws Error{ZeroMeanDegree} on an edgeless graph.
    double cv() const;
};

/// Throws Error{EmptyGraph} when the graph has no nodes.
DegreeStats degree_stats(const Graph& g);

/// Edge-list text: one "u v" pair per line, '#' lines are comments, and an
/// optional "# nodes: <n>" header fixes the node count (otherwise 1 + max ID).
/// Throws ParseError carrying the offending line.
Graph parse_edge_list(std::string_view text);

/// Writes the "# nodes:" header followed by edges in sorted order, so isolated
/// nodes survive a round trip.
std::string write_edge_list(const Graph& g);

}  // namespace specnet
