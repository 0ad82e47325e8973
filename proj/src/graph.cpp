#include "specnet/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

namespace specnet {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::SelfLoop: return "SelfLoop";
        case Errc::DuplicateEdge: return "DuplicateEdge";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::MissingEdge: return "MissingEdge";
        case Errc::EmptyGraph: return "EmptyGraph";
        case Errc::ZeroMeanDegree: return "ZeroMeanDegree";
        case Errc::ParseError: return "ParseError";
        case Errc::NotConverged: return "NotConverged";
        case Errc::TooFewNodes: return "TooFewNodes";
        case Errc::ZeroDegreeSum: return "ZeroDegreeSum";
        case Errc::NoCandidate: return "NoCandidate";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::ConstantSeries: return "ConstantSeries";
        case Errc::StepMismatch: return "StepMismatch";
        case Errc::InvalidConfig: return "InvalidConfig";
    }
    return "Unknown";
}

Graph::Graph(std::size_t node_count) : adjacency_(node_count) {}

NodeId Graph::add_node() {
    adjacency_.emplace_back();
    return static_cast<NodeId>(adjacency_.size() - 1);
}

void Graph::check_node(NodeId u) const {
    if (u >= adjacency_.size()) {
        throw Error(Errc::OutOfRange, "node " + std::to_string(u) + " out of range (node_count " +
                                          std::to_string(adjacency_.size()) + ")");
    }
}

void Graph::add_edge(NodeId u, NodeId v) {
    check_node(u);
    check_node(v);
    if (u == v) {
        throw Error(Errc::SelfLoop, "self-loop at node " + std::to_string(u));
    }
    auto& nu = adjacency_[u];
    auto pos_u = std::lower_bound(nu.begin(), nu.end(), v);
    if (pos_u != nu.end() && *pos_u == v) {
        throw Error(Errc::DuplicateEdge,
                    "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    nu.insert(pos_u, v);
    auto& nv = adjacency_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
}

void Graph::remove_edge(NodeId u, NodeId v) {
    check_node(u);
    check_node(v);
    auto& nu = adjacency_[u];
    auto pos_u = std::lower_bound(nu.begin(), nu.end(), v);
    if (pos_u == nu.end() || *pos_u != v) {
        throw Error(Errc::MissingEdge, "no edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    nu.erase(pos_u);
    auto& nv = adjacency_[v];
    nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
    --edge_count_;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    const auto& nu = adjacency_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::size_t Graph::degree(NodeId u) const {
    check_node(u);
    return adjacency_[u].size();
}

std::span<const NodeId> Graph::neighbors(NodeId u) const {
    check_node(u);
    return adjacency_[u];
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> out;
    out.reserve(adjacency_.size());
    for (const auto& nbrs : adjacency_) out.push_back(nbrs.size());
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < adjacency_.size(); ++u) {
        for (NodeId v : adjacency_[u]) {
            if (u < v) out.push_back({u, v});
        }
    }
    return out;
}

double DegreeStats::cv() const {
    if (k_avg <= 0.0) {
        throw Error(Errc::ZeroMeanDegree, "coefficient of variation undefined: mean degree is 0");
    }
    return k_sd / k_avg;
}

DegreeStats degree_stats(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) throw Error(Errc::EmptyGraph, "degree statistics of an empty graph");

    DegreeStats s;
    s.k_min = std::numeric_limits<std::size_t>::max();
    // Integer moments keep regular graphs at exactly zero variance.
    std::uint64_t sum = 0;
    std::uint64_t sum_sq = 0;
    for (NodeId u = 0; u < n; ++u) {
        const std::size_t d = g.degree(u);
        s.k_min = std::min(s.k_min, d);
        s.k_max = std::max(s.k_max, d);
        sum += d;
        sum_sq += static_cast<std::uint64_t>(d) * d;
    }
    const auto nn = static_cast<std::uint64_t>(n);
    s.k_avg = static_cast<double>(sum) / static_cast<double>(n);
    const std::uint64_t scaled_var = nn * sum_sq - sum * sum;  // n^2 * variance, >= 0
    s.k_sd = std::sqrt(static_cast<double>(scaled_var)) / static_cast<double>(n);
    return s;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\v\f");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\v\f");
    return s.substr(first, last - first + 1);
}

std::optional<std::uint64_t> parse_uint(std::string_view token) {
    std::uint64_t value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > start) tokens.push_back(s.substr(start, i - start));
    }
    return tokens;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    constexpr std::uint64_t kMaxId = std::numeric_limits<NodeId>::max() - 1;

    struct PendingEdge {
        NodeId u;
        NodeId v;
        std::size_t line;
    };
    std::vector<PendingEdge> pending;
    std::optional<std::uint64_t> declared_nodes;
    std::size_t header_line = 0;
    std::uint64_t max_id = 0;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        const std::string_view line = trim(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;

        if (line.empty()) continue;
        if (line.front() == '#') {
            const std::string_view body = trim(line.substr(1));
            constexpr std::string_view kHeader = "nodes:";
            if (body.starts_with(kHeader)) {
                const auto n = parse_uint(trim(body.substr(kHeader.size())));
                if (!n || *n > kMaxId + 1) {
                    throw ParseError(Errc::ParseError, line_no, "malformed '# nodes:' header");
                }
                declared_nodes = n;
                header_line = line_no;
            }
            continue;
        }

        const auto tokens = split_ws(line);
        if (tokens.size() != 2) {
            throw ParseError(Errc::ParseError, line_no, "expected two node IDs");
        }
        const auto u = parse_uint(tokens[0]);
        const auto v = parse_uint(tokens[1]);
        if (!u || !v) throw ParseError(Errc::ParseError, line_no, "node IDs must be decimal integers");
        if (*u > kMaxId || *v > kMaxId) throw ParseError(Errc::OutOfRange, line_no, "node ID too large");
        max_id = std::max({max_id, *u, *v});
        pending.push_back({static_cast<NodeId>(*u), static_cast<NodeId>(*v), line_no});
    }

    std::size_t n = 0;
    if (declared_nodes) {
        n = static_cast<std::size_t>(*declared_nodes);
        for (const auto& e : pending) {
            if (e.u >= n || e.v >= n) {
                throw ParseError(Errc::OutOfRange, e.line,
                                 "node ID exceeds declared node count " + std::to_string(n) +
                                     " (header at line " + std::to_string(header_line) + ")");
            }
        }
    } else if (!pending.empty()) {
        n = static_cast<std::size_t>(max_id) + 1;
    }
    if (n == 0) throw ParseError(Errc::ParseError, line_no == 0 ? 1 : line_no, "edge list has no nodes");

    Graph g(n);
    for (const auto& e : pending) {
        try {
            g.add_edge(e.u, e.v);
        } catch (const Error& err) {
            throw ParseError(err.code(), e.line, err.what());
        }
    }
    return g;
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "# nodes: " << g.node_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

}  // namespace specnet
