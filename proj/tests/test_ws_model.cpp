#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "specnet/spectral.hpp"
#include "specnet/ws_model.hpp"

using namespace specnet;

TEST_CASE("two-ring lattice") {
    SUBCASE("N = 50 has 100 nodes, 200 edges, degree 4") {
        const Graph g = ws_initialize(50);
        CHECK(g.node_count() == 100);
        CHECK(g.edge_count() == 200);
        for (auto d : g.degrees()) CHECK(d == 4);
    }
    SUBCASE("N = 3 edge set") {
        const Graph g = ws_initialize(3);
        const std::vector<Edge> expected{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 4},
                                         {1, 5}, {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};
        CHECK(g.edges() == expected);
        CHECK(ws_initial_edges(3).size() == 12);
    }
    SUBCASE("regular for every N") {
        for (std::size_t n : {3u, 4u, 5u, 10u, 37u}) {
            const Graph g = ws_initialize(n);
            CHECK(g.edge_count() == 4 * n);
            CHECK(degree_stats(g).cv() == 0.0);
            CHECK(spectral_radius_ratio(g) == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
    SUBCASE("construction order") {
        const auto e = ws_initial_edges(4);
        CHECK(e[0] == Edge{0, 1});
        CHECK(e[3] == Edge{0, 3});  // outer wrap-around
        CHECK(e[4] == Edge{4, 5});
        CHECK(e[8] == Edge{0, 4});
        CHECK(e[9] == Edge{0, 5});
        CHECK(e[15] == Edge{3, 4});
        for (const auto& edge : e) CHECK(edge.u < edge.v);
    }
    SUBCASE("too few nodes") {
        try {
            ws_initialize(2);
            FAIL("expected TooFewNodes");
        } catch (const Error& err) {
            CHECK(err.code() == Errc::TooFewNodes);
        }
    }
}

TEST_CASE("rewiring with beta = 0 leaves the lattice untouched") {
    Rng rng(1);
    Graph g = ws_initialize(50);
    const Graph before = g;
    const auto events = ws_rewire(g, 0.0, rng);
    CHECK(events.empty());
    CHECK(g == before);
}

TEST_CASE("rewiring with beta = 1 attempts every initial edge") {
    Rng rng(2);
    Graph g = ws_initialize(50);
    const auto initial = ws_initial_edges(50);
    const auto events = ws_rewire(g, 1.0, rng);
    REQUIRE(events.size() == 200);
    for (std::size_t i = 0; i < events.size(); ++i) {
        CHECK(events[i].original_edge == initial[i]);
        CHECK(events[i].event_index == i + 1);
    }
}

TEST_CASE("about half the edges rewire at beta = 0.5") {
    double total = 0.0;
    for (std::uint64_t run = 0; run < 100; ++run) {
        Rng rng(derive_seed(5, run));
        Graph g = ws_initialize(50);
        total += static_cast<double>(ws_rewire(g, 0.5, rng).size());
    }
    CHECK(std::abs(total / 100.0 - 100.0) <= 10.0);
}

TEST_CASE("per-event invariants") {
    for (double beta : {0.2, 0.5, 1.0}) {
        for (std::uint64_t run = 0; run < 10; ++run) {
            Rng rng(derive_seed(11, run));
            Graph g = ws_initialize(20);
            Graph prev = g;
            std::set<std::pair<NodeId, NodeId>> created;
            ws_rewire(g, beta, rng, [&](const RewireEvent& ev, const Graph& cur) {
                const NodeId u = ev.original_edge.u;
                const NodeId v = ev.original_edge.v;
                const NodeId w = ev.new_target;
                CHECK(u < v);
                CHECK(w != u);
                CHECK(w != v);
                CHECK_FALSE(prev.has_edge(u, w));
                CHECK(prev.has_edge(u, v));
                CHECK_FALSE(cur.has_edge(u, v));
                CHECK(cur.has_edge(u, w));

                CHECK(cur.edge_count() == 80);
                std::size_t sum = 0;
                for (auto d : cur.degrees()) sum += d;
                CHECK(sum == 160);

                CHECK(cur.degree(u) == prev.degree(u));
                CHECK(cur.degree(v) + 1 == prev.degree(v));
                CHECK(cur.degree(w) == prev.degree(w) + 1);
                for (NodeId x = 0; x < cur.node_count(); ++x) {
                    if (x != v && x != w) CHECK(cur.degree(x) == prev.degree(x));
                }
                created.insert({std::min(u, w), std::max(u, w)});
                prev = cur;
            });
            // Created edges are never taken away again.
            for (const auto& [a, b] : created) CHECK(g.has_edge(a, b));
            CHECK(degree_stats(g).k_avg == 4.0);
        }
    }
}

TEST_CASE("skips when u is adjacent to every other node") {
    // N = 3 leaves one eligible target per attempt until some node gains a
    // fifth neighbor, after which its edges can have none.
    std::size_t skipped = 0;
    for (std::uint64_t run = 0; run < 200; ++run) {
        Rng rng(derive_seed(3, run));
        Graph g = ws_initialize(3);
        const auto events = ws_rewire(g, 1.0, rng);
        CHECK(events.size() == 12);
        for (const auto& ev : events) {
            if (!ev.skipped) continue;
            ++skipped;
            CHECK(g.has_edge(ev.original_edge.u, ev.original_edge.v));
        }
        CHECK(g.edge_count() == 12);
    }
    CHECK(skipped > 0);
}

TEST_CASE("rewiring rejects bad input") {
    Rng rng(4);
    Graph g = ws_initialize(5);
    CHECK_THROWS_AS(ws_rewire(g, 1.5, rng), Error);
    CHECK_THROWS_AS(ws_rewire(g, -0.1, rng), Error);
    Graph odd(7);
    CHECK_THROWS_AS(ws_rewire(odd, 0.5, rng), Error);
}
