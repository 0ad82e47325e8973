#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "specnet/spectral.hpp"

using namespace specnet;

namespace {

void check_bound(const Graph& g) {
    if (g.edge_count() == 0) return;
    const auto s = degree_stats(g);
    const double lambda = power_iteration(g).spectral_radius;
    CHECK(static_cast<double>(s.k_min) <= s.k_avg);
    CHECK(s.k_avg - 1e-6 <= lambda);
    CHECK(lambda <= static_cast<double>(s.k_max) + 1e-6);
}

Graph odd_cycle_with_pendant() {
    Graph g(6);
    for (NodeId i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
    g.add_edge(0, 5);
    return g;
}

}  // namespace

TEST_CASE("power iteration on closed-form graphs") {
    CHECK(power_iteration(oracle::cycle(5)).spectral_radius == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(power_iteration(oracle::complete(6)).spectral_radius == doctest::Approx(5.0).epsilon(1e-9));
    // Star with n-1 leaves: sqrt(n-1).
    CHECK(power_iteration(oracle::star(4)).spectral_radius == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(power_iteration(oracle::star(9)).spectral_radius == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(power_iteration(oracle::path(3)).spectral_radius == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));

    const auto zero = power_iteration(Graph(4));
    CHECK(zero.spectral_radius == 0.0);
    CHECK(zero.converged);
}

TEST_CASE("power iteration matches the trace-moment oracle on 8-node random graphs") {
    std::mt19937 gen(8);
    for (int i = 0; i < 10; ++i) {
        const Graph g = oracle::erdos_renyi_aperiodic(8, 0.5, gen);
        const double expected = oracle::trace_moment_radius(g);
        CHECK(std::abs(power_iteration(g).spectral_radius - expected) <= 1e-3);
    }
}

TEST_CASE("trace oracle bias on graphs with a repeated extreme eigenvalue") {
    // K2 + K2: eigenvalues ±1 each twice, trace(A^128) = 4, so the oracle
    // reads 4^(1/128) rather than 1. Power iteration is exact.
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    CHECK(oracle::trace_moment_radius(g) == doctest::Approx(std::pow(4.0, 1.0 / 128.0)));
    CHECK(power_iteration(g).spectral_radius == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eigenvector is a nonnegative unit vector") {
    std::mt19937 gen(11);
    for (int i = 0; i < 50; ++i) {
        const Graph g = oracle::erdos_renyi(2 + gen() % 30, 0.2, gen);
        const auto r = power_iteration(g);
        const double norm = std::sqrt(std::inner_product(r.principal_eigenvector.begin(),
                                                         r.principal_eigenvector.end(),
                                                         r.principal_eigenvector.begin(), 0.0));
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-9));
        for (double x : r.principal_eigenvector) CHECK(x >= 0.0);
        CHECK(r.principal_eigenvector.size() == g.node_count());
    }
}

TEST_CASE("eigenpair residual on connected non-bipartite graphs") {
    std::mt19937 gen(12);
    for (int i = 0; i < 100; ++i) {
        const Graph g = oracle::erdos_renyi_aperiodic(4 + gen() % 30, 0.3, gen);
        const auto r = power_iteration(g);
        REQUIRE(r.converged);
        CHECK(oracle::eigen_residual(g, r.principal_eigenvector, r.spectral_radius) <= 1e-5 * r.spectral_radius);
    }
}

TEST_CASE("spectral bound k_avg <= lambda <= k_max") {
    std::mt19937 gen(13);
    for (int i = 0; i < 200; ++i) check_bound(oracle::erdos_renyi(1 + gen() % 50, 0.05 + 0.9 * (gen() % 100) / 100.0, gen));
    check_bound(oracle::star(20));
    check_bound(oracle::path(40));
    check_bound(odd_cycle_with_pendant());
}

TEST_CASE("spectral_radius_ratio") {
    CHECK(spectral_radius_ratio(oracle::cycle(8)) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(spectral_radius_ratio(oracle::complete(5)) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(spectral_radius_ratio(oracle::star(4)) == doctest::Approx(1.25).epsilon(1e-9));
    CHECK(spectral_radius_ratio(oracle::path(3)) == doctest::Approx(std::sqrt(2.0) * 0.75).epsilon(1e-9));
    CHECK(spectral_radius_ratio(oracle::path(3)) == doctest::Approx(1.0607).epsilon(1e-4));

    try {
        spectral_radius_ratio(Graph(3));
        FAIL("expected ZeroMeanDegree");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ZeroMeanDegree);
    }
}

TEST_CASE("ratio is unchanged by taking two disjoint copies") {
    std::mt19937 gen(14);
    for (int i = 0; i < 20; ++i) {
        const Graph g = oracle::erdos_renyi_aperiodic(5 + gen() % 15, 0.4, gen);
        CHECK(std::abs(spectral_radius_ratio(g) - spectral_radius_ratio(oracle::disjoint_double(g))) <= 1e-6);
    }
}

TEST_CASE("completing a star raises the spectral radius") {
    Graph g(5);
    g.add_edge(1, 0);
    g.add_edge(0, 2);
    double prev = power_iteration(g).spectral_radius;  // P3 plus isolated nodes
    for (NodeId leaf : {3u, 4u}) {
        g.add_edge(0, leaf);
        const double next = power_iteration(g).spectral_radius;
        CHECK(next > prev);
        prev = next;
    }
    CHECK(prev == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("disconnected graphs report the largest component") {
    Graph g(9);
    for (NodeId v = 1; v <= 4; ++v) g.add_edge(0, v);  // star, radius 2
    g.add_edge(5, 6);                                  // K2, radius 1
    g.add_edge(7, 8);
    CHECK(power_iteration(g).spectral_radius == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("shifted retry when the plain iteration stalls") {
    const Graph g = odd_cycle_with_pendant();
    const double reference = power_iteration(g).spectral_radius;
    CHECK_FALSE(power_iteration(g).shifted);

    const auto r = power_iteration(g, {1e-10, 10});
    CHECK(r.shifted);
    CHECK(r.converged);
    CHECK(r.spectral_radius == doctest::Approx(reference).epsilon(1e-8));
}

TEST_CASE("non-convergence carries the partial result") {
    try {
        power_iteration(odd_cycle_with_pendant(), {1e-10, 3});
        FAIL("expected NotConvergedError");
    } catch (const NotConvergedError& e) {
        CHECK(e.code() == Errc::NotConverged);
        CHECK_FALSE(e.partial().converged);
        CHECK(e.partial().iterations == 3);
        CHECK(e.partial().spectral_radius > 1.5);
    }
}

TEST_CASE("invalid inputs") {
    CHECK_THROWS_AS(power_iteration(Graph(0)), Error);
    CHECK_THROWS_AS(power_iteration(oracle::cycle(4), {0.0, 10}), Error);
    CHECK_THROWS_AS(power_iteration(oracle::cycle(4), {1e-10, 0}), Error);
}
