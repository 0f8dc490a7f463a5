#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "support/oracles.hpp"
#include "vdc/graph.hpp"

using namespace vdc;

TEST_CASE("graph construction rejects bad input") {
    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
    g.add_edge(2, 0);
    g.add_edge(0, 2);  // duplicate is a no-op
    CHECK(g.edge_count() == 1);
    CHECK(g.edges() == std::vector<Edge>{{0, 2}});
}

TEST_CASE("complement of small graphs") {
    CHECK(complement(testutil::path_graph(3)).edges() == std::vector<Edge>{{0, 2}});
    CHECK(complement(testutil::cycle_graph(4)).edges() == std::vector<Edge>{{0, 2}, {1, 3}});
}

TEST_CASE("complement is an involution and conserves edge pairs") {
    for (int n = 1; n <= 6; ++n)
        testutil::for_all_graphs(n, [n](const Graph& g) {
            CHECK(complement(complement(g)) == g);
            CHECK(g.edge_count() + complement(g).edge_count() == testutil::pair_count(n));
        });
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 7 + static_cast<int>(rng() % 10);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) g.add_edge(u, v);
        CHECK(complement(complement(g)) == g);
        CHECK(g.edge_count() + complement(g).edge_count() == testutil::pair_count(n));
    }
}

TEST_CASE("neighborhoods") {
    const Graph p3 = testutil::path_graph(3);
    CHECK(open_neighborhood(p3, 1) == std::vector<int>{0, 2});
    CHECK(closed_neighborhood(p3, 1) == std::vector<int>{0, 1, 2});
    const Graph c4 = testutil::cycle_graph(4);
    CHECK(open_neighborhood(c4, 0) == std::vector<int>{1, 3});
    CHECK(closed_neighborhood(c4, 0) == std::vector<int>{0, 1, 3});
    Graph iso(2);
    CHECK(open_neighborhood(iso, 1).empty());
    CHECK(closed_neighborhood(iso, 1) == std::vector<int>{1});
    CHECK_THROWS_AS(open_neighborhood(p3, 3), std::invalid_argument);
    CHECK_THROWS_AS(closed_neighborhood(p3, -1), std::invalid_argument);
}

TEST_CASE("delete_vertices re-indexes and records the mapping") {
    const Graph c4 = testutil::cycle_graph(4);
    const auto sub = delete_vertices(c4, {0});
    CHECK(sub.graph == testutil::path_graph(3));
    CHECK(sub.old_to_new == std::vector<int>{-1, 0, 1, 2});
    CHECK(sub.new_to_old == std::vector<int>{1, 2, 3});

    const auto same = delete_vertices(c4, {});
    CHECK(same.graph == c4);
    CHECK(same.old_to_new == std::vector<int>{0, 1, 2, 3});

    CHECK_THROWS_AS(delete_vertices(c4, {4}), std::invalid_argument);
}

TEST_CASE("deletion commutes with complementation") {
    for (int n = 1; n <= 6; ++n)
        testutil::for_all_graphs(n, [n](const Graph& g) {
            for (int v = 0; v < n; ++v) {
                const auto a = delete_vertices(complement(g), {v});
                const auto b = delete_vertices(g, {v});
                CHECK(a.graph == complement(b.graph));
                CHECK(a.new_to_old == b.new_to_old);
            }
        });
}

TEST_CASE("is_connected") {
    CHECK(is_connected(Graph(0)));
    CHECK(is_connected(Graph(1)));
    CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
    CHECK(is_connected(testutil::cycle_graph(4)));
    for (int n = 1; n <= 5; ++n)
        testutil::for_all_graphs(
            n, [](const Graph& g) { CHECK(is_connected(g) == testutil::ref_is_connected(g)); });
}

TEST_CASE("bipartition of small graphs") {
    const auto c4 = bipartition(testutil::cycle_graph(4));
    REQUIRE(c4.is_bipartite());
    CHECK(c4.parts->left == std::vector<int>{0, 2});
    CHECK(c4.parts->right == std::vector<int>{1, 3});

    const auto tri = bipartition(testutil::complete_graph(3));
    REQUIRE_FALSE(tri.is_bipartite());
    CHECK(tri.odd_cycle == std::vector<int>{0, 1, 2});

    const auto k23 = bipartition(testutil::complete_bipartite(2, 3));
    REQUIRE(k23.is_bipartite());
    CHECK(k23.parts->left.size() == 2);
    CHECK(k23.parts->right.size() == 3);
}

TEST_CASE("bipartition soundness on all graphs up to 5 vertices") {
    for (int n = 1; n <= 5; ++n)
        testutil::for_all_graphs(n, [](const Graph& g) {
            const auto r = bipartition(g);
            CHECK(r.is_bipartite() == testutil::ref_is_bipartite(g));
            if (r.is_bipartite()) {
                std::vector<char> in_left(static_cast<std::size_t>(g.vertex_count()), 0);
                std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
                for (int v : r.parts->left) {
                    in_left[static_cast<std::size_t>(v)] = 1;
                    seen[static_cast<std::size_t>(v)] = 1;
                }
                for (int v : r.parts->right) {
                    CHECK_FALSE(seen[static_cast<std::size_t>(v)]);
                    seen[static_cast<std::size_t>(v)] = 1;
                }
                for (char s : seen) CHECK(s);
                for (const auto& [u, v] : g.edges())
                    CHECK(in_left[static_cast<std::size_t>(u)] !=
                          in_left[static_cast<std::size_t>(v)]);
            } else {
                // The witness must be an odd closed walk in g.
                const auto& cyc = r.odd_cycle;
                REQUIRE(cyc.size() >= 3);
                CHECK(cyc.size() % 2 == 1);
                for (std::size_t i = 0; i < cyc.size(); ++i)
                    CHECK(g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
            }
        });
}

TEST_CASE("free_vertices") {
    CHECK(free_vertices(testutil::path_graph(3)) == std::vector<int>{0, 2});
    CHECK(free_vertices(testutil::cycle_graph(4)).empty());
    CHECK(free_vertices(testutil::path_graph(2)) == std::vector<int>{0, 1});
}

TEST_CASE("is_on_cycle examples") {
    const Graph c4 = testutil::cycle_graph(4);
    for (int v = 0; v < 4; ++v) CHECK(is_on_cycle(c4, v));
    CHECK_FALSE(is_on_cycle(testutil::path_graph(3), 1));
    const Graph tri_pendant(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    CHECK_FALSE(is_on_cycle(tri_pendant, 3));
    CHECK(is_on_cycle(tri_pendant, 0));
}

TEST_CASE("is_on_cycle agrees with literal cycle enumeration up to 6 vertices") {
    for (int n = 1; n <= 6; ++n)
        testutil::for_all_graphs(n, [n](const Graph& g) {
            for (int v = 0; v < n; ++v) CHECK(is_on_cycle(g, v) == testutil::ref_on_cycle(g, v));
        });
}

TEST_CASE("is_cut_vertex") {
    CHECK(is_cut_vertex(testutil::path_graph(3), 1));
    CHECK_FALSE(is_cut_vertex(testutil::cycle_graph(4), 0));
    CHECK(is_cut_vertex(testutil::complete_bipartite(1, 3), 0));  // star center
    CHECK_FALSE(is_cut_vertex(Graph(1), 0));
    CHECK_THROWS_AS(is_cut_vertex(Graph(4, {{0, 1}, {2, 3}}), 0), std::invalid_argument);
}

TEST_CASE("find_connectivity_preserving_cycle_vertex examples") {
    CHECK(find_connectivity_preserving_cycle_vertex(testutil::cycle_graph(4)) == 0);
    CHECK(find_connectivity_preserving_cycle_vertex(testutil::cycle_graph(6)) == 0);
    // Two 4-cycles sharing vertex 0: 0-1-2-3-0 and 0-4-5-6-0.
    const Graph shared(7, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {4, 5}, {5, 6}, {0, 6}});
    CHECK(find_connectivity_preserving_cycle_vertex(shared) == 1);
    CHECK_THROWS_AS(find_connectivity_preserving_cycle_vertex(testutil::path_graph(3)),
                    std::invalid_argument);
}

TEST_CASE("cycle-vertex selector is sound on all qualifying graphs up to 6 vertices") {
    for (int n = 2; n <= 6; ++n)
        testutil::for_all_graphs(n, [](const Graph& g) {
            if (!testutil::ref_is_connected(g) || !testutil::ref_is_bipartite(g)) return;
            if (!free_vertices(g).empty()) return;
            const int v = find_connectivity_preserving_cycle_vertex(g);
            CHECK(testutil::ref_on_cycle(g, v));
            CHECK(testutil::ref_component_count(g, v) == 1);
            for (int u = 0; u < v; ++u) {
                const bool qualifies = testutil::ref_on_cycle(g, u) &&
                                       testutil::ref_component_count(g, u) == 1;
                CHECK_FALSE(qualifies);
            }
        });
}
