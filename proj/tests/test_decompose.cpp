#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "support/oracles.hpp"
#include "vdc/decompose.hpp"
#include "vdc/harness.hpp"
#include "vdc/shedding.hpp"

using namespace vdc;

namespace {

SimplicialComplex complement_complex(const Graph& g) {
    return independence_complex(complement(g));
}

void collect_rules(const Certificate::Ptr& cert, std::set<RuleTag>& tags) {
    if (!cert || cert->is_leaf()) return;
    tags.insert(cert->rule());
    collect_rules(cert->deletion_child(), tags);
    collect_rules(cert->link_child(), tags);
}

// Longest chain of internal nodes from the root to any leaf.
int max_path_internal_nodes(const Certificate::Ptr& cert) {
    if (cert->is_leaf()) return 0;
    return 1 + std::max(max_path_internal_nodes(cert->deletion_child()),
                        max_path_internal_nodes(cert->link_child()));
}

}  // namespace

TEST_CASE("single edge decomposes to a discrete leaf") {
    const Graph edge(2, {{0, 1}});
    const auto cert = decompose_bipartite_complement(edge);
    REQUIRE(cert->is_leaf());
    CHECK(cert->leaf_kind() == LeafKind::Discrete);
    CHECK(cert->leaf_set() == std::vector<int>{0, 1});
    CHECK(verify_certificate(complement_complex(edge), cert).ok);
}

TEST_CASE("4-cycle: the dominating-part rule fires and sheds vertex 2") {
    // Every vertex of C4 dominates the opposite part; the smallest is 0,
    // and the shed vertex is its least partner 2.
    const Graph c4 = testutil::cycle_graph(4);
    const auto cert = decompose_bipartite_complement(c4);
    REQUIRE_FALSE(cert->is_leaf());
    CHECK(cert->rule() == RuleTag::DominatingPart);
    CHECK(cert->shed_vertex() == 2);
    const auto vr = verify_certificate(complement_complex(c4), cert);
    CHECK_MESSAGE(vr.ok, vr.reason);
}

TEST_CASE("complete bipartite graphs use the dominating-part rule") {
    const Graph k23 = testutil::complete_bipartite(2, 3);
    const auto cert = decompose_bipartite_complement(k23);
    REQUIRE_FALSE(cert->is_leaf());
    CHECK(cert->rule() == RuleTag::DominatingPart);
    CHECK(verify_certificate(complement_complex(k23), cert).ok);
}

TEST_CASE("decompose_clique_union") {
    SUBCASE("K3 sheds 0 then 1 down to a single vertex") {
        const auto cert = decompose_clique_union(testutil::complete_graph(3));
        REQUIRE_FALSE(cert->is_leaf());
        CHECK(cert->rule() == RuleTag::CliqueUnion);
        CHECK(cert->shed_vertex() == 0);
        const auto& del = cert->deletion_child();
        REQUIRE_FALSE(del->is_leaf());
        CHECK(del->shed_vertex() == 1);
        CHECK(del->deletion_child()->is_leaf());
        CHECK(del->deletion_child()->leaf_set() == std::vector<int>{2});
        CHECK(verify_certificate(independence_complex(testutil::complete_graph(3)), cert).ok);
    }
    SUBCASE("edgeless graph is immediately discrete") {
        const auto cert = decompose_clique_union(Graph(3));
        REQUIRE(cert->is_leaf());
        CHECK(cert->leaf_kind() == LeafKind::Discrete);
        CHECK(cert->leaf_set() == std::vector<int>{0, 1, 2});
    }
    SUBCASE("K2 + K2 sheds 0 then 2 along the deletion chain") {
        const Graph g(4, {{0, 1}, {2, 3}});
        const auto cert = decompose_clique_union(g);
        REQUIRE_FALSE(cert->is_leaf());
        CHECK(cert->shed_vertex() == 0);
        CHECK(cert->deletion_child()->shed_vertex() == 2);
        CHECK(max_path_internal_nodes(cert) == 2);
        CHECK(verify_certificate(independence_complex(g), cert).ok);
    }
    SUBCASE("a path of three vertices is not a clique union") {
        CHECK_THROWS_AS(decompose_clique_union(testutil::path_graph(3)), std::domain_error);
    }
}

TEST_CASE("verify_certificate") {
    SUBCASE("single-facet leaf") {
        const SimplicialComplex c(2, {{0, 1}});
        CHECK(verify_certificate(c, Certificate::make_single_facet({0, 1})).ok);
        const auto wrong = verify_certificate(c, Certificate::make_single_facet({0}));
        CHECK_FALSE(wrong.ok);
        CHECK(wrong.reason.find("does not match") != std::string::npos);
    }
    SUBCASE("null certificate") {
        CHECK_FALSE(verify_certificate(SimplicialComplex(2, {{0, 1}}), nullptr).ok);
    }
    SUBCASE("claiming a non-shedding vertex is rejected with a reason") {
        const SimplicialComplex c(4, {{0, 1}, {2, 3}});
        const auto bogus = Certificate::make_internal(
            RuleTag::BruteForce, 0, Certificate::make_single_facet({2, 3}),
            Certificate::make_single_facet({1}));
        const auto vr = verify_certificate(c, bogus);
        CHECK_FALSE(vr.ok);
        CHECK(vr.reason.find("not a shedding vertex") != std::string::npos);
    }
    SUBCASE("leaf against a multi-facet complex is rejected") {
        const auto vr = verify_certificate(SimplicialComplex(3, {{0}, {1}}),
                                           Certificate::make_single_facet({0}));
        CHECK_FALSE(vr.ok);
        CHECK(vr.reason.find("exactly one facet") != std::string::npos);
    }
    SUBCASE("shed vertex outside the ambient set is rejected") {
        const auto bogus = Certificate::make_internal(
            RuleTag::BruteForce, 7, Certificate::make_single_facet({0}),
            Certificate::make_single_facet({}));
        CHECK_FALSE(verify_certificate(SimplicialComplex(2, {{0}, {1}}), bogus).ok);
    }
}

TEST_CASE("shelling extraction") {
    SUBCASE("single facet") {
        const SimplicialComplex c(2, {{0, 1}});
        CHECK(shelling_from_certificate(c, Certificate::make_single_facet({0, 1})) ==
              ShellingOrder{{0, 1}});
    }
    SUBCASE("complement of C4") {
        const Graph c4 = testutil::cycle_graph(4);
        const auto cx = complement_complex(c4);
        const auto order = shelling_from_certificate(cx, decompose_bipartite_complement(c4));
        CHECK(order.size() == 4);
        CHECK(is_shelling_order(cx, order));
    }
    SUBCASE("complement of C6") {
        const Graph c6 = testutil::cycle_graph(6);
        const auto cx = complement_complex(c6);
        const auto order = shelling_from_certificate(cx, decompose_bipartite_complement(c6));
        CHECK(order.size() == 6);
        CHECK(is_shelling_order(cx, order));
    }
    SUBCASE("unverified certificates are rejected") {
        CHECK_THROWS_AS(shelling_from_certificate(SimplicialComplex(3, {{0}, {1}}),
                                                  Certificate::make_single_facet({0})),
                        std::domain_error);
    }
}

TEST_CASE("is_shelling_order") {
    const SimplicialComplex chain(3, {{0, 1}, {1, 2}});
    CHECK(is_shelling_order(chain, {{0, 1}, {1, 2}}));
    CHECK(is_shelling_order(chain, {{1, 2}, {0, 1}}));

    const SimplicialComplex split(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_shelling_order(split, {{0, 1}, {2, 3}}));
    CHECK_FALSE(is_shelling_order(split, {{2, 3}, {0, 1}}));

    CHECK(is_shelling_order(SimplicialComplex(2, {{0, 1}}), {{0, 1}}));

    // Singleton facets may follow disjoint predecessors.
    const SimplicialComplex mixed(3, {{0, 1}, {2}});
    CHECK(is_shelling_order(mixed, {{0, 1}, {2}}));
    CHECK_FALSE(is_shelling_order(mixed, {{2}, {0, 1}}));

    CHECK_THROWS_AS(is_shelling_order(chain, {{0, 1}}), std::domain_error);
    CHECK_THROWS_AS(is_shelling_order(chain, {{0, 1}, {0, 1}}), std::domain_error);
}

TEST_CASE("input hypotheses are enforced with witnesses") {
    try {
        decompose_bipartite_complement(testutil::complete_graph(3));
        FAIL("expected NotBipartiteError");
    } catch (const NotBipartiteError& e) {
        CHECK(e.odd_cycle() == std::vector<int>{0, 1, 2});
    }
    try {
        decompose_bipartite_complement(Graph(4, {{0, 1}, {2, 3}}));
        FAIL("expected DisconnectedError");
    } catch (const DisconnectedError& e) {
        CHECK(e.first_component_vertex() == 0);
        CHECK(e.second_component_vertex() == 2);
    }
}

TEST_CASE("connectivity is necessary: the 2K2 complement complex is not decomposable") {
    const Graph two_k2(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_vertex_decomposable_bruteforce(complement_complex(two_k2)).decomposable);
}

TEST_CASE("end-to-end soundness on all connected bipartite graphs up to 6 vertices") {
    std::set<RuleTag> tags;
    for (int n = 2; n <= 6; ++n)
        for_each_connected_bipartite(n, [&tags, n](const Graph& g) {
            const auto cx = complement_complex(g);
            const auto cert = decompose_bipartite_complement(g);
            const auto vr = verify_certificate(cx, cert);
            REQUIRE_MESSAGE(vr.ok, vr.reason);
            const auto order = shelling_from_certificate(cx, cert);
            CHECK(is_shelling_order(cx, order));
            CHECK(static_cast<int>(order.size()) == cx.facet_count());
            CHECK(max_path_internal_nodes(cert) <= n);
            collect_rules(cert, tags);
        });
    // Trees bring the free-vertex rule (first at the 6-path), even cycles
    // bring the cycle-vertex rule, and complete bipartite graphs the
    // dominating-part rule; links supply clique-union throughout.
    CHECK(tags.count(RuleTag::DominatingPart) == 1);
    CHECK(tags.count(RuleTag::FreeVertex) == 1);
    CHECK(tags.count(RuleTag::CycleVertex) == 1);
    CHECK(tags.count(RuleTag::CliqueUnion) == 1);
}

TEST_CASE("on pure 1-dimensional complexes the shelling check matches the classical one") {
    // For complexes whose facets are all edges, an order is a shelling iff
    // every facet after the first shares a vertex with an earlier one.
    for (int n = 2; n <= 5; ++n)
        for_each_connected_bipartite(n, [](const Graph& g) {
            if (g.vertex_count() < 3) return;  // want >= 2 facets
            const auto cx = complement_complex(g);
            ShellingOrder order = cx.facets();
            std::mt19937 rng(static_cast<unsigned>(cx.facet_count() * 101 + g.edge_count()));
            for (int shuffle = 0; shuffle < 6; ++shuffle) {
                std::shuffle(order.begin(), order.end(), rng);
                bool classical = true;
                for (std::size_t j = 1; j < order.size(); ++j) {
                    bool meets = false;
                    for (std::size_t i = 0; i < j && !meets; ++i)
                        for (int v : order[j])
                            if (std::binary_search(order[i].begin(), order[i].end(), v)) {
                                meets = true;
                                break;
                            }
                    if (!meets) classical = false;
                }
                CHECK(is_shelling_order(cx, order) == classical);
            }
        });
}

TEST_CASE("oracle confirms every bipartite complement complex up to 6 vertices") {
    for (int n = 2; n <= 6; ++n)
        for_each_connected_bipartite(n, [](const Graph& g) {
            const auto cx = complement_complex(g);
            const auto res = is_vertex_decomposable_bruteforce(cx);
            REQUIRE(res.decomposable);
            CHECK(verify_certificate(cx, res.certificate).ok);
        });
}
