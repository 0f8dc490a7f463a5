#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <atomic>
#include <set>

#include "support/oracles.hpp"
#include "vdc/harness.hpp"

using namespace vdc;

namespace {

// Independent counter: scan every labeled graph and filter with the
// reference connectivity and bipartiteness checks.
long naive_connected_bipartite_count(int n) {
    long count = 0;
    testutil::for_all_graphs(n, [&count](const Graph& g) {
        if (testutil::ref_is_connected(g) && testutil::ref_is_bipartite(g)) ++count;
    });
    return count;
}

}  // namespace

TEST_CASE("enumeration counts match the independent filter and the frozen values") {
    const long frozen[] = {1, 1, 3, 19, 195, 3031};
    for (int n = 1; n <= 6; ++n) {
        const auto masks = connected_bipartite_edge_masks(n);
        CHECK(static_cast<long>(masks.size()) == frozen[n - 1]);
        CHECK(static_cast<long>(masks.size()) == naive_connected_bipartite_count(n));
    }
    CHECK_THROWS_AS(connected_bipartite_edge_masks(0), std::invalid_argument);
    CHECK_THROWS_AS(connected_bipartite_edge_masks(12), std::invalid_argument);
}

TEST_CASE("the three connected bipartite graphs on 3 vertices are the labeled paths") {
    const auto graphs = enumerate_connected_bipartite(3);
    REQUIRE(graphs.size() == 3);
    std::set<std::vector<Edge>> edge_sets;
    for (const auto& g : graphs) edge_sets.insert(g.edges());
    CHECK(edge_sets.count({{0, 1}, {0, 2}}) == 1);
    CHECK(edge_sets.count({{0, 1}, {1, 2}}) == 1);
    CHECK(edge_sets.count({{0, 2}, {1, 2}}) == 1);
}

TEST_CASE("enumerated graphs are unique, sorted, connected, and bipartite") {
    for (int n = 1; n <= 6; ++n) {
        const auto masks = connected_bipartite_edge_masks(n);
        for (std::size_t i = 1; i < masks.size(); ++i) CHECK(masks[i - 1] < masks[i]);
        for_each_connected_bipartite(n, [](const Graph& g) {
            CHECK(testutil::ref_is_connected(g));
            CHECK(testutil::ref_is_bipartite(g));
        });
    }
}

TEST_CASE("parallel_for_ranges covers the range exactly once") {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for_ranges(hits.size(), 4, [&hits](int, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) hits[i].fetch_add(1);
    });
    for (const auto& h : hits) CHECK(h.load() == 1);
    parallel_for_ranges(0, 4, [](int, std::size_t begin, std::size_t end) {
        CHECK(begin == end);
    });
}

TEST_CASE("run_suite at small scale") {
    SuiteOptions opt;
    opt.max_n = 4;
    opt.oracle_max_n = 4;
    opt.seed = 11;
    const Report report = run_suite(opt);

    CHECK(report.all_passed());
    CHECK(report.failures.empty());
    REQUIRE(report.per_size.size() == 4);
    const long expected[] = {1, 1, 3, 19};
    for (int i = 0; i < 4; ++i) {
        const auto& s = report.per_size[static_cast<std::size_t>(i)];
        CHECK(s.n == i + 1);
        CHECK(s.graphs_tested == expected[i]);
        CHECK(s.certificates_verified == s.graphs_tested);
        CHECK(s.shellings_verified == s.graphs_tested);
        CHECK(s.purity_confirmed == s.graphs_tested);
        CHECK(s.oracle_checked);
        CHECK(s.oracle_agreements == s.graphs_tested);
    }

    // K_{a,b} for a,b <= 5 and C_4..C_10 are always present.
    REQUIRE(report.families.size() == 29);
    bool saw_c8 = false;
    for (const auto& f : report.families) {
        CHECK(f.certificate_verified);
        CHECK(f.shelling_verified);
        CHECK(f.purity_confirmed);
        if (f.name == "C8") saw_c8 = true;
    }
    CHECK(saw_c8);
    CHECK(report.negative_control_passed);
}

TEST_CASE("report invariant: counters saturate exactly when there are no failures") {
    SuiteOptions opt;
    opt.max_n = 5;
    opt.oracle_max_n = 3;
    const Report report = run_suite(opt);
    bool saturated = report.negative_control_passed;
    for (const auto& s : report.per_size) {
        if (s.certificates_verified != s.graphs_tested) saturated = false;
        if (s.shellings_verified != s.graphs_tested) saturated = false;
        if (s.purity_confirmed != s.graphs_tested) saturated = false;
        if (s.oracle_checked && s.oracle_agreements != s.graphs_tested) saturated = false;
    }
    for (const auto& f : report.families)
        if (!f.certificate_verified || !f.shelling_verified || !f.purity_confirmed)
            saturated = false;
    CHECK(report.failures.empty() == saturated);
}

TEST_CASE("identical options produce byte-identical reports regardless of jobs") {
    SuiteOptions opt;
    opt.max_n = 5;
    opt.oracle_max_n = 5;
    opt.seed = 7;
    opt.jobs = 1;
    const std::string a = write_report_json(run_suite(opt));
    const std::string b = write_report_json(run_suite(opt));
    CHECK(a == b);
    opt.jobs = 3;
    const std::string c = write_report_json(run_suite(opt));
    CHECK(a == c);
}

TEST_CASE("oracle cap above max_n is rejected") {
    SuiteOptions opt;
    opt.max_n = 3;
    opt.oracle_max_n = 4;
    CHECK_THROWS_AS(run_suite(opt), std::invalid_argument);
}
