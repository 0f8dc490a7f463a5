#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "vdc/graph.hpp"

namespace vdc {

/// Every labeled connected bipartite graph on exactly n vertices, encoded
/// as an edge-set bit mask (slot order: pairs (u,v), u < v, lexicographic),
/// in ascending mask order. Supports n up to 11.
std::vector<std::uint64_t> connected_bipartite_edge_masks(int n);

Graph graph_from_edge_mask(int n, std::uint64_t mask);

/// Streams every labeled connected bipartite graph on n vertices exactly
/// once, in a deterministic order.
void for_each_connected_bipartite(int n, const std::function<void(const Graph&)>& fn);

std::vector<Graph> enumerate_connected_bipartite(int n);

/// Splits [0, count) into at most `jobs` contiguous ranges and runs them
/// on worker threads; fn(worker, begin, end). With jobs <= 1 the call is
/// inline. Workers must not share mutable state.
void parallel_for_ranges(std::size_t count, int jobs,
                         const std::function<void(int, std::size_t, std::size_t)>& fn);

struct RuleHistogram {
    long dominating_part = 0;
    long free_vertex = 0;
    long cycle_vertex = 0;
    long clique_union = 0;
    long bruteforce = 0;
};

struct SizeStats {
    int n = 0;
    long graphs_tested = 0;
    long certificates_verified = 0;
    long shellings_verified = 0;
    long purity_confirmed = 0;
    bool oracle_checked = false;
    long oracle_agreements = 0;
    RuleHistogram rules;
};

struct FamilyStats {
    std::string name;
    int n = 0;
    bool certificate_verified = false;
    bool shelling_verified = false;
    bool purity_confirmed = false;
    bool oracle_checked = false;
    bool oracle_agreed = false;
};

struct Failure {
    std::string graph;  // edge-list document of the offending graph
    std::string stage;
    std::string reason;
};

struct StageTimes {
    double enumerate = 0;
    double decompose = 0;
    double verify = 0;
    double shelling = 0;
    double purity = 0;
    double oracle = 0;
};

struct Report {
    int max_n = 0;
    int oracle_max_n = 0;
    std::uint64_t seed = 0;
    std::vector<SizeStats> per_size;
    std::vector<FamilyStats> families;
    bool negative_control_passed = false;
    std::vector<Failure> failures;
    StageTimes times;  // cumulative seconds across workers; not serialized by default

    bool all_passed() const { return failures.empty(); }
};

struct SuiteOptions {
    int max_n = 8;
    int oracle_max_n = 7;
    std::uint64_t seed = 0;  // reserved for sampling modes; recorded in the report
    int jobs = 1;
};

/// Runs the full pipeline (decompose, verify, shelling, purity, and the
/// brute-force oracle up to oracle_max_n) over every connected bipartite
/// graph on 1..max_n vertices, the complete-bipartite and even-cycle
/// families, and the disconnected negative control. Identical options
/// yield an identical report regardless of jobs.
Report run_suite(const SuiteOptions& options);

/// JSON document for the report. Timings vary run to run, so they are
/// only emitted on request.
std::string write_report_json(const Report& report, bool include_timings = false);

}  // namespace vdc
