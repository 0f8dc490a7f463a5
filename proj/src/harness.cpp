#include "vdc/harness.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <exception>
#include <stdexcept>
#include <thread>
#include <utility>

#include "json.hpp"

#include "vdc/complex.hpp"
#include "vdc/decompose.hpp"
#include "vdc/io.hpp"
#include "vdc/shedding.hpp"

namespace vdc {

namespace {

constexpr int kMaxEnumerableN = 11;  // C(11,2) = 55 edge slots fit a 64-bit mask

int edge_slot(int n, int u, int v) {
    return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

std::vector<std::pair<int, int>> slot_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

bool mask_connected(int n, std::uint64_t mask, const std::vector<std::pair<int, int>>& pairs) {
    if (n <= 1) return true;
    std::uint32_t adj[kMaxEnumerableN] = {};
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
        const auto& [u, v] = pairs[static_cast<std::size_t>(std::countr_zero(m))];
        adj[u] |= std::uint32_t{1} << v;
        adj[v] |= std::uint32_t{1} << u;
    }
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::uint32_t visited = 1, frontier = 1;
    while (frontier != 0) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
        frontier = next & ~visited;
        visited |= frontier;
    }
    return visited == full;
}

}  // namespace

std::vector<std::uint64_t> connected_bipartite_edge_masks(int n) {
    if (n < 1 || n > kMaxEnumerableN)
        throw std::invalid_argument("enumeration supports 1.." + std::to_string(kMaxEnumerableN) +
                                    " vertices");
    const auto pairs = slot_pairs(n);
    std::vector<std::uint64_t> out;
    // A connected graph has a unique 2-coloring up to swapping the parts, so
    // requiring vertex 0 on the left makes each graph appear exactly once.
    for (std::uint32_t left = 1; left < (std::uint32_t{1} << n); left += 2) {
        std::vector<int> slots;
        for (std::uint32_t lm = left; lm != 0; lm &= lm - 1) {
            const int u = std::countr_zero(lm);
            const std::uint32_t right = ((std::uint32_t{1} << n) - 1) & ~left;
            for (std::uint32_t rm = right; rm != 0; rm &= rm - 1) {
                const int v = std::countr_zero(rm);
                slots.push_back(edge_slot(n, std::min(u, v), std::max(u, v)));
            }
        }
        for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << slots.size()); ++sub) {
            std::uint64_t mask = 0;
            for (std::uint64_t s = sub; s != 0; s &= s - 1)
                mask |= std::uint64_t{1} << slots[static_cast<std::size_t>(std::countr_zero(s))];
            if (mask_connected(n, mask, pairs)) out.push_back(mask);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    if (n < 0 || n > kMaxEnumerableN) throw std::invalid_argument("unsupported vertex count");
    const auto pairs = slot_pairs(n);
    Graph g(n);
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
        const auto& [u, v] = pairs[static_cast<std::size_t>(std::countr_zero(m))];
        g.add_edge(u, v);
    }
    return g;
}

void for_each_connected_bipartite(int n, const std::function<void(const Graph&)>& fn) {
    for (std::uint64_t mask : connected_bipartite_edge_masks(n)) fn(graph_from_edge_mask(n, mask));
}

std::vector<Graph> enumerate_connected_bipartite(int n) {
    std::vector<Graph> out;
    for_each_connected_bipartite(n, [&out](const Graph& g) { out.push_back(g); });
    return out;
}

void parallel_for_ranges(std::size_t count, int jobs,
                         const std::function<void(int, std::size_t, std::size_t)>& fn) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || count < 2) {
        fn(0, 0, count);
        return;
    }
    const int workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), count));
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    const std::size_t chunk = count / static_cast<std::size_t>(workers);
    const std::size_t extra = count % static_cast<std::size_t>(workers);
    std::size_t begin = 0;
    for (int w = 0; w < workers; ++w) {
        const std::size_t len = chunk + (static_cast<std::size_t>(w) < extra ? 1 : 0);
        threads.emplace_back([&, w, begin, len] {
            try {
                fn(w, begin, begin + len);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
        begin += len;
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void count_rules(const Certificate::Ptr& cert, RuleHistogram& h) {
    if (!cert || cert->is_leaf()) return;
    switch (cert->rule()) {
        case RuleTag::DominatingPart: ++h.dominating_part; break;
        case RuleTag::FreeVertex: ++h.free_vertex; break;
        case RuleTag::CycleVertex: ++h.cycle_vertex; break;
        case RuleTag::CliqueUnion: ++h.clique_union; break;
        case RuleTag::BruteForce: ++h.bruteforce; break;
    }
    count_rules(cert->deletion_child(), h);
    count_rules(cert->link_child(), h);
}

struct PipelineOutcome {
    bool cert_ok = false;
    bool shelling_ok = false;
    bool purity_ok = false;
    bool oracle_ran = false;
    bool oracle_ok = false;
    RuleHistogram rules;
    StageTimes times;
    std::vector<std::pair<const char*, std::string>> problems;  // (stage, reason)
};

PipelineOutcome run_pipeline(const Graph& g, bool with_oracle) {
    PipelineOutcome o;
    const SimplicialComplex cx = independence_complex(complement(g));

    auto t0 = clock_type::now();
    Certificate::Ptr cert;
    try {
        cert = decompose_bipartite_complement(g);
    } catch (const std::exception& e) {
        o.problems.emplace_back("decompose", e.what());
    }
    o.times.decompose = seconds_since(t0);

    if (cert) {
        count_rules(cert, o.rules);
        t0 = clock_type::now();
        const auto vr = verify_certificate(cx, cert);
        o.times.verify = seconds_since(t0);
        if (vr.ok)
            o.cert_ok = true;
        else
            o.problems.emplace_back("verify", vr.reason);

        if (o.cert_ok) {
            t0 = clock_type::now();
            try {
                const ShellingOrder order = shelling_from_certificate(cx, cert);
                o.shelling_ok = is_shelling_order(cx, order);
                if (!o.shelling_ok)
                    o.problems.emplace_back("shelling", "derived order fails the shelling check");
            } catch (const std::exception& e) {
                o.problems.emplace_back("shelling", e.what());
            }
            o.times.shelling = seconds_since(t0);
        }
    }

    t0 = clock_type::now();
    const int expected_dim = g.vertex_count() >= 2 ? 1 : 0;
    o.purity_ok = is_pure(cx) && dimension(cx) == expected_dim;
    if (!o.purity_ok)
        o.problems.emplace_back("purity", "complex is not pure of dimension " +
                                              std::to_string(expected_dim));
    o.times.purity = seconds_since(t0);

    if (with_oracle) {
        t0 = clock_type::now();
        o.oracle_ran = true;
        const auto res = is_vertex_decomposable_bruteforce(cx);
        o.oracle_ok = res.decomposable && verify_certificate(cx, res.certificate).ok;
        if (!o.oracle_ok)
            o.problems.emplace_back("oracle",
                                    res.decomposable
                                        ? "oracle certificate failed verification"
                                        : "oracle found the complex not vertex decomposable");
        o.times.oracle = seconds_since(t0);
    }
    return o;
}

void add_times(StageTimes& into, const StageTimes& from) {
    into.enumerate += from.enumerate;
    into.decompose += from.decompose;
    into.verify += from.verify;
    into.shelling += from.shelling;
    into.purity += from.purity;
    into.oracle += from.oracle;
}

void add_rules(RuleHistogram& into, const RuleHistogram& from) {
    into.dominating_part += from.dominating_part;
    into.free_vertex += from.free_vertex;
    into.cycle_vertex += from.cycle_vertex;
    into.clique_union += from.clique_union;
    into.bruteforce += from.bruteforce;
}

std::vector<std::pair<std::string, Graph>> fixed_families() {
    std::vector<std::pair<std::string, Graph>> out;
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b) {
            Graph g(a + b);
            for (int i = 0; i < a; ++i)
                for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
            out.emplace_back("K" + std::to_string(a) + "," + std::to_string(b), std::move(g));
        }
    for (int k = 2; k <= 5; ++k) {
        const int len = 2 * k;
        Graph g(len);
        for (int i = 0; i < len; ++i) g.add_edge(std::min(i, (i + 1) % len), std::max(i, (i + 1) % len));
        out.emplace_back("C" + std::to_string(len), std::move(g));
    }
    return out;
}

}  // namespace

Report run_suite(const SuiteOptions& options) {
    if (options.max_n < 1 || options.max_n > kMaxEnumerableN)
        throw std::invalid_argument("max_n must be in 1.." + std::to_string(kMaxEnumerableN));
    if (options.oracle_max_n < 0 || options.oracle_max_n > options.max_n)
        throw std::invalid_argument("oracle_max_n must be in 0..max_n");
    const int jobs = std::max(1, options.jobs);

    Report report;
    report.max_n = options.max_n;
    report.oracle_max_n = options.oracle_max_n;
    report.seed = options.seed;

    for (int n = 1; n <= options.max_n; ++n) {
        auto t0 = clock_type::now();
        const auto masks = connected_bipartite_edge_masks(n);
        report.times.enumerate += seconds_since(t0);

        SizeStats stats;
        stats.n = n;
        stats.graphs_tested = static_cast<long>(masks.size());
        stats.oracle_checked = n <= options.oracle_max_n;

        const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs),
                                                          std::max<std::size_t>(masks.size(), 1));
        std::vector<SizeStats> local(workers);
        std::vector<StageTimes> local_times(workers);
        std::vector<std::vector<std::pair<std::uint64_t, Failure>>> local_failures(workers);

        parallel_for_ranges(masks.size(), jobs, [&](int w, std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                const Graph g = graph_from_edge_mask(n, masks[i]);
                const auto outcome = run_pipeline(g, stats.oracle_checked);
                auto& st = local[static_cast<std::size_t>(w)];
                st.certificates_verified += outcome.cert_ok;
                st.shellings_verified += outcome.shelling_ok;
                st.purity_confirmed += outcome.purity_ok;
                st.oracle_agreements += outcome.oracle_ok;
                add_rules(st.rules, outcome.rules);
                add_times(local_times[static_cast<std::size_t>(w)], outcome.times);
                for (const auto& [stage, reason] : outcome.problems)
                    local_failures[static_cast<std::size_t>(w)].push_back(
                        {masks[i], Failure{write_edge_list(g), stage, reason}});
            }
        });

        std::vector<std::pair<std::uint64_t, Failure>> merged_failures;
        for (std::size_t w = 0; w < workers; ++w) {
            stats.certificates_verified += local[w].certificates_verified;
            stats.shellings_verified += local[w].shellings_verified;
            stats.purity_confirmed += local[w].purity_confirmed;
            stats.oracle_agreements += local[w].oracle_agreements;
            add_rules(stats.rules, local[w].rules);
            add_times(report.times, local_times[w]);
            for (auto& f : local_failures[w]) merged_failures.push_back(std::move(f));
        }
        std::stable_sort(merged_failures.begin(), merged_failures.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [mask, failure] : merged_failures) report.failures.push_back(std::move(failure));
        report.per_size.push_back(stats);
    }

    for (const auto& [name, g] : fixed_families()) {
        const bool with_oracle = g.vertex_count() <= options.oracle_max_n;
        const auto outcome = run_pipeline(g, with_oracle);
        add_times(report.times, outcome.times);
        FamilyStats fs;
        fs.name = name;
        fs.n = g.vertex_count();
        fs.certificate_verified = outcome.cert_ok;
        fs.shelling_verified = outcome.shelling_ok;
        fs.purity_confirmed = outcome.purity_ok;
        fs.oracle_checked = outcome.oracle_ran;
        fs.oracle_agreed = outcome.oracle_ok;
        report.families.push_back(fs);
        for (const auto& [stage, reason] : outcome.problems)
            report.failures.push_back(Failure{"# " + name + "\n" + write_edge_list(g), stage, reason});
    }

    {
        // Negative control: the connectivity hypothesis cannot be dropped.
        const Graph two_k2(4, {{0, 1}, {2, 3}});
        auto t0 = clock_type::now();
        const auto res = is_vertex_decomposable_bruteforce(independence_complex(complement(two_k2)));
        report.times.oracle += seconds_since(t0);
        report.negative_control_passed = !res.decomposable;
        if (!report.negative_control_passed)
            report.failures.push_back(Failure{write_edge_list(two_k2), "negative-control",
                                              "oracle accepted the complex of the complement of "
                                              "2K2; expected rejection"});
    }

    return report;
}

std::string write_report_json(const Report& report, bool include_timings) {
    using nlohmann::json;
    json j;
    j["format_version"] = 1;
    j["max_n"] = report.max_n;
    j["oracle_max_n"] = report.oracle_max_n;
    j["seed"] = report.seed;
    j["all_passed"] = report.all_passed();

    j["per_size"] = json::array();
    for (const auto& s : report.per_size) {
        json rules;
        rules["dominating-part"] = s.rules.dominating_part;
        rules["free-vertex"] = s.rules.free_vertex;
        rules["cycle-vertex"] = s.rules.cycle_vertex;
        rules["clique-union"] = s.rules.clique_union;
        rules["bruteforce"] = s.rules.bruteforce;
        j["per_size"].push_back({{"n", s.n},
                                 {"graphs_tested", s.graphs_tested},
                                 {"certificates_verified", s.certificates_verified},
                                 {"shellings_verified", s.shellings_verified},
                                 {"purity_confirmed", s.purity_confirmed},
                                 {"oracle_checked", s.oracle_checked},
                                 {"oracle_agreements", s.oracle_agreements},
                                 {"rules", std::move(rules)}});
    }

    j["families"] = json::array();
    for (const auto& f : report.families)
        j["families"].push_back({{"name", f.name},
                                 {"n", f.n},
                                 {"certificate_verified", f.certificate_verified},
                                 {"shelling_verified", f.shelling_verified},
                                 {"purity_confirmed", f.purity_confirmed},
                                 {"oracle_checked", f.oracle_checked},
                                 {"oracle_agreed", f.oracle_agreed}});

    j["negative_control"] = {{"oracle_rejected", report.negative_control_passed},
                             {"pass", report.negative_control_passed}};

    j["failures"] = json::array();
    for (const auto& f : report.failures)
        j["failures"].push_back({{"graph", f.graph}, {"stage", f.stage}, {"reason", f.reason}});

    if (include_timings)
        j["timings_seconds"] = {{"enumerate", report.times.enumerate},
                                {"decompose", report.times.decompose},
                                {"verify", report.times.verify},
                                {"shelling", report.times.shelling},
                                {"purity", report.times.purity},
                                {"oracle", report.times.oracle}};

    return j.dump(2);
}

}  // namespace vdc
