#include "vdc/shedding.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace vdc {

bool is_shedding_vertex_complex(const SimplicialComplex& c, int v) {
    if (v < 0 || v >= c.vertex_count() || !is_face(c, {v}))
        throw std::domain_error("{" + std::to_string(v) + "} is not a face of the complex");
    const SimplicialComplex lnk = link(c, {v});
    const SimplicialComplex del = delete_vertex(c, v);
    // Any face of the link that is a facet of the deletion is itself a facet
    // of the deletion, so checking the deletion's facets suffices.
    for (const auto& d : del.facets())
        if (is_face(lnk, d)) return false;
    return true;
}

bool is_shedding_vertex_graph(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    const auto del = delete_vertices(g, {v});
    std::vector<int> nb;
    nb.reserve(g.neighbors(v).size());
    for (int w : g.neighbors(v)) nb.push_back(del.old_to_new[static_cast<std::size_t>(w)]);
    for (const auto& mis : maximal_independent_sets(del.graph)) {
        bool hit = false;
        for (int x : nb)
            if (std::binary_search(mis.begin(), mis.end(), x)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

std::vector<int> shedding_vertices(const SimplicialComplex& c) {
    std::vector<int> out;
    for (int v = 0; v < c.vertex_count(); ++v)
        if (is_face(c, {v}) && is_shedding_vertex_complex(c, v)) out.push_back(v);
    return out;
}

std::vector<int> simplicial_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = g.neighbors(v);
        bool clique = true;
        for (std::size_t i = 0; i < nb.size() && clique; ++i)
            for (std::size_t j = i + 1; j < nb.size() && clique; ++j)
                if (!g.has_edge(nb[i], nb[j])) clique = false;
        if (clique) out.push_back(v);
    }
    return out;
}

namespace {

// Memo key: the facet set of a support-compacted complex, as bit masks in
// ascending numeric order.
struct FacetKey {
    std::vector<std::uint64_t> masks;
    bool operator==(const FacetKey&) const = default;
};

struct FacetKeyHash {
    std::size_t operator()(const FacetKey& k) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint64_t m : k.masks) {
            h ^= m;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

using Memo = std::unordered_map<FacetKey, Certificate::Ptr, FacetKeyHash>;

FacetKey facet_key(const SimplicialComplex& c) {
    FacetKey key;
    key.masks.reserve(c.facets().size());
    for (const auto& f : c.facets()) {
        std::uint64_t m = 0;
        for (int v : f) m |= std::uint64_t{1} << v;
        key.masks.push_back(m);
    }
    std::sort(key.masks.begin(), key.masks.end());
    return key;
}

// Certificates in the memo are in support-compacted labels; callers relabel
// through the support on every hit.
Certificate::Ptr oracle_rec(const SimplicialComplex& c, Memo& memo) {
    std::vector<char> used(static_cast<std::size_t>(c.vertex_count()), 0);
    for (const auto& f : c.facets())
        for (int v : f) used[static_cast<std::size_t>(v)] = 1;
    std::vector<int> support;
    std::vector<int> old_to_new(static_cast<std::size_t>(c.vertex_count()), -1);
    for (int v = 0; v < c.vertex_count(); ++v)
        if (used[static_cast<std::size_t>(v)]) {
            old_to_new[static_cast<std::size_t>(v)] = static_cast<int>(support.size());
            support.push_back(v);
        }
    const SimplicialComplex cc = relabeled(c, old_to_new, static_cast<int>(support.size()));
    const FacetKey key = facet_key(cc);
    if (auto it = memo.find(key); it != memo.end()) return relabel_certificate(it->second, support);

    Certificate::Ptr result;
    if (cc.facet_count() == 1) {
        result = Certificate::make_single_facet(cc.facets().front());
    } else {
        // Every vertex of the compacted complex lies in some facet, so {v}
        // is always a face here.
        for (int v = 0; v < cc.vertex_count() && !result; ++v) {
            if (!is_shedding_vertex_complex(cc, v)) continue;
            auto del_cert = oracle_rec(delete_vertex(cc, v), memo);
            if (!del_cert) continue;
            auto link_cert = oracle_rec(link(cc, {v}), memo);
            if (!link_cert) continue;
            result = Certificate::make_internal(RuleTag::BruteForce, v, std::move(del_cert),
                                                std::move(link_cert));
        }
    }
    memo.emplace(key, result);
    return relabel_certificate(result, support);
}

}  // namespace

OracleResult is_vertex_decomposable_bruteforce(const SimplicialComplex& c) {
    if (c.vertex_count() > 64)
        throw std::invalid_argument("brute-force oracle supports at most 64 vertices");
    Memo memo;
    auto cert = oracle_rec(c, memo);
    return {cert != nullptr, std::move(cert)};
}

}  // namespace vdc
