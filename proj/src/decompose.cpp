#include "vdc/decompose.hpp"

#include <algorithm>

#include "vdc/shedding.hpp"

namespace vdc {

namespace {

std::string format_vertices(const std::vector<int>& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(vs[i]);
    }
    return out + "}";
}

}  // namespace

NotBipartiteError::NotBipartiteError(std::vector<int> cycle)
    : std::runtime_error("graph is not bipartite; odd cycle " + format_vertices(cycle)),
      cycle_(std::move(cycle)) {}

DisconnectedError::DisconnectedError(int first, int second)
    : std::runtime_error("graph is not connected; vertices " + std::to_string(first) + " and " +
                         std::to_string(second) + " lie in different components"),
      first_(first),
      second_(second) {}

namespace {

// to_root[i] is the root-graph label of the current vertex i; new_to_old
// re-indexes after a deletion. Both are ascending, so composition is too.
std::vector<int> compose_labels(const std::vector<int>& to_root,
                                const std::vector<int>& new_to_old) {
    std::vector<int> out;
    out.reserve(new_to_old.size());
    for (int v : new_to_old) out.push_back(to_root[static_cast<std::size_t>(v)]);
    return out;
}

// Disjoint unions of complete graphs: shed the smallest vertex with a
// neighbor; deleting its closed neighborhood drops its whole clique.
Certificate::Ptr clique_union_rec(const Graph& g, const std::vector<int>& to_root) {
    int shed = -1;
    for (int v = 0; v < g.vertex_count() && shed < 0; ++v)
        if (g.degree(v) > 0) shed = v;
    if (shed < 0) return Certificate::make_discrete(to_root);

    const auto del = delete_vertices(g, {shed});
    auto del_cert = clique_union_rec(del.graph, compose_labels(to_root, del.new_to_old));
    const auto lnk = delete_vertices(g, closed_neighborhood(g, shed));
    auto link_cert = clique_union_rec(lnk.graph, compose_labels(to_root, lnk.new_to_old));
    return Certificate::make_internal(RuleTag::CliqueUnion, to_root[static_cast<std::size_t>(shed)],
                                      std::move(del_cert), std::move(link_cert));
}

// In the complement of a bipartite graph, removing the closed complement
// neighborhood of x leaves exactly N(x), which spans one part and is
// therefore a clique of the complement.
Certificate::Ptr link_child_for(const Graph& h, int shed, const std::vector<int>& to_root) {
    const auto& nb = h.neighbors(shed);
    const int k = static_cast<int>(nb.size());
    Graph clique(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) clique.add_edge(i, j);
    std::vector<int> labels;
    labels.reserve(nb.size());
    for (int v : nb) labels.push_back(to_root[static_cast<std::size_t>(v)]);
    return clique_union_rec(clique, labels);
}

Certificate::Ptr bipartite_rec(const Graph& h, const std::vector<int>& to_root) {
    const int n = h.vertex_count();
    // Connected bipartite graphs on <= 2 vertices have an edgeless
    // complement, so the whole vertex set is the unique facet.
    if (n <= 2) return Certificate::make_discrete(to_root);

    const auto parts = bipartition(h).parts.value();
    std::vector<char> in_right(static_cast<std::size_t>(n), 0);
    for (int v : parts.right) in_right[static_cast<std::size_t>(v)] = 1;

    // Rule (a): a vertex adjacent to the whole opposite part.
    int dominating = -1;
    for (int v = 0; v < n && dominating < 0; ++v) {
        const auto& opposite = in_right[static_cast<std::size_t>(v)] ? parts.left : parts.right;
        if (h.neighbors(v) == opposite) dominating = v;
    }
    if (dominating >= 0) {
        if (parts.left.size() == 1 || parts.right.size() == 1) {
            // The complement splits into complete components.
            return clique_union_rec(complement(h), to_root);
        }
        const auto& own = in_right[static_cast<std::size_t>(dominating)] ? parts.right : parts.left;
        const int shed = own.front() == dominating ? own[1] : own.front();
        const auto del = delete_vertices(h, {shed});
        auto del_cert = bipartite_rec(del.graph, compose_labels(to_root, del.new_to_old));
        auto link_cert = link_child_for(h, shed, to_root);
        return Certificate::make_internal(RuleTag::DominatingPart,
                                          to_root[static_cast<std::size_t>(shed)],
                                          std::move(del_cert), std::move(link_cert));
    }

    // Rule (b): shed a degree-1 vertex; the rest stays connected.
    const auto free = free_vertices(h);
    if (!free.empty()) {
        const int shed = free.front();
        const auto del = delete_vertices(h, {shed});
        auto del_cert = bipartite_rec(del.graph, compose_labels(to_root, del.new_to_old));
        auto link_cert = link_child_for(h, shed, to_root);
        return Certificate::make_internal(RuleTag::FreeVertex,
                                          to_root[static_cast<std::size_t>(shed)],
                                          std::move(del_cert), std::move(link_cert));
    }

    // Rule (c): minimum degree >= 2, so a non-separating cycle vertex exists.
    const int shed = find_connectivity_preserving_cycle_vertex(h);
    const auto del = delete_vertices(h, {shed});
    auto del_cert = bipartite_rec(del.graph, compose_labels(to_root, del.new_to_old));
    auto link_cert = link_child_for(h, shed, to_root);
    return Certificate::make_internal(RuleTag::CycleVertex,
                                      to_root[static_cast<std::size_t>(shed)],
                                      std::move(del_cert), std::move(link_cert));
}

}  // namespace

Certificate::Ptr decompose_bipartite_complement(const Graph& g) {
    auto bp = bipartition(g);
    if (!bp.is_bipartite()) throw NotBipartiteError(std::move(bp.odd_cycle));
    if (!is_connected(g)) {
        std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
        int outside = 0;
        while (seen[static_cast<std::size_t>(outside)]) ++outside;
        throw DisconnectedError(0, outside);
    }
    std::vector<int> identity(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
    return bipartite_rec(g, identity);
}

Certificate::Ptr decompose_clique_union(const Graph& g) {
    // Every connected component must induce a complete graph.
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    for (int root = 0; root < n; ++root) {
        if (comp[static_cast<std::size_t>(root)] != -1) continue;
        std::vector<int> stack{root}, members;
        comp[static_cast<std::size_t>(root)] = root;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : g.neighbors(v))
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = root;
                    stack.push_back(w);
                }
        }
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (!g.has_edge(members[i], members[j]))
                    throw std::domain_error("graph is not a disjoint union of complete graphs: "
                                            "vertices " + std::to_string(members[i]) + " and " +
                                            std::to_string(members[j]) +
                                            " share a component but no edge");
    }
    std::vector<int> identity(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
    return clique_union_rec(g, identity);
}

namespace {

VerifyResult fail(std::string reason) { return {false, std::move(reason)}; }

VerifyResult verify_rec(const SimplicialComplex& c, const Certificate::Ptr& cert) {
    if (!cert) return fail("missing certificate node");
    if (cert->is_leaf()) {
        if (c.facet_count() != 1)
            return fail("leaf expects exactly one facet, complex has " +
                        std::to_string(c.facet_count()));
        if (c.facets().front() != cert->leaf_set())
            return fail("leaf set " + format_vertices(cert->leaf_set()) +
                        " does not match complex facet " + format_vertices(c.facets().front()));
        return {true, {}};
    }
    const int v = cert->shed_vertex();
    if (v < 0 || v >= c.vertex_count())
        return fail("shed vertex " + std::to_string(v) + " is outside the ambient vertex set");
    if (!is_face(c, {v}))
        return fail("{" + std::to_string(v) + "} is not a face of the complex");
    if (!is_shedding_vertex_complex(c, v))
        return fail("vertex " + std::to_string(v) + " is not a shedding vertex");
    if (auto del = verify_rec(delete_vertex(c, v), cert->deletion_child()); !del.ok)
        return fail("del: " + del.reason);
    if (auto lnk = verify_rec(link(c, {v}), cert->link_child()); !lnk.ok)
        return fail("link: " + lnk.reason);
    return {true, {}};
}

}  // namespace

VerifyResult verify_certificate(const SimplicialComplex& c, const Certificate::Ptr& cert) {
    return verify_rec(c, cert);
}

namespace {

ShellingOrder shelling_rec(const SimplicialComplex& c, const Certificate::Ptr& cert) {
    if (cert->is_leaf()) return {c.facets().front()};
    const int v = cert->shed_vertex();
    ShellingOrder order = shelling_rec(delete_vertex(c, v), cert->deletion_child());
    for (const auto& f : shelling_rec(link(c, {v}), cert->link_child())) {
        std::vector<int> joined = f;
        joined.insert(std::lower_bound(joined.begin(), joined.end(), v), v);
        order.push_back(std::move(joined));
    }
    return order;
}

}  // namespace

ShellingOrder shelling_from_certificate(const SimplicialComplex& c, const Certificate::Ptr& cert) {
    if (auto vr = verify_certificate(c, cert); !vr.ok)
        throw std::domain_error("certificate does not verify: " + vr.reason);
    return shelling_rec(c, cert);
}

bool is_shelling_order(const SimplicialComplex& c, const ShellingOrder& order) {
    {
        ShellingOrder sorted = order;
        for (auto& f : sorted) std::sort(f.begin(), f.end());
        std::sort(sorted.begin(), sorted.end());
        if (sorted != c.facets())
            throw std::domain_error("order is not a permutation of the facet set");
    }
    for (std::size_t j = 1; j < order.size(); ++j) {
        const auto& fj = order[j];
        const std::size_t d = fj.size();
        std::vector<std::vector<int>> inters;
        inters.reserve(j);
        for (std::size_t i = 0; i < j; ++i) {
            std::vector<int> inter;
            std::set_intersection(order[i].begin(), order[i].end(), fj.begin(), fj.end(),
                                  std::back_inserter(inter));
            inters.push_back(std::move(inter));
        }
        if (d <= 1) {
            // A vertex facet may only follow facets it is disjoint from
            // (its boundary {∅} is then the full intersection).
            bool all_empty = true;
            for (const auto& in : inters)
                if (!in.empty()) all_empty = false;
            if (!all_empty) return false;
            continue;
        }
        bool has_ridge = false;
        for (const auto& in : inters)
            if (in.size() == d - 1) has_ridge = true;
        if (!has_ridge) return false;
        for (const auto& in : inters) {
            if (in.size() == d - 1) continue;
            bool covered = false;
            for (const auto& big : inters) {
                if (big.size() != d - 1) continue;
                if (std::includes(big.begin(), big.end(), in.begin(), in.end())) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return false;
        }
    }
    return true;
}

}  // namespace vdc
