#include "vdc/complex.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace vdc {

namespace {

// a ⊆ b for ascending vectors.
bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() > b.size()) return false;
    std::size_t j = 0;
    for (int x : a) {
        while (j < b.size() && b[j] < x) ++j;
        if (j == b.size() || b[j] != x) return false;
        ++j;
    }
    return true;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<std::vector<int>> facets)
    : n_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("vertex count must be nonnegative");
    if (facets.empty())
        throw std::invalid_argument("a complex needs at least one facet (the void complex "
                                    "is not representable)");
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (!f.empty() && (f.front() < 0 || f.back() >= n_))
            throw std::invalid_argument("facet vertex out of range");
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    // Keep only the maximal sets.
    std::vector<char> dominated(facets.size(), 0);
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (std::size_t j = 0; j < facets.size(); ++j)
            if (i != j && is_subset(facets[i], facets[j])) {
                dominated[i] = 1;
                break;
            }
    for (std::size_t i = 0; i < facets.size(); ++i)
        if (!dominated[i]) facets_.push_back(std::move(facets[i]));
}

namespace {

using Mask = std::uint64_t;

void bron_kerbosch(Mask r, Mask p, Mask x, const std::vector<Mask>& adj, std::vector<Mask>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    // Pivot on the vertex of P ∪ X with the most candidates in P.
    Mask px = p | x;
    int pivot = -1, best = -1;
    for (Mask m = px; m != 0; m &= m - 1) {
        int u = std::countr_zero(m);
        int c = std::popcount(p & adj[static_cast<std::size_t>(u)]);
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    Mask cand = p & ~adj[static_cast<std::size_t>(pivot)];
    for (Mask m = cand; m != 0; m &= m - 1) {
        int v = std::countr_zero(m);
        Mask bit = Mask{1} << v;
        bron_kerbosch(r | bit, p & adj[static_cast<std::size_t>(v)],
                      x & adj[static_cast<std::size_t>(v)], adj, out);
        p &= ~bit;
        x |= bit;
    }
}

std::vector<int> mask_to_vertices(Mask m) {
    std::vector<int> out;
    for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

}  // namespace

std::vector<std::vector<int>> maximal_independent_sets(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 64)
        throw std::invalid_argument("independent-set enumeration supports at most 64 vertices");
    const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    // Maximal independent sets of g are the maximal cliques of its complement.
    std::vector<Mask> cadj(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        Mask nb = 0;
        for (int w : g.neighbors(v)) nb |= Mask{1} << w;
        cadj[static_cast<std::size_t>(v)] = full & ~(nb | (Mask{1} << v));
    }
    std::vector<Mask> found;
    bron_kerbosch(0, full, 0, cadj, found);
    std::vector<std::vector<int>> out;
    out.reserve(found.size());
    for (Mask m : found) out.push_back(mask_to_vertices(m));
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex independence_complex(const Graph& g) {
    return SimplicialComplex(g.vertex_count(), maximal_independent_sets(g));
}

SimplicialComplex link(const SimplicialComplex& c, const std::vector<int>& face) {
    std::vector<int> f = face;
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    std::vector<std::vector<int>> out;
    for (const auto& fac : c.facets()) {
        if (!is_subset(f, fac)) continue;
        std::vector<int> rest;
        rest.reserve(fac.size() - f.size());
        std::set_difference(fac.begin(), fac.end(), f.begin(), f.end(), std::back_inserter(rest));
        out.push_back(std::move(rest));
    }
    if (out.empty()) throw std::domain_error("link: the given set is not a face");
    return SimplicialComplex(c.vertex_count(), std::move(out));
}

SimplicialComplex delete_vertex(const SimplicialComplex& c, int v) {
    if (v < 0 || v >= c.vertex_count())
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    std::vector<std::vector<int>> out;
    out.reserve(c.facets().size());
    for (const auto& fac : c.facets()) {
        std::vector<int> rest;
        rest.reserve(fac.size());
        for (int x : fac)
            if (x != v) rest.push_back(x);
        out.push_back(std::move(rest));
    }
    return SimplicialComplex(c.vertex_count(), std::move(out));
}

bool is_face(const SimplicialComplex& c, const std::vector<int>& f) {
    std::vector<int> s = f;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (const auto& fac : c.facets())
        if (is_subset(s, fac)) return true;
    return false;
}

bool is_pure(const SimplicialComplex& c) {
    const auto& fs = c.facets();
    for (const auto& f : fs)
        if (f.size() != fs.front().size()) return false;
    return true;
}

int dimension(const SimplicialComplex& c) {
    std::size_t best = 0;
    for (const auto& f : c.facets()) best = std::max(best, f.size());
    return static_cast<int>(best) - 1;
}

SimplicialComplex relabeled(const SimplicialComplex& c, const std::vector<int>& old_to_new,
                            int new_vertex_count) {
    std::vector<std::vector<int>> out;
    out.reserve(c.facets().size());
    for (const auto& fac : c.facets()) {
        std::vector<int> mapped;
        mapped.reserve(fac.size());
        for (int v : fac) {
            if (v < 0 || static_cast<std::size_t>(v) >= old_to_new.size() || old_to_new[static_cast<std::size_t>(v)] < 0)
                throw std::invalid_argument("relabeled: vertex " + std::to_string(v) +
                                            " has no image");
            mapped.push_back(old_to_new[static_cast<std::size_t>(v)]);
        }
        out.push_back(std::move(mapped));
    }
    return SimplicialComplex(new_vertex_count, std::move(out));
}

std::ostream& operator<<(std::ostream& os, const SimplicialComplex& c) {
    os << "complex(n=" << c.vertex_count() << ", facets=[";
    bool first_f = true;
    for (const auto& f : c.facets()) {
        if (!first_f) os << " ";
        first_f = false;
        os << "{";
        for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
        os << "}";
    }
    return os << "])";
}

}  // namespace vdc
