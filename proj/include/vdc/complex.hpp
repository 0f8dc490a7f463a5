#pragma once

#include <iosfwd>
#include <vector>

#include "vdc/graph.hpp"

namespace vdc {

/// Simplicial complex stored by its facets (inclusion-maximal faces).
///
/// Facets are ascending vertex lists kept as a lexicographically sorted
/// antichain. The complex {∅} is represented by a single empty facet;
/// a complex with no facets at all is not constructible. Constructors
/// normalize their input: duplicate vertices and non-maximal sets are
/// dropped.
class SimplicialComplex {
public:
    /// The complex {∅} on zero vertices.
    SimplicialComplex() : facets_{{}} {}

    SimplicialComplex(int vertex_count, std::vector<std::vector<int>> facets);

    int vertex_count() const { return n_; }
    const std::vector<std::vector<int>>& facets() const { return facets_; }
    int facet_count() const { return static_cast<int>(facets_.size()); }

    bool operator==(const SimplicialComplex&) const = default;

private:
    int n_ = 0;
    std::vector<std::vector<int>> facets_;
};

/// Facets are the maximal independent sets of g, computed by pivoting
/// clique enumeration on the complement. Requires g.vertex_count() <= 64.
SimplicialComplex independence_complex(const Graph& g);

/// The maximal independent sets of g in canonical (lexicographic) order.
/// Requires g.vertex_count() <= 64.
std::vector<std::vector<int>> maximal_independent_sets(const Graph& g);

/// Sets disjoint from `face` whose union with it is a face of c.
/// Throws std::domain_error if `face` is not a face of c.
SimplicialComplex link(const SimplicialComplex& c, const std::vector<int>& face);

/// Faces of c not containing v. The ambient vertex set is unchanged.
SimplicialComplex delete_vertex(const SimplicialComplex& c, int v);

bool is_face(const SimplicialComplex& c, const std::vector<int>& f);

/// True iff all facets have the same cardinality.
bool is_pure(const SimplicialComplex& c);

/// Max facet cardinality minus one; the complex {∅} has dimension -1.
int dimension(const SimplicialComplex& c);

/// Copy of c with every vertex label v replaced by old_to_new[v]. Every
/// vertex appearing in a facet must map to a valid new label.
SimplicialComplex relabeled(const SimplicialComplex& c, const std::vector<int>& old_to_new,
                            int new_vertex_count);

std::ostream& operator<<(std::ostream& os, const SimplicialComplex& c);

}  // namespace vdc
