#pragma once

#include <vector>

#include "vdc/certificate.hpp"
#include "vdc/complex.hpp"
#include "vdc/graph.hpp"

namespace vdc {

/// True iff no face of link(c, {v}) is a facet of delete_vertex(c, v).
/// Throws std::domain_error when {v} is not a face of c.
bool is_shedding_vertex_complex(const SimplicialComplex& c, int v);

/// Graph-level shedding test: every maximal independent set of g minus v
/// must contain a neighbor of v. Agrees with the complex-level test on
/// the independence complex.
bool is_shedding_vertex_graph(const Graph& g, int v);

/// Ascending list of the vertices of c passing the complex-level test.
std::vector<int> shedding_vertices(const SimplicialComplex& c);

/// Vertices whose closed neighborhood induces a complete subgraph.
std::vector<int> simplicial_vertices(const Graph& g);

struct OracleResult {
    bool decomposable = false;
    Certificate::Ptr certificate;  // non-null iff decomposable
};

/// Exhaustive vertex-decomposability decision with a certificate on
/// success. Memoized on the support-compacted facet set; exponential in
/// general, intended for complexes on at most ~10 vertices.
OracleResult is_vertex_decomposable_bruteforce(const SimplicialComplex& c);

}  // namespace vdc
