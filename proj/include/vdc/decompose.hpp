#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "vdc/certificate.hpp"
#include "vdc/complex.hpp"
#include "vdc/graph.hpp"

namespace vdc {

/// Input graph is not bipartite; carries the odd-cycle witness.
class NotBipartiteError : public std::runtime_error {
public:
    explicit NotBipartiteError(std::vector<int> cycle);
    const std::vector<int>& odd_cycle() const { return cycle_; }

private:
    std::vector<int> cycle_;
};

/// Input graph is not connected; carries one vertex from each of two
/// distinct components.
class DisconnectedError : public std::runtime_error {
public:
    DisconnectedError(int first, int second);
    int first_component_vertex() const { return first_; }
    int second_component_vertex() const { return second_; }

private:
    int first_;
    int second_;
};

/// Builds a certificate for the independence complex of the complement
/// of a connected bipartite graph. Rule precedence at each step:
///   (a) some vertex dominates the entire opposite part,
///   (b) the graph has a degree-1 vertex,
///   (c) shed a non-separating cycle vertex.
/// Ties break to the smallest index. Vertex labels in the certificate
/// always refer to the input graph.
Certificate::Ptr decompose_bipartite_complement(const Graph& g);

/// Certificate for the independence complex of a disjoint union of
/// complete graphs: repeatedly shed the smallest vertex lying in a
/// clique of size >= 2. Throws std::domain_error if some connected
/// component is not complete.
Certificate::Ptr decompose_clique_union(const Graph& g);

struct VerifyResult {
    bool ok = false;
    std::string reason;  // empty when ok

    explicit operator bool() const { return ok; }
};

/// Checks a certificate against a complex from first principles: leaves
/// must name the unique facet, internal nodes must name an actual
/// shedding vertex, and both subtrees must verify against the deletion
/// and the link. Rule tags are ignored.
VerifyResult verify_certificate(const SimplicialComplex& c, const Certificate::Ptr& cert);

using ShellingOrder = std::vector<std::vector<int>>;

/// Facet order obtained from a verified certificate: the deletion's
/// shelling first, then the link's shelling with the shed vertex joined
/// to each facet. Throws std::domain_error if the certificate does not
/// verify against c.
ShellingOrder shelling_from_certificate(const SimplicialComplex& c, const Certificate::Ptr& cert);

/// Shelling check in the nonpure sense: each facet after the first must
/// meet the union of its predecessors in a nonempty pure union of its
/// codimension-1 faces; for singleton facets the intersection must be
/// empty instead. Throws std::domain_error when the order is not a
/// permutation of the facets of c.
bool is_shelling_order(const SimplicialComplex& c, const ShellingOrder& order);

}  // namespace vdc
