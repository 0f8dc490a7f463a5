#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace vdc {

/// Which decomposition rule produced an internal certificate node. Tags are
/// informational; verification re-derives every claim from the complex.
enum class RuleTag {
    DominatingPart,  // a vertex's neighborhood covers the entire opposite part
    FreeVertex,      // shed a degree-1 vertex of the underlying bipartite graph
    CycleVertex,     // shed a non-separating cycle vertex
    CliqueUnion,     // shed inside a disjoint union of complete graphs
    BruteForce,      // found by the exhaustive oracle
};

enum class LeafKind {
    SingleFacet,  // the complex at this node has exactly this one facet
    Discrete,     // the underlying graph is edgeless; its vertex set is the facet
};

const char* rule_tag_name(RuleTag tag);
std::optional<RuleTag> parse_rule_tag(const std::string& name);
const char* leaf_kind_name(LeafKind kind);
std::optional<LeafKind> parse_leaf_kind(const std::string& name);

/// Immutable binary tree witnessing vertex decomposability. Internal nodes
/// name a shedding vertex with subtrees for the deletion and the link; both
/// leaf kinds assert that the complex at the node has exactly one facet,
/// carried in root-graph labels.
class Certificate {
public:
    using Ptr = std::shared_ptr<const Certificate>;

    static Ptr make_single_facet(std::vector<int> facet);
    static Ptr make_discrete(std::vector<int> vertices);
    static Ptr make_internal(RuleTag rule, int vertex, Ptr deletion, Ptr link);

    bool is_leaf() const { return !deletion_; }

    LeafKind leaf_kind() const;
    /// The facet (SingleFacet) or vertex set (Discrete), ascending.
    const std::vector<int>& leaf_set() const;

    RuleTag rule() const;
    int shed_vertex() const;
    const Ptr& deletion_child() const;
    const Ptr& link_child() const;

    int internal_node_count() const;

private:
    Certificate() = default;

    RuleTag rule_ = RuleTag::BruteForce;
    int vertex_ = -1;
    Ptr deletion_;
    Ptr link_;
    LeafKind kind_ = LeafKind::SingleFacet;
    std::vector<int> leaf_set_;
};

/// Structural equality of two certificate trees.
bool certificates_equal(const Certificate::Ptr& a, const Certificate::Ptr& b);

/// Copy of the tree with every vertex v replaced by vertex_map[v].
Certificate::Ptr relabel_certificate(const Certificate::Ptr& cert,
                                     const std::vector<int>& vertex_map);

}  // namespace vdc
