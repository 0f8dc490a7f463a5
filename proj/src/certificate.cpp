#include "vdc/certificate.hpp"

#include <algorithm>
#include <stdexcept>

namespace vdc {

const char* rule_tag_name(RuleTag tag) {
    switch (tag) {
        case RuleTag::DominatingPart: return "dominating-part";
        case RuleTag::FreeVertex: return "free-vertex";
        case RuleTag::CycleVertex: return "cycle-vertex";
        case RuleTag::CliqueUnion: return "clique-union";
        case RuleTag::BruteForce: return "bruteforce";
    }
    return "?";
}

std::optional<RuleTag> parse_rule_tag(const std::string& name) {
    for (RuleTag t : {RuleTag::DominatingPart, RuleTag::FreeVertex, RuleTag::CycleVertex,
                      RuleTag::CliqueUnion, RuleTag::BruteForce})
        if (name == rule_tag_name(t)) return t;
    return std::nullopt;
}

const char* leaf_kind_name(LeafKind kind) {
    switch (kind) {
        case LeafKind::SingleFacet: return "single-facet";
        case LeafKind::Discrete: return "discrete";
    }
    return "?";
}

std::optional<LeafKind> parse_leaf_kind(const std::string& name) {
    for (LeafKind k : {LeafKind::SingleFacet, LeafKind::Discrete})
        if (name == leaf_kind_name(k)) return k;
    return std::nullopt;
}

Certificate::Ptr Certificate::make_single_facet(std::vector<int> facet) {
    std::sort(facet.begin(), facet.end());
    auto node = std::shared_ptr<Certificate>(new Certificate());
    node->kind_ = LeafKind::SingleFacet;
    node->leaf_set_ = std::move(facet);
    return node;
}

Certificate::Ptr Certificate::make_discrete(std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    auto node = std::shared_ptr<Certificate>(new Certificate());
    node->kind_ = LeafKind::Discrete;
    node->leaf_set_ = std::move(vertices);
    return node;
}

Certificate::Ptr Certificate::make_internal(RuleTag rule, int vertex, Ptr deletion, Ptr link) {
    if (!deletion || !link)
        throw std::invalid_argument("internal certificate node needs both children");
    if (vertex < 0) throw std::invalid_argument("shed vertex must be nonnegative");
    auto node = std::shared_ptr<Certificate>(new Certificate());
    node->rule_ = rule;
    node->vertex_ = vertex;
    node->deletion_ = std::move(deletion);
    node->link_ = std::move(link);
    return node;
}

LeafKind Certificate::leaf_kind() const {
    if (!is_leaf()) throw std::logic_error("leaf_kind on internal node");
    return kind_;
}

const std::vector<int>& Certificate::leaf_set() const {
    if (!is_leaf()) throw std::logic_error("leaf_set on internal node");
    return leaf_set_;
}

RuleTag Certificate::rule() const {
    if (is_leaf()) throw std::logic_error("rule on leaf node");
    return rule_;
}

int Certificate::shed_vertex() const {
    if (is_leaf()) throw std::logic_error("shed_vertex on leaf node");
    return vertex_;
}

const Certificate::Ptr& Certificate::deletion_child() const {
    if (is_leaf()) throw std::logic_error("deletion_child on leaf node");
    return deletion_;
}

const Certificate::Ptr& Certificate::link_child() const {
    if (is_leaf()) throw std::logic_error("link_child on leaf node");
    return link_;
}

int Certificate::internal_node_count() const {
    if (is_leaf()) return 0;
    return 1 + deletion_->internal_node_count() + link_->internal_node_count();
}

bool certificates_equal(const Certificate::Ptr& a, const Certificate::Ptr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->is_leaf() != b->is_leaf()) return false;
    if (a->is_leaf())
        return a->leaf_kind() == b->leaf_kind() && a->leaf_set() == b->leaf_set();
    return a->rule() == b->rule() && a->shed_vertex() == b->shed_vertex() &&
           certificates_equal(a->deletion_child(), b->deletion_child()) &&
           certificates_equal(a->link_child(), b->link_child());
}

Certificate::Ptr relabel_certificate(const Certificate::Ptr& cert,
                                     const std::vector<int>& vertex_map) {
    if (!cert) return nullptr;
    auto map_vertex = [&vertex_map](int v) {
        if (v < 0 || static_cast<std::size_t>(v) >= vertex_map.size())
            throw std::invalid_argument("relabel_certificate: vertex has no image");
        return vertex_map[static_cast<std::size_t>(v)];
    };
    if (cert->is_leaf()) {
        std::vector<int> mapped;
        mapped.reserve(cert->leaf_set().size());
        for (int v : cert->leaf_set()) mapped.push_back(map_vertex(v));
        return cert->leaf_kind() == LeafKind::SingleFacet
                   ? Certificate::make_single_facet(std::move(mapped))
                   : Certificate::make_discrete(std::move(mapped));
    }
    return Certificate::make_internal(cert->rule(), map_vertex(cert->shed_vertex()),
                                      relabel_certificate(cert->deletion_child(), vertex_map),
                                      relabel_certificate(cert->link_child(), vertex_map));
}

}  // namespace vdc
