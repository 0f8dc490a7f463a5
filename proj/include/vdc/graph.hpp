#pragma once

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace vdc {

/// Undirected edge, normalized so that first < second.
using Edge = std::pair<int, int>;

/// Finite simple undirected graph on dense 0-indexed vertices.
/// No self-loops, no multi-edges; adjacency lists are kept ascending.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);
    Graph(int vertex_count, const std::vector<Edge>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    bool has_edge(int u, int v) const;
    /// Inserts {u,v}; a no-op if the edge is already present.
    void add_edge(int u, int v);

    int degree(int v) const;
    const std::vector<int>& neighbors(int v) const;
    /// All edges as (u,v) with u < v, in ascending order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;

    void check_vertex(int v) const;
};

/// Graph on the same vertices whose edges are exactly the non-edges.
Graph complement(const Graph& g);

/// Vertices adjacent to v (v itself excluded), ascending.
std::vector<int> open_neighborhood(const Graph& g, int v);

/// open_neighborhood(g, v) plus v itself, ascending.
std::vector<int> closed_neighborhood(const Graph& g, int v);

/// Induced subgraph after deleting a vertex set, with the index maps
/// needed to translate between old and new labels. Surviving vertices
/// are re-indexed densely in ascending label order.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for deleted vertices
    std::vector<int> new_to_old;  // ascending original labels
};
InducedSubgraph delete_vertices(const Graph& g, const std::vector<int>& removed);

/// True iff every vertex is reachable from vertex 0 (graphs on at most
/// one vertex count as connected).
bool is_connected(const Graph& g);

struct Bipartition {
    std::vector<int> left;
    std::vector<int> right;
};

/// Outcome of 2-coloring: either the parts, or an odd closed walk
/// witnessing that no proper 2-coloring exists. The witness is a simple
/// odd cycle, rotated so its smallest vertex comes first and the smaller
/// of that vertex's two cycle neighbors comes second.
struct BipartitionResult {
    std::optional<Bipartition> parts;
    std::vector<int> odd_cycle;

    bool is_bipartite() const { return parts.has_value(); }
};

/// Canonical 2-coloring: the smallest-index vertex of each connected
/// component goes into the left part.
BipartitionResult bipartition(const Graph& g);

/// All vertices of degree exactly 1, ascending.
std::vector<int> free_vertices(const Graph& g);

/// True iff some cycle of g passes through v, i.e. two distinct
/// neighbors of v remain connected after v is removed.
bool is_on_cycle(const Graph& g, int v);

/// True iff removing v disconnects g. Requires g connected.
bool is_cut_vertex(const Graph& g, int v);

/// Smallest-index vertex that lies on a cycle and is not a cut vertex.
/// Requires g connected and without degree-1 vertices on >= 2 vertices;
/// under those hypotheses (with g bipartite) such a vertex always exists,
/// so failure to find one throws std::logic_error.
int find_connectivity_preserving_cycle_vertex(const Graph& g);

std::ostream& operator<<(std::ostream& os, const Graph& g);

}  // namespace vdc
