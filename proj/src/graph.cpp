#include "vdc/graph.hpp"

#include <algorithm>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <string>

namespace vdc {

Graph::Graph(int vertex_count) {
    if (vertex_count < 0)
        throw std::invalid_argument("vertex count must be nonnegative");
    adj_.resize(static_cast<std::size_t>(vertex_count));
}

Graph::Graph(int vertex_count, const std::vector<Edge>& edges) : Graph(vertex_count) {
    for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    auto& nu = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return;
    nu.insert(it, v);
    auto& nv = adj_[static_cast<std::size_t>(v)];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    Graph out(n);
    for (int u = 0; u < n; ++u) {
        const auto& nb = g.neighbors(u);
        std::size_t i = 0;
        for (int v = u + 1; v < n; ++v) {
            while (i < nb.size() && nb[i] < v) ++i;
            if (i < nb.size() && nb[i] == v) continue;
            out.add_edge(u, v);
        }
    }
    return out;
}

std::vector<int> open_neighborhood(const Graph& g, int v) {
    return g.neighbors(v);
}

std::vector<int> closed_neighborhood(const Graph& g, int v) {
    std::vector<int> out = g.neighbors(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

InducedSubgraph delete_vertices(const Graph& g, const std::vector<int>& removed) {
    const int n = g.vertex_count();
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    for (int v : removed) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
        gone[static_cast<std::size_t>(v)] = 1;
    }
    InducedSubgraph out;
    out.old_to_new.assign(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        if (gone[static_cast<std::size_t>(v)]) continue;
        out.old_to_new[static_cast<std::size_t>(v)] = static_cast<int>(out.new_to_old.size());
        out.new_to_old.push_back(v);
    }
    out.graph = Graph(static_cast<int>(out.new_to_old.size()));
    for (int v = 0; v < n; ++v) {
        if (gone[static_cast<std::size_t>(v)]) continue;
        for (int w : g.neighbors(v))
            if (v < w && !gone[static_cast<std::size_t>(w)])
                out.graph.add_edge(out.old_to_new[static_cast<std::size_t>(v)],
                                   out.old_to_new[static_cast<std::size_t>(w)]);
    }
    return out;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            ++count;
            stack.push_back(w);
        }
    }
    return count == n;
}

namespace {

// Rotate a simple cycle so the smallest vertex comes first, then orient it
// so the second entry is the smaller of the first vertex's two neighbors.
void canonicalize_cycle(std::vector<int>& cycle) {
    if (cycle.empty()) return;
    auto it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), it, cycle.end());
    if (cycle.size() >= 3 && cycle.back() < cycle[1])
        std::reverse(cycle.begin() + 1, cycle.end());
}

// Builds the odd cycle through the BFS tree when edge {u,w} joins two
// vertices of equal color.
std::vector<int> odd_cycle_from_conflict(int u, int w, const std::vector<int>& parent) {
    std::vector<int> pu{u}, pw{w};
    while (parent[static_cast<std::size_t>(pu.back())] >= 0)
        pu.push_back(parent[static_cast<std::size_t>(pu.back())]);
    while (parent[static_cast<std::size_t>(pw.back())] >= 0)
        pw.push_back(parent[static_cast<std::size_t>(pw.back())]);
    // Trim the shared tail down to the lowest common ancestor.
    while (pu.size() >= 2 && pw.size() >= 2 && pu[pu.size() - 2] == pw[pw.size() - 2]) {
        pu.pop_back();
        pw.pop_back();
    }
    std::vector<int> cycle = pu;  // u .. lca
    for (std::size_t i = pw.size() - 1; i-- > 0;) cycle.push_back(pw[i]);
    canonicalize_cycle(cycle);
    return cycle;
}

}  // namespace

BipartitionResult bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    BipartitionResult out;
    Bipartition parts;
    for (int root = 0; root < n; ++root) {
        if (color[static_cast<std::size_t>(root)] != -1) continue;
        color[static_cast<std::size_t>(root)] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
                    parent[static_cast<std::size_t>(w)] = v;
                    q.push(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
                    out.odd_cycle = odd_cycle_from_conflict(v, w, parent);
                    return out;
                }
            }
        }
    }
    for (int v = 0; v < n; ++v)
        (color[static_cast<std::size_t>(v)] == 0 ? parts.left : parts.right).push_back(v);
    out.parts = std::move(parts);
    return out;
}

std::vector<int> free_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

namespace {

// Component labels of g with one vertex ignored; -1 marks the ignored one.
std::vector<int> components_without(const Graph& g, int skip) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int label = 0;
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        if (root == skip || comp[static_cast<std::size_t>(root)] != -1) continue;
        comp[static_cast<std::size_t>(root)] = label;
        stack.assign(1, root);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (w == skip || comp[static_cast<std::size_t>(w)] != -1) continue;
                comp[static_cast<std::size_t>(w)] = label;
                stack.push_back(w);
            }
        }
        ++label;
    }
    return comp;
}

}  // namespace

bool is_on_cycle(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    const auto& nb = g.neighbors(v);
    if (nb.size() < 2) return false;
    auto comp = components_without(g, v);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (comp[static_cast<std::size_t>(nb[i])] == comp[static_cast<std::size_t>(nb[j])])
                return true;
    return false;
}

bool is_cut_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    if (!is_connected(g))
        throw std::invalid_argument("is_cut_vertex requires a connected graph");
    const int n = g.vertex_count();
    if (n <= 2) return false;
    auto comp = components_without(g, v);
    int labels = 0;
    for (int w = 0; w < n; ++w)
        if (w != v) labels = std::max(labels, comp[static_cast<std::size_t>(w)] + 1);
    return labels > 1;
}

int find_connectivity_preserving_cycle_vertex(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("need at least 2 vertices");
    if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
    if (!free_vertices(g).empty())
        throw std::invalid_argument("graph must have no degree-1 vertex");
    for (int v = 0; v < n; ++v)
        if (is_on_cycle(g, v) && !is_cut_vertex(g, v)) return v;
    throw std::logic_error("no cycle vertex preserves connectivity; this contradicts "
                           "the guarantee for connected bipartite graphs of min degree 2");
}

std::ostream& operator<<(std::ostream& os, const Graph& g) {
    os << "graph(n=" << g.vertex_count() << ", edges=[";
    bool first = true;
    for (const auto& [u, v] : g.edges()) {
        if (!first) os << " ";
        first = false;
        os << "(" << u << "," << v << ")";
    }
    return os << "])";
}

}  // namespace vdc
