#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lycov/mask.hpp"

namespace lycov {

// Simple undirected graph on labeled vertices 1..n (n <= 62). A graph can
// carry an active vertex subset so that induced subgraphs keep their
// original labels; constructors activate every vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int ambient() const { return n_; }
    Mask vertices() const { return verts_; }
    int vertex_count() const { return popcount(verts_); }
    bool has_vertex(int v) const { return v >= 1 && v <= n_ && has_bit(verts_, v); }

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return has_bit(adj_[v - 1], u); }
    Mask neighbors(int v) const { return adj_[v - 1]; }
    int degree(int v) const { return popcount(adj_[v - 1]); }

    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, both 1-based

    Graph induced(Mask alpha) const;
    Graph without_vertex(int v) const { return induced(verts_ & ~bit(v)); }

    // Relabels active vertices as 1..k (k = vertex_count()), increasing in
    // original label; second component maps new label -> original label.
    std::pair<Graph, std::vector<int>> compact() const;

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && verts_ == o.verts_ && adj_ == o.adj_;
    }

private:
    int n_ = 0;
    Mask verts_ = 0;
    std::vector<Mask> adj_;
};

// Named families. Vertex labels follow the usual pictures: path/cycle in
// label order, star(m) = K_{1,m} with hub 1, wheel(n) = (n-1)-cycle plus
// dominating hub x_n.
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph star(int leaves);
Graph wheel(int n);
Graph complement(const Graph& g);

// L-join of two cycles: either sharing exactly one edge, or joined by a
// path with bridge_len >= 1 edges.
enum class LJoinMode { ShareEdge, BridgePath };
Graph l_join(int m, int n, LJoinMode mode, int bridge_len = 1);

struct ComponentSplit {
    std::vector<Mask> components;  // one mask per edge-containing component
    std::vector<int> isolated;     // isolated active vertices
    int edge_component_count() const { return static_cast<int>(components.size()); }
};

ComponentSplit edge_components(const Graph& g);

// Max number of edge-containing components over all induced subgraphs.
int c_max(const Graph& g);

enum class VertexClass {
    Whisker,
    HandleTriangle,
    HandleSquare,
    DegreeTwoFree,
    Dominating,
    Other,
};

// Classification of an active vertex by its neighborhood; priority
// Dominating > Whisker > HandleTriangle > HandleSquare > DegreeTwoFree.
// Isolated vertices are rejected.
VertexClass classify_vertex(const Graph& g, int v);

const char* to_string(VertexClass c);

// True iff the complement graph is chordal (perfect elimination ordering
// via maximum cardinality search), i.e. R/J(G) is Cohen-Macaulay.
bool is_cm_cover_ideal(const Graph& g);
bool is_chordal(const Graph& g);

bool is_connected(const Graph& g);
bool is_acyclic(const Graph& g);

// graph6, n <= 62 flavor only.
Graph parse_graph6(const std::string& s);
std::string emit_graph6(const Graph& g);

// Edge-list text: first line "n m", then m lines "u v" with u < v.
Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

// Lexicographically minimal adjacency bit-string over all vertex
// permutations of the compacted graph, packed into an integer
// (column-major upper triangle, graph6 bit order). Needs n <= 11.
std::uint64_t canonical_code(const Graph& g);

// One representative per isomorphism class of connected graphs, 3 <= n <= 7.
std::vector<Graph> enumerate_connected(int n);

}  // namespace lycov
