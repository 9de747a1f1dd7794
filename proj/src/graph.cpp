#include "lycov/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lycov {

Graph::Graph(int n) : n_(n), verts_(full_mask(n)), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 1 || n > kMaxVars) throw std::invalid_argument("vertex count out of range");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (!has_vertex(u) || !has_vertex(v) || u == v)
        throw std::invalid_argument("bad edge");
    adj_[u - 1] |= bit(v);
    adj_[v - 1] |= bit(u);
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 1; v <= n_; ++v)
        if (has_bit(verts_, v)) twice += degree(v);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n_; ++u) {
        if (!has_bit(verts_, u)) continue;
        for (int v : mask_elements(adj_[u - 1]))
            if (v > u) out.emplace_back(u, v);
    }
    return out;
}

Graph Graph::induced(Mask alpha) const {
    Graph g;
    g.n_ = n_;
    g.verts_ = verts_ & alpha;
    g.adj_.assign(adj_.size(), 0);
    for (int v = 1; v <= n_; ++v)
        if (has_bit(g.verts_, v)) g.adj_[v - 1] = adj_[v - 1] & g.verts_;
    return g;
}

std::pair<Graph, std::vector<int>> Graph::compact() const {
    std::vector<int> labels = mask_elements(verts_);
    int k = static_cast<int>(labels.size());
    if (k == 0) throw std::invalid_argument("cannot compact the empty graph");
    std::vector<int> newof(static_cast<std::size_t>(n_) + 1, 0);
    for (int i = 0; i < k; ++i) newof[labels[i]] = i + 1;
    Graph g(k);
    for (int i = 0; i < k; ++i)
        for (int w : mask_elements(adj_[labels[i] - 1]))
            if (w > labels[i]) g.add_edge(i + 1, newof[w]);
    return {g, labels};
}

Graph path(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g = path(n);
    g.add_edge(n, 1);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

Graph star(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
    Graph g(leaves + 1);
    for (int v = 2; v <= leaves + 1; ++v) g.add_edge(1, v);
    return g;
}

Graph wheel(int n) {
    if (n < 4) throw std::invalid_argument("wheel needs at least 4 vertices");
    Graph g(n);
    for (int v = 1; v < n - 1; ++v) g.add_edge(v, v + 1);
    g.add_edge(n - 1, 1);
    for (int v = 1; v < n; ++v) g.add_edge(v, n);
    return g;
}

Graph complement(const Graph& g) {
    Graph out = Graph(g.ambient()).induced(g.vertices());
    auto vs = mask_elements(g.vertices());
    for (int v : vs)
        for (int w : vs)
            if (w > v && !g.adjacent(v, w)) out.add_edge(v, w);
    return out;
}

Graph l_join(int m, int n, LJoinMode mode, int bridge_len) {
    if (m < 3 || n < 3) throw std::invalid_argument("l_join needs two cycles");
    if (mode == LJoinMode::ShareEdge) {
        // C_m on 1..m with shared edge {1,2}; C_n runs 1-2-(m+1)-...-(m+n-2)-1
        int total = m + n - 2;
        if (total > kMaxVars) throw std::invalid_argument("l_join too large");
        Graph out(total);
        for (auto [u, v] : cycle(m).edges()) out.add_edge(u, v);
        int prev = 2;
        for (int w = m + 1; w <= total; ++w) {
            out.add_edge(prev, w);
            prev = w;
        }
        out.add_edge(prev, 1);
        return out;
    }
    if (bridge_len < 1) throw std::invalid_argument("bridge path needs length >= 1");
    // C_m on 1..m, then a path 1-(m+1)-...-(m+bridge_len), C_n starting there
    int total = m + n + bridge_len - 1;
    if (total > kMaxVars) throw std::invalid_argument("l_join too large");
    Graph out(total);
    for (auto [u, v] : cycle(m).edges()) out.add_edge(u, v);
    int prev = 1;
    for (int w = m + 1; w <= m + bridge_len; ++w) {
        out.add_edge(prev, w);
        prev = w;
    }
    int base = m + bridge_len;
    for (int i = 0; i + 1 < n; ++i) out.add_edge(base + i, base + i + 1);
    out.add_edge(base + n - 1, base);
    return out;
}

ComponentSplit edge_components(const Graph& g) {
    ComponentSplit out;
    Mask seen = 0;
    for (int v : mask_elements(g.vertices())) {
        if (has_bit(seen, v)) continue;
        if (g.degree(v) == 0) {
            out.isolated.push_back(v);
            seen |= bit(v);
            continue;
        }
        Mask comp = bit(v), frontier = bit(v);
        while (frontier) {
            Mask next = 0;
            for (int u : mask_elements(frontier)) next |= g.neighbors(u);
            frontier = next & ~comp;
            comp |= frontier;
        }
        out.components.push_back(comp);
        seen |= comp;
    }
    return out;
}

int c_max(const Graph& g) {
    if (g.edge_count() == 0) throw std::invalid_argument("c_max of an edgeless graph");
    auto [h, labels] = g.compact();
    int k = h.ambient();
    if (k > 24) throw std::invalid_argument("c_max scan limited to 24 vertices");
    int best = 1;
    Mask top = full_mask(k);
    for (Mask a = 1; a <= top; ++a) {
        if (popcount(a) < 2 * (best + 1)) continue;  // cannot beat best
        auto split = edge_components(h.induced(a));
        best = std::max(best, split.edge_component_count());
    }
    return best;
}

VertexClass classify_vertex(const Graph& g, int v) {
    if (!g.has_vertex(v)) throw std::invalid_argument("no such vertex");
    int deg = g.degree(v);
    if (deg == 0) throw std::invalid_argument("isolated vertex has no class");
    if (deg == g.vertex_count() - 1) return VertexClass::Dominating;
    if (deg == 1) return VertexClass::Whisker;
    if (deg == 2) {
        auto nb = mask_elements(g.neighbors(v));
        int a = nb[0], b = nb[1];
        if (g.adjacent(a, b)) return VertexClass::HandleTriangle;
        if (g.neighbors(a) & g.neighbors(b) & ~bit(v)) return VertexClass::HandleSquare;
        return VertexClass::DegreeTwoFree;
    }
    return VertexClass::Other;
}

const char* to_string(VertexClass c) {
    switch (c) {
        case VertexClass::Whisker: return "Whisker";
        case VertexClass::HandleTriangle: return "HandleTriangle";
        case VertexClass::HandleSquare: return "HandleSquare";
        case VertexClass::DegreeTwoFree: return "DegreeTwoFree";
        case VertexClass::Dominating: return "Dominating";
        case VertexClass::Other: return "Other";
    }
    return "?";
}

bool is_chordal(const Graph& g) {
    auto [h, labels] = g.compact();
    int n = h.ambient();
    // maximum cardinality search, ties broken by smallest label
    std::vector<int> weight(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
    Mask unnumbered = full_mask(n);
    for (int step = n; step >= 1; --step) {
        int pick = -1, bestw = -1;
        for (int v : mask_elements(unnumbered))
            if (weight[v] > bestw) { bestw = weight[v]; pick = v; }
        unnumbered &= ~bit(pick);
        pos[pick] = step;
        for (int u : mask_elements(h.neighbors(pick) & unnumbered)) ++weight[u];
    }
    // perfect elimination check: later neighbors of v minus its earliest
    // later neighbor must all be adjacent to that neighbor
    for (int v = 1; v <= n; ++v) {
        Mask later = 0;
        for (int u : mask_elements(h.neighbors(v)))
            if (pos[u] > pos[v]) later |= bit(u);
        if (!later) continue;
        int first = -1, firstpos = n + 1;
        for (int u : mask_elements(later))
            if (pos[u] < firstpos) { firstpos = pos[u]; first = u; }
        if ((later & ~bit(first) & ~h.neighbors(first)) != 0) return false;
    }
    return true;
}

bool is_cm_cover_ideal(const Graph& g) { return is_chordal(complement(g)); }

bool is_connected(const Graph& g) {
    auto split = edge_components(g);
    return split.components.size() + split.isolated.size() <= 1;
}

bool is_acyclic(const Graph& g) {
    auto split = edge_components(g);
    for (Mask comp : split.components) {
        Graph h = g.induced(comp);
        if (h.edge_count() != h.vertex_count() - 1) return false;
    }
    return true;
}

Graph parse_graph6(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty graph6 string");
    for (char ch : s)
        if (ch < 63 || ch > 126)
            throw std::invalid_argument("graph6 byte out of range");
    int n = s[0] - 63;
    if (n == 0) throw std::invalid_argument("graph6 with zero vertices");
    if (n > kMaxVars) throw std::invalid_argument("graph6 flavor limited to n <= 62");
    int nbits = n * (n - 1) / 2;
    int nbytes = (nbits + 5) / 6;
    if (static_cast<int>(s.size()) != 1 + nbytes)
        throw std::invalid_argument("truncated or overlong graph6 string");
    Graph g(n);
    int k = 0;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) {
            int byte = s[static_cast<std::size_t>(1 + k / 6)] - 63;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
            ++k;
        }
    return g;
}

std::string emit_graph6(const Graph& g) {
    auto [h, labels] = g.compact();
    int n = h.ambient();
    int nbits = n * (n - 1) / 2;
    int nbytes = (nbits + 5) / 6;
    std::string s;
    s.push_back(static_cast<char>(n + 63));
    std::vector<int> bytes(static_cast<std::size_t>(nbytes), 0);
    int k = 0;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) {
            if (h.adjacent(i, j)) bytes[static_cast<std::size_t>(k / 6)] |= 1 << (5 - k % 6);
            ++k;
        }
    for (int b : bytes) s.push_back(static_cast<char>(b + 63));
    return s;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing header");
    if (n < 1 || n > kMaxVars) throw std::invalid_argument("edge list: bad vertex count");
    Graph g(n);
    for (int e = 0; e < m; ++e) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated");
        if (u < 1 || v < 1 || u >= v || v > n)
            throw std::invalid_argument("edge list: bad edge, need 1 <= u < v <= n");
        g.add_edge(u, v);
    }
    return g;
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.ambient() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

namespace {

// Branch-and-bound search for the lexicographically minimal adjacency
// bit-string. Bits are laid out column-major like graph6, so placing one
// more vertex appends a contiguous block and prefixes compare cleanly.
struct CanonSearch {
    const Graph* g = nullptr;
    int n = 0, total_bits = 0;
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<int> placed;

    std::uint64_t block_of(int v, int level) const {
        // adjacency of v against placed[0..level-1], earlier position = MSB
        std::uint64_t b = 0;
        for (int k = 0; k < level; ++k)
            b = (b << 1) | (g->adjacent(v, placed[static_cast<std::size_t>(k)]) ? 1u : 0u);
        return b;
    }

    void dfs(int level, std::uint64_t prefix, int prefix_bits, Mask used) {
        if (level == n) {
            best = std::min(best, prefix);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (has_bit(used, v)) continue;
            std::uint64_t np = (prefix << level) | block_of(v, level);
            int nb = prefix_bits + level;
            if ((best >> (total_bits - nb)) < np) continue;
            placed.push_back(v);
            dfs(level + 1, np, nb, used | bit(v));
            placed.pop_back();
        }
    }
};

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    auto [h, labels] = g.compact();
    int n = h.ambient();
    if (n > 11) throw std::invalid_argument("canonical_code limited to 11 vertices");
    if (n == 1) return 0;
    CanonSearch s;
    s.g = &h;
    s.n = n;
    s.total_bits = n * (n - 1) / 2;
    s.placed.reserve(static_cast<std::size_t>(n));
    s.dfs(0, 0, 0, 0);
    return s.best;
}

std::vector<Graph> enumerate_connected(int n) {
    if (n < 3 || n > 7)
        throw std::invalid_argument("enumerate_connected supports 3 <= n <= 7");
    int nbits = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> slots;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
    std::set<std::uint64_t> seen;
    std::vector<Graph> out;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << nbits); ++m) {
        if (std::popcount(m) < n - 1) continue;  // too few edges to connect
        Graph g(n);
        for (int b = 0; b < nbits; ++b)
            if ((m >> b) & 1) g.add_edge(slots[static_cast<std::size_t>(b)].first,
                                         slots[static_cast<std::size_t>(b)].second);
        if (!is_connected(g)) continue;
        if (seen.insert(canonical_code(g)).second) out.push_back(g);
    }
    return out;
}

}  // namespace lycov
