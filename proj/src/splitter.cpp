#include "lycov/splitter.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "lycov/resolution.hpp"

namespace lycov {

const char* to_string(Rule r) {
    switch (r) {
        case Rule::Whisker: return "Whisker";
        case Rule::HandleTriangle: return "HandleTriangle";
        case Rule::HandleSquare: return "HandleSquare";
        case Rule::DegreeTwoCor: return "DegreeTwoCor";
        case Rule::DegreeTwoProp: return "DegreeTwoProp";
        case Rule::Dominating: return "Dominating";
        case Rule::CycleFormula: return "CycleFormula";
        case Rule::TwoCyclesFormula: return "TwoCyclesFormula";
        case Rule::Disconnect: return "Disconnect";
        case Rule::OracleFallback: return "OracleFallback";
    }
    return "?";
}

Graph deg_two_auxiliary_graph(const Graph& g, int v) {
    if (classify_vertex(g, v) != VertexClass::DegreeTwoFree)
        throw std::invalid_argument("auxiliary graph needs a degree-two vertex with free neighbors");
    auto nb = mask_elements(g.neighbors(v));
    int u1 = nb[0], u2 = nb[1];
    Mask keep = g.vertices() & ~bit(v) & ~bit(u1) & ~bit(u2);
    Graph h = g.induced(keep);
    for (int a : mask_elements(g.neighbors(u1) & ~bit(v)))
        for (int b : mask_elements(g.neighbors(u2) & ~bit(v)))
            if (!h.adjacent(a, b)) h.add_edge(a, b);
    return h;
}

std::pair<SqfreeIdeal, SqfreeIdeal> mv_split_at_vertex(const Graph& g, int v) {
    if (g.vertices() != full_mask(g.ambient()))
        throw std::invalid_argument("mv_split_at_vertex expects a fully active graph");
    if (!g.has_vertex(v) || g.degree(v) < 1)
        throw std::invalid_argument("splitting vertex must have degree >= 1");
    std::vector<Mask> away, at;
    for (auto [a, b] : g.edges()) {
        Mask e = bit(a) | bit(b);
        if (a == v || b == v) at.push_back(e);
        else away.push_back(e);
    }
    SqfreeIdeal l = SqfreeIdeal::from_primes(g.ambient(), away);
    SqfreeIdeal k = SqfreeIdeal::from_primes(g.ambient(), at);
    return {l, k};
}

std::optional<LyubeznikTable> combine_mv(const LyubeznikTable& t_l,
                                         const LyubeznikTable& t_k,
                                         const LyubeznikTable& t_lk) {
    if (!t_k.is_trivial()) throw std::invalid_argument("combine_mv needs trivial T_K");
    int n = t_l.ambient(), d = t_l.dim();
    if (t_k.ambient() != n || t_lk.ambient() != n || t_k.dim() != d || t_lk.dim() != d - 1)
        throw std::invalid_argument("combine_mv table shapes do not match");
    if (t_lk.is_trivial()) return t_l;  // cases i) and ii)
    if (t_l.is_trivial()) {             // case iii)
        LyubeznikTable t(n, d);
        for (const auto& [pi, v] : t_lk.entries()) t.add(pi.first, pi.second + 1, v);
        t.set(d - 1, d, t.at(d - 1, d) - 1);
        t.set(d, d, 1);
        return t;
    }
    return std::nullopt;
}

namespace {

SplitResult split_any(const Graph& g, const SplitPolicy& policy);

void append_trace(SplitResult& dst, const std::vector<RuleStep>& src) {
    dst.trace.insert(dst.trace.end(), src.begin(), src.end());
}

RuleStep step_of(Rule r, int vertex, const Graph& before, int after, std::string note = {}) {
    return RuleStep{r, vertex, before.vertex_count(), after, std::move(note)};
}

// Superposition of the degree-two splitting: the table of G \ {v} read in
// one more variable, plus the auxiliary graph's table pushed two columns
// right, plus one extra unit at (d-1, d).
LyubeznikTable deg_two_superpose(int nv, const LyubeznikTable& l_intrinsic,
                                 const LyubeznikTable& h_intrinsic) {
    int d = nv - 2;
    LyubeznikTable t(nv, d);
    LyubeznikTable led = l_intrinsic.embed(1);
    for (const auto& [pi, v] : led.entries()) t.set(pi.first, pi.second, v);
    for (const auto& [pi, v] : h_intrinsic.entries())
        t.add(pi.first, pi.second + 2, v);
    t.add(d - 1, d, 1);
    return t;
}

// Literal C_m * C_n shapes: all degrees 2 except exactly two vertices of
// degree 3. Returns (m, n) with m <= n when the graph is an L-join.
std::optional<std::pair<int, int>> recognize_l_join(const Graph& g) {
    std::vector<int> deg3;
    for (int v : mask_elements(g.vertices())) {
        int d = g.degree(v);
        if (d == 3) deg3.push_back(v);
        else if (d != 2) return std::nullopt;
    }
    if (deg3.size() != 2) return std::nullopt;
    int u = deg3[0], w = deg3[1];
    int nv = g.vertex_count();
    auto walk = [&](int from, int first) {
        // follow the degree-two chain; returns (endpoint, edge count)
        int prev = from, cur = first, len = 1;
        while (g.degree(cur) == 2) {
            int next = mask_elements(g.neighbors(cur) & ~bit(prev))[0];
            prev = cur;
            cur = next;
            ++len;
        }
        return std::make_pair(cur, len);
    };
    if (g.adjacent(u, w)) {
        // shared edge: the rest must be one cycle through every vertex
        std::vector<int> arcs;
        for (int x : mask_elements(g.neighbors(u) & ~bit(w))) {
            auto [end, len] = walk(u, x);
            if (end != w) return std::nullopt;
            arcs.push_back(len);
        }
        if (arcs.size() != 2 || arcs[0] + arcs[1] != nv) return std::nullopt;
        int m = arcs[0] + 1, n = arcs[1] + 1;
        if (m > n) std::swap(m, n);
        if (m < 3) return std::nullopt;
        return std::make_pair(m, n);
    }
    // bridge: u sees its own cycle twice plus one path to w
    int m = 0, n = 0, bridge = -1;
    int self_u = 0, to_w = 0;
    for (int x : mask_elements(g.neighbors(u))) {
        auto [end, len] = walk(u, x);
        if (end == u) { ++self_u; m = len; }
        else if (end == w) { ++to_w; bridge = len; }
        else return std::nullopt;
    }
    if (self_u != 2 || to_w != 1) return std::nullopt;
    int self_w = 0;
    for (int x : mask_elements(g.neighbors(w))) {
        auto [end, len] = walk(w, x);
        if (end == w) { ++self_w; n = len; }
    }
    if (self_w != 2) return std::nullopt;
    if (m + n + bridge - 1 != nv) return std::nullopt;
    if (m > n) std::swap(m, n);
    if (m < 3) return std::nullopt;
    return std::make_pair(m, n);
}

SplitResult oracle_step(const Graph& g, const SplitPolicy& policy) {
    SplitResult out{oracle_table(g, policy.field), {}, true};
    out.trace.push_back(step_of(Rule::OracleFallback, 0, g, g.vertex_count(),
                                "graph6 " + emit_graph6(g)));
    return out;
}

SplitResult split_connected(const Graph& g, const SplitPolicy& policy) {
    int nv = g.vertex_count();
    auto verts = mask_elements(g.vertices());

    for (int v : verts)
        if (g.degree(v) == nv - 1) {
            SplitResult out{trivial_table(nv, nv - 2), {}, true};
            out.trace.push_back(step_of(Rule::Dominating, v, g, nv));
            return out;
        }

    for (int v : verts)
        if (g.degree(v) == 1) {
            SplitResult sub = split_any(g.without_vertex(v), policy);
            SplitResult out{sub.table.embed(1), {}, sub.certified};
            out.trace.push_back(step_of(Rule::Whisker, v, g, nv - 1));
            append_trace(out, sub.trace);
            return out;
        }

    for (int v : verts) {
        if (g.degree(v) != 2) continue;
        VertexClass c = classify_vertex(g, v);
        if (c != VertexClass::HandleTriangle && c != VertexClass::HandleSquare) continue;
        SplitResult sub = split_any(g.without_vertex(v), policy);
        SplitResult out{sub.table.embed(1), {}, sub.certified};
        out.trace.push_back(step_of(
            c == VertexClass::HandleTriangle ? Rule::HandleTriangle : Rule::HandleSquare,
            v, g, nv - 1));
        append_trace(out, sub.trace);
        return out;
    }

    bool all_two = std::all_of(verts.begin(), verts.end(),
                               [&](int v) { return g.degree(v) == 2; });
    if (all_two) {
        SplitResult out{cycle_table(nv), {}, true};
        out.trace.push_back(step_of(Rule::CycleFormula, 0, g, nv, "n=" + std::to_string(nv)));
        return out;
    }

    if (auto mn = recognize_l_join(g)) {
        SplitResult out{two_cycles_table(mn->first, mn->second, nv), {}, true};
        out.trace.push_back(step_of(Rule::TwoCyclesFormula, 0, g, nv,
                                    "m=" + std::to_string(mn->first) +
                                        " n=" + std::to_string(mn->second)));
        return out;
    }

    // degree-two splitting: scan candidates for a certified trivial L first
    std::vector<int> candidates;
    std::map<int, SplitResult> l_results;
    for (int v : verts) {
        if (g.degree(v) != 2) continue;
        if (classify_vertex(g, v) != VertexClass::DegreeTwoFree) continue;
        Graph l = g.without_vertex(v);
        if (!is_connected(l)) continue;  // the splitting formulas assume connected L
        candidates.push_back(v);
        l_results.emplace(v, split_any(l, policy));
    }
    for (int v : candidates) {
        const SplitResult& recl = l_results.at(v);
        if (!recl.certified || !recl.table.is_trivial()) continue;
        SplitResult rech = split_any(deg_two_auxiliary_graph(g, v), policy);
        SplitResult out{deg_two_superpose(nv, recl.table, rech.table), {}, rech.certified};
        out.trace.push_back(step_of(Rule::DegreeTwoCor, v, g, nv - 1));
        append_trace(out, recl.trace);
        append_trace(out, rech.trace);
        return out;
    }
    if (policy.allow_deg_two_prop && !candidates.empty()) {
        int v = candidates.front();
        const SplitResult& recl = l_results.at(v);
        SplitResult rech = split_any(deg_two_auxiliary_graph(g, v), policy);
        SplitResult out{deg_two_superpose(nv, recl.table, rech.table), {}, false};
        std::string note;
        if (policy.verify_uncertified && g.edge_count() <= 20) {
            LyubeznikTable exact = oracle_table(g, policy.field);
            if (exact == out.table) {
                out.certified = recl.certified && rech.certified;
                note = "verified against oracle";
            } else {
                out.table = exact;
                out.certified = true;
                note = "superposition mismatch, oracle result used";
            }
        }
        out.trace.push_back(step_of(Rule::DegreeTwoProp, v, g, nv - 1, note));
        append_trace(out, recl.trace);
        append_trace(out, rech.trace);
        return out;
    }

    if (policy.fallback == FallbackPolicy::OracleFallback) return oracle_step(g, policy);
    throw NoRuleApplies(emit_graph6(g));
}

SplitResult split_any(const Graph& g, const SplitPolicy& policy) {
    auto comps = edge_components(g);
    int isolated = static_cast<int>(comps.isolated.size());
    if (comps.components.size() == 1 && isolated == 0)
        return split_connected(g, policy);

    SplitResult out{LyubeznikTable(0, 0), {}, true};
    bool first = true;
    std::ostringstream note;
    note << comps.components.size() << " components, " << isolated << " isolated";
    std::vector<RuleStep> subtraces;
    LyubeznikTable acc(0, 0);
    for (Mask comp : comps.components) {
        SplitResult sub = split_any(g.induced(comp), policy);
        out.certified = out.certified && sub.certified;
        subtraces.insert(subtraces.end(), sub.trace.begin(), sub.trace.end());
        acc = first ? sub.table : thom_sebastiani(acc, sub.table);
        first = false;
    }
    out.table = acc.embed(isolated);
    out.trace.push_back(step_of(Rule::Disconnect, 0, g, g.vertex_count(), note.str()));
    append_trace(out, subtraces);
    return out;
}

}  // namespace

SplitResult split_table(const Graph& g, const SplitPolicy& policy) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("split_table needs at least one edge");
    return split_any(g, policy);
}

LyubeznikTable forest_table(const Graph& g) {
    if (!is_acyclic(g)) throw std::invalid_argument("forest_table needs an acyclic graph");
    auto comps = edge_components(g);
    int c = comps.edge_component_count();
    if (c == 0) throw std::invalid_argument("forest_table needs at least one edge");
    return disjoint_trivial_table(c, g.vertex_count() - 2);
}

std::string render_trace(const std::vector<RuleStep>& steps, bool certified) {
    std::ostringstream out;
    for (const auto& s : steps) {
        out << to_string(s.rule);
        if (s.vertex) out << "@x" << s.vertex;
        out << ": " << s.before << "->" << s.after;
        if (!s.note.empty()) out << " (" << s.note << ")";
        out << '\n';
    }
    out << "certified: " << (certified ? "yes" : "no") << '\n';
    return out.str();
}

}  // namespace lycov
