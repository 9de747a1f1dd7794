#include "lycov/bass.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lycov/ideal.hpp"
#include "lycov/resolution.hpp"

namespace lycov {

namespace {

LyubeznikTable subgraph_table(const Graph& g, Mask alpha, BassMethod method,
                              const FieldSpec& F) {
    Graph sub = g.induced(alpha);
    if (sub.edge_count() == 0)
        throw BadAlpha("face selects an edgeless subgraph");
    switch (method) {
        case BassMethod::Oracle:
            return oracle_table(sub, F);
        case BassMethod::Split: {
            SplitPolicy pol;
            pol.field = F;
            pol.fallback = FallbackPolicy::FailIfStuck;
            return split_table(sub, pol).table;
        }
        case BassMethod::ClosedForm: {
            auto entries = bass_closed_form(g, alpha, F);
            if (!entries) throw NotApplicable("closed form assumptions fail");
            LyubeznikTable t(popcount(alpha & g.vertices()), popcount(alpha & g.vertices()) - 2);
            for (const auto& e : entries.value())
                t.set(e.p, popcount(alpha & g.vertices()) - e.r, e.mu);
            return t;
        }
        case BassMethod::Auto:
        default: {
            SplitPolicy pol;
            pol.field = F;
            return split_table(sub, pol).table;
        }
    }
}

}  // namespace

std::vector<BassEntry> bass_numbers(const Graph& g, Mask alpha, BassMethod method,
                                    const FieldSpec& F) {
    alpha &= g.vertices();
    LyubeznikTable t = subgraph_table(g, alpha, method, F);
    int asz = popcount(alpha);
    std::vector<BassEntry> out;
    for (const auto& [pi, v] : t.entries()) {
        int r = asz - pi.second;
        out.push_back(BassEntry{r, alpha, pi.first, v});
    }
    std::sort(out.begin(), out.end(), [](const BassEntry& a, const BassEntry& b) {
        return std::tie(a.r, a.p, a.alpha) < std::tie(b.r, b.p, b.alpha);
    });
    return out;
}

bool trivial_components_assumption(const Graph& g, const FieldSpec& F) {
    auto [h, labels] = g.compact();
    int n = h.ambient();
    std::map<std::uint64_t, bool> cache;
    SplitPolicy pol;
    pol.field = F;
    for (Mask a = 1; a <= full_mask(n); ++a) {
        Graph sub = h.induced(a);
        if (sub.edge_count() == 0) continue;
        for (Mask comp : edge_components(sub).components) {
            Graph cg = sub.induced(comp);
            std::uint64_t key = canonical_code(cg);
            auto it = cache.find(key);
            if (it == cache.end()) {
                SplitResult res = split_table(cg, pol);
                it = cache.emplace(key, res.certified && res.table.is_trivial()).first;
            }
            if (!it->second) return false;
        }
    }
    return true;
}

std::optional<std::vector<BassEntry>> bass_closed_form(const Graph& g, Mask alpha,
                                                       const FieldSpec& F) {
    alpha &= g.vertices();
    Graph sub = g.induced(alpha);
    if (sub.edge_count() == 0) throw BadAlpha("face selects an edgeless subgraph");
    if (!trivial_components_assumption(g, F)) return std::nullopt;
    int c = edge_components(sub).edge_component_count();
    int asz = popcount(alpha);
    std::vector<BassEntry> out;
    for (int k = 1; k <= c; ++k)
        out.push_back(BassEntry{k + 1, alpha, asz - 2 * k, binomial(c, k)});
    return out;
}

long long bass_at_general_prime(const Graph& g, Mask alpha, int s, int r, int p,
                                BassMethod method, const FieldSpec& F) {
    if (s < 0) throw std::invalid_argument("height shift must be >= 0");
    if (p - s < 0) return 0;
    for (const auto& e : bass_numbers(g, alpha, method, F))
        if (e.r == r && e.p == p - s) return e.mu;
    return 0;
}

InjectiveSummary injective_resolution_summary(const Graph& g, int r, BassMethod method,
                                              const FieldSpec& F) {
    if (r < 2) throw std::invalid_argument("local cohomology of a cover ideal starts at r = 2");
    auto [h, labels] = g.compact();
    int n = h.ambient();
    InjectiveSummary out{r, {}, 0};
    std::set<int> strands;
    for (Mask a = 1; a <= full_mask(n); ++a) {
        if (h.induced(a).edge_count() == 0) continue;
        for (const auto& e : bass_numbers(h, a, method, F)) {
            if (e.r != r) continue;
            // translate back to the original labels
            Mask orig = 0;
            for (int pos : mask_elements(e.alpha)) orig |= bit(labels[static_cast<std::size_t>(pos - 1)]);
            out.entries.push_back(BassEntry{r, orig, e.p, e.mu});
            strands.insert(popcount(e.alpha) - e.p);
        }
    }
    std::sort(out.entries.begin(), out.entries.end(),
              [](const BassEntry& a, const BassEntry& b) {
                  return std::tie(a.p, a.alpha) < std::tie(b.p, b.alpha);
              });
    out.strand_count = static_cast<int>(strands.size());
    return out;
}

std::vector<InjectiveSummary> full_bass_report(const Graph& g, BassMethod method,
                                               const FieldSpec& F) {
    std::vector<InjectiveSummary> out;
    for (int r = 2; r <= g.vertex_count(); ++r) {
        auto s = injective_resolution_summary(g, r, method, F);
        if (!s.entries.empty()) out.push_back(std::move(s));
    }
    return out;
}

int cohomological_dimension(const Graph& g, CdMethod method, const FieldSpec& F) {
    auto [h, labels] = g.compact();
    if (h.edge_count() == 0) throw std::invalid_argument("cd needs at least one edge");
    if (method == CdMethod::Exact) {
        GradedResolution res = taylor(h.ambient(), edge_ideal(h).gens());
        minimalize(res, F);
        int cd = 0;
        for (int j = 0; j < static_cast<int>(res.levels.size()); ++j)
            for (Mask d : res.levels[static_cast<std::size_t>(j)])
                cd = std::max(cd, popcount(d) - j);
        return cd;
    }
    // closed forms
    int cm = c_max(h);
    auto verts = mask_elements(h.vertices());
    bool is_cycle = h.vertex_count() >= 3 &&
                    std::all_of(verts.begin(), verts.end(),
                                [&](int v) { return h.degree(v) == 2; }) &&
                    is_connected(h);
    if (is_cycle) {
        int n = h.vertex_count();
        return n % 3 == 2 ? cm + 2 : cm + 1;
    }
    if (!trivial_components_assumption(h, F))
        throw NotApplicable("closed-form cd needs trivial-components assumptions or a cycle");
    return cm + 1;
}

CdPdSummary projective_dimension_summary(const Graph& g, const FieldSpec& F) {
    auto [h, labels] = g.compact();
    CdPdSummary s{};
    s.cd = cohomological_dimension(h, CdMethod::Exact, F);
    s.pd = projective_dimension(edge_ideal(h), F);
    s.c_max = c_max(h);
    s.closed_form = s.c_max + 1;
    s.closed_form_applies = trivial_components_assumption(h, F);
    s.pd_matches_closed_form = (s.pd == s.closed_form);
    return s;
}

int smallest_index_mixed(const std::vector<std::vector<int>>& cycle_chains,
                         int trivial_components, int alpha_size) {
    int r = static_cast<int>(cycle_chains.size());
    int ksum = 0, tsum = 0;
    for (const auto& chain : cycle_chains) {
        tsum += static_cast<int>(chain.size());
        for (int n : chain) {
            if (n < 3) throw std::invalid_argument("cycle length must be >= 3");
            switch (n % 3) {
                case 0: ksum += n / 3; break;
                case 1: ksum += (n - 1) / 3; break;
                default: ksum += (n + 1) / 3; break;
            }
        }
    }
    if (r + trivial_components == 0) throw std::invalid_argument("no components");
    return alpha_size - ksum + tsum - r - trivial_components - 1;
}

namespace {

std::string entry_token(const BassEntry& e, int n) {
    std::string s = "E_" + format_mask(e.alpha, n);
    if (e.mu > 1) s += "^" + std::to_string(e.mu);
    return s;
}

}  // namespace

std::string render_bass_text(const Graph& g, const std::vector<InjectiveSummary>& summaries,
                             const FieldSpec& F) {
    std::ostringstream out;
    out << "char " << F.p << "\n";
    for (const auto& s : summaries) {
        out << "H^" << s.r << ": 0 -> H^" << s.r;
        std::map<int, std::vector<const BassEntry*>> bypos;
        for (const auto& e : s.entries) bypos[e.p].push_back(&e);
        for (const auto& [p, list] : bypos) {
            out << " -> [p=" << p << "]";
            for (const auto* e : list) out << ' ' << entry_token(*e, g.ambient());
        }
        out << " -> 0\n";
        out << "  linear strands: " << s.strand_count << "\n";
    }
    return out.str();
}

std::string render_bass_json(const Graph& g, const std::vector<InjectiveSummary>& summaries,
                             const FieldSpec& F) {
    nlohmann::json j;
    j["char"] = F.p;
    j["modules"] = nlohmann::json::array();
    for (const auto& s : summaries) {
        nlohmann::json m;
        m["r"] = s.r;
        m["strands"] = s.strand_count;
        m["entries"] = nlohmann::json::array();
        for (const auto& e : s.entries)
            m["entries"].push_back({{"r", e.r},
                                    {"p", e.p},
                                    {"alpha", format_mask(e.alpha, g.ambient())},
                                    {"mu", e.mu}});
        j["modules"].push_back(std::move(m));
    }
    return j.dump();
}

}  // namespace lycov
