// Command-line front end: Lyubeznik tables, Bass numbers, cohomological and
// projective dimension, and the connected-graph census.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "lycov/bass.hpp"
#include "lycov/census.hpp"
#include "lycov/graph.hpp"
#include "lycov/ideal.hpp"
#include "lycov/resolution.hpp"
#include "lycov/splitter.hpp"

using namespace lycov;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitNoRule = 3;
constexpr int kExitBadAlpha = 4;
constexpr int kExitBudget = 5;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Inputs {
    std::string edges_path;
    std::string g6;
    std::string family;
    std::string ideal_literal;
    std::uint32_t characteristic = 32003;
    std::string method = "auto";
    std::string format = "text";
    std::string policy = "fallback";
    std::string alpha;
    bool trace = false;
};

void add_common(CLI::App* cmd, Inputs& in, bool with_alpha) {
    cmd->add_option("--edges", in.edges_path, "edge-list file: 'n m' then 'u v' lines");
    cmd->add_option("--g6", in.g6, "graph6 string, or a file with one graph per line");
    cmd->add_option("--family", in.family,
                    "builtin family: path:n cycle:n wheel:n star:m complete:n "
                    "complement-cycle:n ljoin:m,n,share|bridgeK");
    cmd->add_option("--char", in.characteristic, "field characteristic (prime)");
    cmd->add_option("--method", in.method, "oracle|split|auto|closed");
    cmd->add_option("--format", in.format, "text|json");
    cmd->add_option("--policy", in.policy, "fallback|fail (splitter stuck behavior)");
    cmd->add_flag("--trace", in.trace, "print the rule trace");
    if (with_alpha) cmd->add_option("--alpha", in.alpha, "face mask bitstring, e.g. 11011");
}

Graph parse_family(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw ParseError("family spec needs 'name:params'");
    std::string name = spec.substr(0, colon);
    std::string params = spec.substr(colon + 1);
    auto int_of = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            int v = std::stoi(s, &used);
            if (used != s.size()) throw ParseError("bad number: " + s);
            return v;
        } catch (const std::exception&) {
            throw ParseError("bad number in family spec: " + s);
        }
    };
    if (name == "path") return path(int_of(params));
    if (name == "cycle") return cycle(int_of(params));
    if (name == "wheel") return wheel(int_of(params));
    if (name == "star") return star(int_of(params));
    if (name == "complete") return complete(int_of(params));
    if (name == "complement-cycle") return complement(cycle(int_of(params)));
    if (name == "ljoin") {
        std::vector<std::string> parts;
        std::istringstream in(params);
        std::string tok;
        while (std::getline(in, tok, ',')) parts.push_back(tok);
        if (parts.size() != 3) throw ParseError("ljoin needs m,n,share|bridgeK");
        int m = int_of(parts[0]), n = int_of(parts[1]);
        if (parts[2] == "share") return l_join(m, n, LJoinMode::ShareEdge);
        if (parts[2].rfind("bridge", 0) == 0)
            return l_join(m, n, LJoinMode::BridgePath, int_of(parts[2].substr(6)));
        throw ParseError("ljoin mode must be 'share' or 'bridgeK'");
    }
    throw ParseError("unknown family: " + name);
}

Graph load_graph(const Inputs& in) {
    int sources = !in.edges_path.empty() + !in.g6.empty() + !in.family.empty();
    if (sources != 1) throw ParseError("exactly one of --edges/--g6/--family is required");
    if (!in.family.empty()) return parse_family(in.family);
    if (!in.g6.empty()) {
        std::string text = in.g6;
        if (std::filesystem::exists(text)) {
            std::ifstream f(text);
            std::string line;
            if (!std::getline(f, line)) throw ParseError("empty graph6 file");
            text = line;
        }
        try {
            return parse_graph6(text);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    std::ifstream f(in.edges_path);
    if (!f) throw ParseError("cannot open " + in.edges_path);
    std::stringstream buf;
    buf << f.rdbuf();
    try {
        return parse_edge_list(buf.str());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

SplitPolicy policy_of(const Inputs& in, bool verify) {
    SplitPolicy pol;
    pol.field = FieldSpec(in.characteristic);
    pol.fallback = in.policy == "fail" ? FallbackPolicy::FailIfStuck
                                       : FallbackPolicy::OracleFallback;
    pol.verify_uncertified = verify;
    return pol;
}

LyubeznikTable closed_form_table(const Graph& g) {
    auto [h, labels] = g.compact();
    if (h.edge_count() == 0) throw ParseError("graph has no edge");
    if (is_acyclic(h)) return forest_table(h);
    auto verts = mask_elements(h.vertices());
    bool regular2 = std::all_of(verts.begin(), verts.end(),
                                [&](int v) { return h.degree(v) == 2; });
    if (regular2 && is_connected(h)) return cycle_table(h.vertex_count());
    for (int v : verts)
        if (h.degree(v) == h.vertex_count() - 1) return trivial_table(h.vertex_count(), h.vertex_count() - 2);
    Graph comp = complement(h);
    auto cverts = mask_elements(comp.vertices());
    bool comp_cycle = comp.vertex_count() >= 5 && is_connected(comp) &&
                      std::all_of(cverts.begin(), cverts.end(),
                                  [&](int v) { return comp.degree(v) == 2; });
    if (comp_cycle) return complement_cycle_table(h.vertex_count());
    throw NotApplicable("no closed form covers this graph");
}

int cmd_table(const Inputs& in) {
    FieldSpec F(in.characteristic);
    LyubeznikTable table(1, 0);
    bool certified = true;
    std::vector<RuleStep> trace;
    std::string method = in.method;
    if (!in.ideal_literal.empty()) {
        SqfreeIdeal j = parse_ideal_literal(in.ideal_literal);
        table = oracle_table(j, F);
        method = "oracle";
        if (in.format == "json") {
            nlohmann::json out = nlohmann::json::parse(render_table_json(table));
            out["char"] = F.p;
            out["method"] = method;
            out["certified"] = true;
            out["trivial"] = table.is_trivial();
            std::cout << out.dump() << '\n';
        } else {
            std::cout << "n=" << table.ambient() << " d=" << table.dim() << " char=" << F.p
                      << " method=" << method << " certified=yes"
                      << " trivial=" << (table.is_trivial() ? "yes" : "no") << '\n';
            std::cout << render_table_text(table);
        }
        return kExitOk;
    }
    Graph g = load_graph(in);
    if (method == "oracle") {
        table = oracle_table(g, F);
    } else if (method == "closed") {
        table = closed_form_table(g);
    } else if (method == "split" || method == "auto") {
        SplitPolicy pol = policy_of(in, method == "auto");
        SplitResult res = split_table(g, pol);
        table = res.table;
        certified = res.certified;
        trace = std::move(res.trace);
    } else {
        throw ParseError("unknown method: " + method);
    }
    if (in.format == "json") {
        nlohmann::json j = nlohmann::json::parse(render_table_json(table));
        j["char"] = F.p;
        j["method"] = method;
        j["certified"] = certified;
        j["trivial"] = table.is_trivial();
        if (in.trace) {
            j["trace"] = nlohmann::json::array();
            for (const auto& s : trace)
                j["trace"].push_back({{"rule", to_string(s.rule)},
                                      {"vertex", s.vertex},
                                      {"before", s.before},
                                      {"after", s.after},
                                      {"note", s.note}});
        }
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "n=" << table.ambient() << " d=" << table.dim() << " char=" << F.p
                  << " method=" << method << " certified=" << (certified ? "yes" : "no")
                  << " trivial=" << (table.is_trivial() ? "yes" : "no") << '\n';
        std::cout << render_table_text(table);
        if (in.trace) std::cout << render_trace(trace, certified);
    }
    return kExitOk;
}

BassMethod bass_method_of(const std::string& m) {
    if (m == "oracle") return BassMethod::Oracle;
    if (m == "split") return BassMethod::Split;
    if (m == "closed") return BassMethod::ClosedForm;
    if (m == "auto") return BassMethod::Auto;
    throw ParseError("unknown method: " + m);
}

int cmd_bass(const Inputs& in) {
    Graph g = load_graph(in);
    FieldSpec F(in.characteristic);
    BassMethod method = bass_method_of(in.method);
    if (!in.alpha.empty()) {
        if (static_cast<int>(in.alpha.size()) != g.ambient())
            throw ParseError("alpha length must equal the vertex count");
        Mask a = parse_mask(in.alpha);
        auto entries = bass_numbers(g, a, method, F);
        if (in.format == "json") {
            nlohmann::json j;
            j["char"] = F.p;
            j["alpha"] = in.alpha;
            j["entries"] = nlohmann::json::array();
            for (const auto& e : entries)
                j["entries"].push_back({{"r", e.r}, {"p", e.p}, {"mu", e.mu}});
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "char " << F.p << "\n";
            for (const auto& e : entries)
                std::cout << "mu_" << e.p << "(p_" << in.alpha << ", H^" << e.r
                          << ") = " << e.mu << '\n';
        }
        return kExitOk;
    }
    auto report = full_bass_report(g, method, F);
    std::cout << (in.format == "json" ? render_bass_json(g, report, F)
                                      : render_bass_text(g, report, F));
    if (in.format == "json") std::cout << '\n';
    return kExitOk;
}

int cmd_cd(const Inputs& in) {
    Graph g = load_graph(in);
    FieldSpec F(in.characteristic);
    CdMethod m = in.method == "closed" ? CdMethod::ClosedForm : CdMethod::Exact;
    int cd = cohomological_dimension(g, m, F);
    if (in.format == "json")
        std::cout << nlohmann::json{{"cd", cd},
                                    {"method", m == CdMethod::Exact ? "exact" : "closed"},
                                    {"char", F.p}}
                         .dump()
                  << '\n';
    else
        std::cout << "cd(J(G)) = " << cd << '\n';
    return kExitOk;
}

int cmd_pd(const Inputs& in) {
    Graph g = load_graph(in);
    FieldSpec F(in.characteristic);
    CdPdSummary s = projective_dimension_summary(g, F);
    if (in.format == "json") {
        std::cout << nlohmann::json{{"pd", s.pd},
                                    {"cd", s.cd},
                                    {"c_max", s.c_max},
                                    {"closed_form", s.closed_form},
                                    {"closed_form_applies", s.closed_form_applies},
                                    {"pd_matches_closed_form", s.pd_matches_closed_form},
                                    {"char", F.p}}
                         .dump()
                  << '\n';
        return kExitOk;
    }
    std::cout << "pd(R/I(G)) = " << s.pd << " (exact)\n";
    std::cout << "cd(J(G)) = " << s.cd << " (exact)\n";
    std::cout << "c_max + 1 = " << s.closed_form
              << (s.closed_form_applies ? "" : " [assumptions do not hold]") << '\n';
    if (!s.pd_matches_closed_form)
        std::cout << "warning: exact pd differs from the c_max + 1 closed form\n";
    return kExitOk;
}

int cmd_census(int n, const Inputs& in, int jobs) {
    FieldSpec F(in.characteristic);
    CensusRow row = census(n, F, jobs);
    if (in.format == "json") {
        std::cout << nlohmann::json{{"n", row.n},
                                    {"trivial", row.trivial},
                                    {"cycle", row.cycle},
                                    {"complement_cycle", row.complement_cycle},
                                    {"other", row.other},
                                    {"total", row.total},
                                    {"char", F.p}}
                         .dump()
                  << '\n';
        return kExitOk;
    }
    std::cout << "n=" << row.n << " trivial=" << row.trivial << " cycle=" << row.cycle
              << " complement-cycle=" << row.complement_cycle << " other=" << row.other
              << " total=" << row.total << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lyubeznik tables and Bass numbers of cover ideals of graphs"};
    app.require_subcommand(1);

    Inputs in;
    int census_n = 6;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());

    auto* t = app.add_subcommand("table", "Lyubeznik table of R/J(G)");
    add_common(t, in, false);
    t->add_option("--ideal", in.ideal_literal,
                  "squarefree ideal literal 'n; 110, 011' (prime view) or "
                  "'gens: n; ...'; computed with the oracle");
    auto* b = app.add_subcommand("bass", "Bass numbers / injective resolution summary");
    add_common(b, in, true);
    auto* c = app.add_subcommand("cd", "cohomological dimension of J(G)");
    add_common(c, in, false);
    auto* p = app.add_subcommand("pd", "projective dimension of R/I(G)");
    add_common(p, in, false);
    auto* s = app.add_subcommand("census", "Lyubeznik types of all connected graphs");
    s->add_option("--n", census_n, "vertex count (4..7)");
    s->add_option("--char", in.characteristic, "field characteristic (prime)");
    s->add_option("--format", in.format, "text|json");
    s->add_option("--jobs", jobs, "worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        if (t->parsed()) return cmd_table(in);
        if (b->parsed()) return cmd_bass(in);
        if (c->parsed()) return cmd_cd(in);
        if (p->parsed()) return cmd_pd(in);
        if (s->parsed()) return cmd_census(census_n, in, jobs);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const BadAlpha& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadAlpha;
    } catch (const NoRuleApplies& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNoRule;
    } catch (const NotApplicable& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNoRule;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    }
    return kExitOk;
}
