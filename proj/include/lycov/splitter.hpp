#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lycov/field.hpp"
#include "lycov/graph.hpp"
#include "lycov/ideal.hpp"
#include "lycov/lytable.hpp"

namespace lycov {

enum class Rule {
    Whisker,
    HandleTriangle,
    HandleSquare,
    DegreeTwoCor,
    DegreeTwoProp,
    Dominating,
    CycleFormula,
    TwoCyclesFormula,
    Disconnect,
    OracleFallback,
};

const char* to_string(Rule r);

struct RuleStep {
    Rule rule;
    int vertex = 0;      // 0 when the rule is not vertex-local
    int before = 0;      // active vertex count before the step
    int after = 0;       // and after
    std::string note;    // extra parameters, e.g. "n=6" for a cycle
};

struct SplitResult {
    LyubeznikTable table;     // intrinsic to the input's active vertex count
    std::vector<RuleStep> trace;
    bool certified = true;    // false iff an unverified DegreeTwoProp step was used
};

enum class FallbackPolicy { OracleFallback, FailIfStuck };

struct SplitPolicy {
    FallbackPolicy fallback = FallbackPolicy::OracleFallback;
    bool allow_deg_two_prop = true;
    // verify DegreeTwoProp steps against the oracle when the graph fits the
    // Taylor budget, upgrading certification
    bool verify_uncertified = true;
    FieldSpec field{32003};
};

struct NoRuleApplies : std::runtime_error {
    std::string graph6;
    explicit NoRuleApplies(const std::string& g6)
        : std::runtime_error("no splitting rule applies to " + g6), graph6(g6) {}
};

// Lyubeznik table by the splitting recursions. Disconnected inputs are
// combined component-wise; isolated vertices shift the table. Needs at
// least one edge.
SplitResult split_table(const Graph& g, const SplitPolicy& policy = {});

// Closed form for forests: disjoint_trivial_table(c, n-2) over all active
// vertices. Rejects cyclic input.
LyubeznikTable forest_table(const Graph& g);

// The splitting J(G) = L ∩ K at a vertex: L covers the edges away from v,
// K the edges at v; both read in the ambient of g's active vertices.
std::pair<SqfreeIdeal, SqfreeIdeal> mv_split_at_vertex(const Graph& g, int v);

// The auxiliary graph H of the degree-two rules: drop v and its two
// neighbors, then join their punctured neighborhoods completely.
Graph deg_two_auxiliary_graph(const Graph& g, int v);

// Table combination of the splitting theorem; requires T_K trivial.
// Empty result means the undetermined case (both T_L and T_LK nontrivial).
std::optional<LyubeznikTable> combine_mv(const LyubeznikTable& t_l,
                                         const LyubeznikTable& t_k,
                                         const LyubeznikTable& t_lk);

std::string render_trace(const std::vector<RuleStep>& steps, bool certified);

}  // namespace lycov
