#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lycov/field.hpp"
#include "lycov/graph.hpp"
#include "lycov/lytable.hpp"
#include "lycov/splitter.hpp"

namespace lycov {

enum class BassMethod { Oracle, Split, ClosedForm, Auto };

struct BassEntry {
    int r;        // cohomological degree of the module H^r
    Mask alpha;   // face, in the input graph's labels
    int p;        // homological position in the injective resolution
    long long mu; // multiplicity, always >= 1
};

struct BadAlpha : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Bass numbers mu_p(p_alpha, H^r_{J(G)}(R)) for all r: the Lyubeznik table
// of the subgraph G_alpha on |alpha| variables read at column |alpha| - r.
// Rejects faces whose subgraph has no edge.
std::vector<BassEntry> bass_numbers(const Graph& g, Mask alpha,
                                    BassMethod method = BassMethod::Auto,
                                    const FieldSpec& F = FieldSpec{});

// Closed form mu_p(p_alpha, H^{k+1}) = delta_{p,|alpha|-2k} C(c_alpha, k),
// valid when every connected induced subgraph of G has a certified trivial
// table; nullopt when the assumptions fail.
std::optional<std::vector<BassEntry>> bass_closed_form(const Graph& g, Mask alpha,
                                                       const FieldSpec& F = FieldSpec{});

// True when every connected induced subgraph of g has a certified trivial
// Lyubeznik table (the hypothesis behind the closed forms).
bool trivial_components_assumption(const Graph& g, const FieldSpec& F = FieldSpec{});

// Goto-Watanabe shift: for a prime of height s over its largest face ideal
// p_alpha, mu_p(prime, H^r) = mu_{p-s}(p_alpha, H^r).
long long bass_at_general_prime(const Graph& g, Mask alpha, int s, int r, int p,
                                BassMethod method = BassMethod::Auto,
                                const FieldSpec& F = FieldSpec{});

struct InjectiveSummary {
    int r;
    std::vector<BassEntry> entries;  // sorted by (p, alpha)
    int strand_count;                // distinct |alpha| - p among entries
};

// All faces alpha with E_{G_alpha} nonempty, aggregated per position.
InjectiveSummary injective_resolution_summary(const Graph& g, int r,
                                              BassMethod method = BassMethod::Auto,
                                              const FieldSpec& F = FieldSpec{});

enum class CdMethod { Exact, ClosedForm };

// Exact: the largest r with a nonzero graded piece, read off the Betti
// degrees of the minimal resolution of I(G). ClosedForm: c_max + 1 under
// the trivial-components assumptions, with the cycle clauses; throws
// NotApplicable outside its hypotheses.
struct NotApplicable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int cohomological_dimension(const Graph& g, CdMethod method = CdMethod::Exact,
                            const FieldSpec& F = FieldSpec{});

struct CdPdSummary {
    int cd;                 // exact cohomological dimension of J(G)
    int pd;                 // exact pd(R/I(G)) from the minimal resolution
    int c_max;
    int closed_form;        // c_max + 1
    bool closed_form_applies;  // trivial-components assumptions hold
    bool pd_matches_closed_form;
};

CdPdSummary projective_dimension_summary(const Graph& g, const FieldSpec& F = FieldSpec{});

// Smallest column with a nonzero Lyubeznik number for a subgraph whose
// components are chains of L-joined cycles (given by their cycle lengths)
// plus trivial-table components.
int smallest_index_mixed(const std::vector<std::vector<int>>& cycle_chains,
                         int trivial_components, int alpha_size);

std::string render_bass_text(const Graph& g, const std::vector<InjectiveSummary>& summaries,
                             const FieldSpec& F);
std::string render_bass_json(const Graph& g, const std::vector<InjectiveSummary>& summaries,
                             const FieldSpec& F);

// Summaries for every r >= 2 with nonzero entries.
std::vector<InjectiveSummary> full_bass_report(const Graph& g,
                                               BassMethod method = BassMethod::Auto,
                                               const FieldSpec& F = FieldSpec{});

}  // namespace lycov
