#pragma once

#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "lycov/field.hpp"
#include "lycov/ideal.hpp"
#include "lycov/lytable.hpp"
#include "lycov/mask.hpp"
#include "lycov/matrix.hpp"

namespace lycov {

// Multigraded free resolution with monomial matrices: each basis element
// carries a squarefree degree mask, each differential entry is a scalar
// whose monomial part is implied by the degree difference. In a minimal
// resolution no entry has zero degree difference.
struct GradedResolution {
    int nvars = 0;
    // levels[j] = degrees of the level-j basis (level 0 resolves the ideal's
    // generators)
    std::vector<std::vector<Mask>> levels;
    // diffs[j-1] describes level j -> level j-1 as (row, col, scalar),
    // row indexing level j-1, col indexing level j; scalars are signed so
    // the complex stays field-agnostic until reduction
    std::vector<std::vector<std::tuple<int, int, std::int32_t>>> diffs;

    int length() const;  // top level with a nonzero basis, -1 if empty
};

// Taylor complex of a minimal generating antichain (at most 20 generators:
// 2^m basis elements). Level j holds the subsets of size j+1 with degree
// the union of their masks.
GradedResolution taylor(int nvars, const std::vector<Mask>& gens);

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Gaussian cancellation of unit entries (nonzero scalar, zero degree
// difference) until none remain. Deterministic: levels ascending, pivots
// in (degree-as-integer, row, col) order.
void minimalize(GradedResolution& r, const FieldSpec& F);

// Same reduction with pivots chosen at random; Betti numbers must agree.
void minimalize_random_order(GradedResolution& r, const FieldSpec& F, std::mt19937& rng);

bool verify_resolution(const GradedResolution& r, const FieldSpec& F);

// Multigraded Betti numbers read off a minimal resolution.
std::map<std::pair<int, Mask>, int> betti(const GradedResolution& rmin);

// Independent route: beta_{j,alpha}(I) as dim H~_{j-1} of the simplicial
// complex {S subset of supp(alpha) : x^alpha / x^S in I}.
int upper_koszul_betti(int nvars, const std::vector<Mask>& gens, int j, Mask alpha,
                       const FieldSpec& F);

// Homology of the dualized r-linear strand: entry p is lambda_{p, n-r},
// computed from the complex whose position p holds the level-(n-r-p)
// strand basis (squarefree degree of size n-p) with transposed strand
// matrices as differentials.
std::vector<int> strand_homology(const GradedResolution& rmin, int r, const FieldSpec& F);

// Full Lyubeznik table of R/J through the minimal resolution of the
// Alexander dual, one strand per cohomological degree.
LyubeznikTable oracle_table(const SqfreeIdeal& j, const FieldSpec& F);
LyubeznikTable oracle_table(const Graph& g, const FieldSpec& F);

// pd(R/I) = 1 + length of the minimal resolution of I.
int projective_dimension(const SqfreeIdeal& ideal, const FieldSpec& F);

// Macaulay-style Betti table, rows j, columns total degree.
std::string betti_table_text(const GradedResolution& rmin);

}  // namespace lycov
