#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lycov/field.hpp"
#include "lycov/graph.hpp"
#include "lycov/mask.hpp"

namespace lycov {

// Squarefree monomial ideal held in dual views: minimal monomial
// generators and minimal face-ideal primes, each an antichain of masks.
// Either view may be absent and is derived on demand (the views are
// Alexander dual data of each other, exchanged by minimal transversals).
// An ideal with an empty prime list is the unit ideal (the intersection
// over the empty family); an ideal with an empty generator list is zero.
class SqfreeIdeal {
public:
    static SqfreeIdeal from_gens(int n, std::vector<Mask> gens);
    static SqfreeIdeal from_primes(int n, std::vector<Mask> primes);

    int ambient() const { return n_; }
    const std::vector<Mask>& gens() const;
    const std::vector<Mask>& primes() const;

    bool has_gens_view() const { return gens_.has_value(); }
    bool has_primes_view() const { return primes_.has_value(); }

    bool is_unit() const;
    bool is_zero() const;
    int height() const;  // min prime size; requires a nonzero proper ideal

    bool contains_monomial(Mask m) const;

    bool operator==(const SqfreeIdeal& o) const;

private:
    SqfreeIdeal() = default;
    int n_ = 0;
    mutable std::optional<std::vector<Mask>> gens_;
    mutable std::optional<std::vector<Mask>> primes_;
};

// Antichain utilities.
std::vector<Mask> minimalize_antichain(std::vector<Mask> masks);
std::vector<Mask> minimal_transversals(int n, const std::vector<Mask>& masks);

// Cover ideal J(G) (primes = edges) and edge ideal I(G) (gens = edges).
// Both reject edgeless graphs and require a fully active graph.
SqfreeIdeal cover_ideal(const Graph& g);
SqfreeIdeal edge_ideal(const Graph& g);

// Swaps the two views; an involution.
SqfreeIdeal alexander_dual(const SqfreeIdeal& j);

// Restriction to the face ideal p_alpha: keeps primes with mask inside
// alpha and compresses the ambient to |alpha| variables. The result may
// be the unit ideal if no component survives.
SqfreeIdeal restrict_ideal(const SqfreeIdeal& j, Mask alpha);

// Sum and intersection in the prime view (pairwise unions, minimalized;
// union of prime sets, minimalized).
SqfreeIdeal ideal_sum(const SqfreeIdeal& a, const SqfreeIdeal& b);
SqfreeIdeal ideal_intersection(const SqfreeIdeal& a, const SqfreeIdeal& b);

// All distinct unions of nonempty subsets of the prime masks, sorted by
// (popcount, value). The poset order is reverse inclusion of ideals:
// z > alpha iff mask(z) is strictly contained in mask(alpha).
std::vector<Mask> sum_poset(const SqfreeIdeal& j);

// m_{r,alpha}: reduced homology dimension in degree |alpha|-r-1 of the
// order complex of the open interval above alpha in the sum poset, i.e.
// of the elements with mask strictly inside alpha. Zero when alpha is
// not a poset element. The empty interval contributes K in degree -1.
int m_coeff(const SqfreeIdeal& j, int r, Mask alpha, const FieldSpec& F);

// Dimension of the graded piece [H^r_J(R)]_{-alpha}; same numbers.
int graded_piece_dim(const SqfreeIdeal& j, int r, Mask alpha, const FieldSpec& F);

enum class MvWitness { ByPosets, ByGradedPieces, Unknown };

// Checks the two sufficient conditions for J = L ∩ K to be an
// MV-splitting: disjoint sum posets, or the graded-piece implication
// m_{r,a}(L+K) != 0  =>  m_{r,a}(L) = m_{r,a}(K) = 0. Unknown is not a
// refutation.
MvWitness check_mv_splitting(const SqfreeIdeal& l, const SqfreeIdeal& k,
                             const FieldSpec& F);

const char* to_string(MvWitness w);

// Ideal literal, e.g. "4; 1100, 0110" (prime view) or
// "gens: 4; 1100, 0110".
SqfreeIdeal parse_ideal_literal(const std::string& text);
std::string emit_ideal_literal(const SqfreeIdeal& j);

}  // namespace lycov
