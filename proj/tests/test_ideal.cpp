#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "lycov/ideal.hpp"

using namespace lycov;

namespace {

std::vector<Mask> masks(std::initializer_list<const char*> lits) {
    std::vector<Mask> out;
    for (const char* s : lits) out.push_back(parse_mask(s));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Mask> sorted(std::vector<Mask> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("cover and edge ideals of small graphs") {
    CHECK(sorted(cover_ideal(path(2)).primes()) == masks({"11"}));
    CHECK(sorted(cover_ideal(path(3)).primes()) == masks({"110", "011"}));
    CHECK(sorted(edge_ideal(path(3)).gens()) == masks({"110", "011"}));
    CHECK(sorted(cover_ideal(cycle(3)).primes()) == masks({"110", "011", "101"}));
    CHECK_THROWS_AS(cover_ideal(Graph(3)), std::invalid_argument);
}

TEST_CASE("alexander duality swaps the views") {
    for (const Graph& g : {path(4), cycle(5), star(3)}) {
        SqfreeIdeal j = cover_ideal(g);
        SqfreeIdeal i = edge_ideal(g);
        CHECK(alexander_dual(j) == i);
        CHECK(alexander_dual(alexander_dual(j)) == j);
    }
    // principal ideal (x1) is self-dual
    SqfreeIdeal p = SqfreeIdeal::from_gens(1, {parse_mask("1")});
    CHECK(alexander_dual(p) == p);
    // dual of one full-support generator is the intersection of the n
    // variable primes
    SqfreeIdeal m = SqfreeIdeal::from_gens(3, {parse_mask("111")});
    CHECK(sorted(m.primes()) == masks({"100", "010", "001"}));
    CHECK(sorted(alexander_dual(m).gens()) == masks({"100", "010", "001"}));
}

TEST_CASE("derived views: minimal vertex covers") {
    // covers of P_3 are {2} and {1,3}
    CHECK(sorted(cover_ideal(path(3)).gens()) == masks({"010", "101"}));
    // unit and zero corner cases
    SqfreeIdeal unit = SqfreeIdeal::from_primes(2, {});
    CHECK(unit.is_unit());
    CHECK(unit.gens() == std::vector<Mask>{0});
    SqfreeIdeal zero = SqfreeIdeal::from_gens(2, {});
    CHECK(zero.is_zero());
    CHECK(zero.primes() == std::vector<Mask>{0});
}

TEST_CASE("restriction") {
    SqfreeIdeal j5 = cover_ideal(path(5));
    SqfreeIdeal r = restrict_ideal(j5, parse_mask("11011"));
    CHECK(r.ambient() == 4);
    CHECK(sorted(r.primes()) == masks({"1100", "0011"}));
    CHECK(restrict_ideal(j5, full_mask(5)) == j5);
    SqfreeIdeal r3 = restrict_ideal(cover_ideal(cycle(3)), parse_mask("110"));
    CHECK(sorted(r3.primes()) == masks({"11"}));
    // no surviving component: unit marker
    CHECK(restrict_ideal(j5, parse_mask("10100")).is_unit());
}

TEST_CASE("sums and intersections in the prime view") {
    SqfreeIdeal a = SqfreeIdeal::from_primes(3, {parse_mask("110")});
    SqfreeIdeal b = SqfreeIdeal::from_primes(3, {parse_mask("011")});
    CHECK(ideal_sum(a, b).primes() == masks({"111"}));
    CHECK(ideal_intersection(a, b) == cover_ideal(path(3)));
}

TEST_CASE("splitting of C_4 at x_4 matches brute-force monomial membership") {
    // L = J(P_3 on x1x2x3), K = (x1,x4) ∩ (x3,x4)
    SqfreeIdeal l = SqfreeIdeal::from_primes(4, masks({"1100", "0110"}));
    SqfreeIdeal k = SqfreeIdeal::from_primes(4, masks({"1001", "0011"}));
    SqfreeIdeal lk = ideal_sum(l, k);
    // a monomial lies in L+K iff some generator of L or of K divides it
    auto brute_contains = [&](Mask m) {
        for (Mask gl : l.gens())
            if (mask_contains(m, gl)) return true;
        for (Mask gk : k.gens())
            if (mask_contains(m, gk)) return true;
        return false;
    };
    for (Mask m = 0; m < 16; ++m) CHECK(lk.contains_monomial(m) == brute_contains(m));
}

TEST_CASE("sum posets") {
    CHECK(sum_poset(cover_ideal(path(2))) == masks({"11"}));
    CHECK(sorted(sum_poset(cover_ideal(path(3)))) == masks({"110", "011", "111"}));
    CHECK(sorted(sum_poset(cover_ideal(cycle(3)))) == masks({"110", "011", "101", "111"}));
    SqfreeIdeal j = cover_ideal(cycle(5));
    auto poset = sum_poset(j);
    CHECK(poset.size() <= (1u << j.primes().size()) - 1);
    for (Mask p : j.primes())
        CHECK(std::find(poset.begin(), poset.end(), p) != poset.end());
}

TEST_CASE("m coefficients of P_3 and C_3") {
    FieldSpec F;
    SqfreeIdeal jp3 = cover_ideal(path(3));
    CHECK(m_coeff(jp3, 2, parse_mask("110"), F) == 1);  // empty interval
    CHECK(m_coeff(jp3, 2, parse_mask("111"), F) == 1);  // two-point antichain
    CHECK(m_coeff(jp3, 1, parse_mask("110"), F) == 0);
    CHECK(m_coeff(jp3, 3, parse_mask("111"), F) == 0);
    CHECK(m_coeff(jp3, 2, parse_mask("101"), F) == 0);  // not a poset element
    CHECK_THROWS_AS(m_coeff(jp3, -1, parse_mask("110"), F), std::invalid_argument);

    SqfreeIdeal jc3 = cover_ideal(cycle(3));
    CHECK(m_coeff(jc3, 2, parse_mask("111"), F) == 2);
    CHECK(graded_piece_dim(jc3, 2, parse_mask("111"), F) == 2);
}

TEST_CASE("MV-splitting witnesses") {
    FieldSpec F;
    // P_3 split at x_3
    SqfreeIdeal l1 = SqfreeIdeal::from_primes(3, {parse_mask("110")});
    SqfreeIdeal k1 = SqfreeIdeal::from_primes(3, {parse_mask("011")});
    CHECK(check_mv_splitting(l1, k1, F) == MvWitness::ByPosets);
    // C_4 split at x_4
    SqfreeIdeal l2 = SqfreeIdeal::from_primes(4, masks({"1100", "0110"}));
    SqfreeIdeal k2 = SqfreeIdeal::from_primes(4, masks({"1001", "0011"}));
    CHECK(check_mv_splitting(l2, k2, F) == MvWitness::ByPosets);
    // L = K shares every prime
    CHECK(check_mv_splitting(l2, l2, F) == MvWitness::Unknown);
}

TEST_CASE("dual is an involution and restriction commutes with minimality") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4);
        std::vector<Mask> primes;
        for (int i = 0; i < 4; ++i) {
            Mask m = rng() & full_mask(n);
            if (m) primes.push_back(m);
        }
        if (primes.empty()) continue;
        SqfreeIdeal j = SqfreeIdeal::from_primes(n, primes);
        CHECK(alexander_dual(alexander_dual(j)) == j);
        Mask a = rng() & full_mask(n);
        if (!a) continue;
        SqfreeIdeal r = restrict_ideal(j, a);
        // primes of the restriction are already a minimal antichain
        CHECK(minimalize_antichain(r.primes()) == r.primes());
    }
}

TEST_CASE("ideal literals") {
    SqfreeIdeal j = parse_ideal_literal("3; 110, 011");
    CHECK(j == cover_ideal(path(3)));
    SqfreeIdeal i = parse_ideal_literal("gens: 3; 110, 011");
    CHECK(i == edge_ideal(path(3)));
    CHECK(parse_ideal_literal(emit_ideal_literal(j)) == j);
    CHECK_THROWS_AS(parse_ideal_literal("3; 11"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ideal_literal("nonsense"), std::invalid_argument);
}
