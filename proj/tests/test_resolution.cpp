#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lycov/resolution.hpp"

using namespace lycov;

namespace {

std::map<std::pair<int, Mask>, int> betti_of(const std::vector<Mask>& gens, int n,
                                             const FieldSpec& F) {
    GradedResolution r = taylor(n, gens);
    minimalize(r, F);
    return betti(r);
}

}  // namespace

TEST_CASE("taylor complex shapes") {
    FieldSpec F;
    GradedResolution one = taylor(2, {parse_mask("11")});
    CHECK(one.levels.size() == 1);
    CHECK(one.levels[0] == std::vector<Mask>{parse_mask("11")});
    CHECK(one.diffs.empty());

    GradedResolution p3 = taylor(3, edge_ideal(path(3)).gens());
    CHECK(p3.levels[1] == std::vector<Mask>{parse_mask("111")});
    CHECK(p3.diffs[0].size() == 2);
    CHECK(verify_resolution(p3, F));

    // every pair of C_3 edges has full lcm, so the level-2 -> level-1
    // entries are all units
    GradedResolution c3 = taylor(3, edge_ideal(cycle(3)).gens());
    CHECK(c3.levels[2] == std::vector<Mask>{parse_mask("111")});
    for (auto [row, col, val] : c3.diffs[1])
        CHECK(c3.levels[1][static_cast<std::size_t>(row)] == parse_mask("111"));
    CHECK(verify_resolution(c3, F));

    CHECK_THROWS_AS(taylor(3, {}), std::invalid_argument);
    CHECK_THROWS_AS(taylor(21, std::vector<Mask>(21, 1)), BudgetExceeded);
}

TEST_CASE("minimalization of small edge ideals") {
    FieldSpec F;
    // I(P_3) is already minimal
    GradedResolution p3 = taylor(3, edge_ideal(path(3)).gens());
    GradedResolution p3m = p3;
    minimalize(p3m, F);
    CHECK(p3m.levels == p3.levels);
    auto b3 = betti(p3m);
    CHECK(b3[{1, parse_mask("111")}] == 1);

    // I(C_3): the top cancels
    auto bc3 = betti_of(edge_ideal(cycle(3)).gens(), 3, F);
    int level0 = 0, level2 = 0;
    for (auto& [k, v] : bc3) {
        if (k.first == 0) level0 += v;
        if (k.first == 2) level2 += v;
    }
    CHECK(level0 == 3);
    CHECK(bc3[{1, parse_mask("111")}] == 2);
    CHECK(level2 == 0);

    // the star's Taylor complex is minimal: beta = (3, 3, 1)
    auto bstar = betti_of(edge_ideal(star(3)).gens(), 4, F);
    int by_level[3] = {0, 0, 0};
    for (auto& [k, v] : bstar)
        if (k.first <= 2) by_level[k.first] += v;
    CHECK(by_level[0] == 3);
    CHECK(by_level[1] == 3);
    CHECK(bstar[{2, parse_mask("1111")}] == 1);
}

TEST_CASE("minimal resolutions stay resolutions and lose all unit entries") {
    FieldSpec F;
    for (const Graph& g : {cycle(5), cycle(6), star(4), l_join(3, 4, LJoinMode::ShareEdge)}) {
        GradedResolution r = taylor(g.ambient(), edge_ideal(g).gens());
        minimalize(r, F);
        CHECK(verify_resolution(r, F));
        for (std::size_t j = 1; j < r.levels.size(); ++j)
            for (auto [row, col, val] : r.diffs[j - 1]) {
                CHECK(F.reduce(val) != 0);
                CHECK(r.levels[j - 1][static_cast<std::size_t>(row)] !=
                      r.levels[j][static_cast<std::size_t>(col)]);
            }
    }
}

TEST_CASE("betti numbers agree with the upper Koszul oracle") {
    FieldSpec F;
    for (const Graph& g : {path(4), cycle(5), star(3), complete(4), cycle(6)}) {
        auto gens = edge_ideal(g).gens();
        auto b = betti_of(gens, g.ambient(), F);
        for (Mask a = 0; a <= full_mask(g.ambient()); ++a)
            for (int j = 0; j <= g.ambient(); ++j) {
                int from_res = 0;
                auto it = b.find({j, a});
                if (it != b.end()) from_res = it->second;
                CHECK(from_res == upper_koszul_betti(g.ambient(), gens, j, a, F));
            }
    }
}

TEST_CASE("upper Koszul examples") {
    FieldSpec F;
    CHECK(upper_koszul_betti(2, {parse_mask("11")}, 0, parse_mask("11"), F) == 1);
    CHECK(upper_koszul_betti(3, edge_ideal(cycle(3)).gens(), 1, parse_mask("111"), F) == 2);
    CHECK(upper_koszul_betti(4, edge_ideal(star(3)).gens(), 2, parse_mask("1111"), F) == 1);
}

TEST_CASE("betti numbers do not depend on the cancellation order") {
    FieldSpec F;
    std::mt19937 rng(314159);
    for (const Graph& g : {cycle(5), l_join(3, 3, LJoinMode::ShareEdge), star(4)}) {
        auto gens = edge_ideal(g).gens();
        auto reference = betti_of(gens, g.ambient(), F);
        for (int trial = 0; trial < 10; ++trial) {
            GradedResolution r = taylor(g.ambient(), gens);
            minimalize_random_order(r, F, rng);
            CHECK(betti(r) == reference);
        }
    }
}

TEST_CASE("strand homology of a single complete intersection generator") {
    FieldSpec F;
    SqfreeIdeal j = SqfreeIdeal::from_primes(2, {parse_mask("11")});
    LyubeznikTable t = oracle_table(j, F);
    CHECK(t.dim() == 0);
    CHECK(t.is_trivial());
}

TEST_CASE("strands of J(C_5) against the printed table") {
    FieldSpec F;
    GradedResolution r = taylor(5, edge_ideal(cycle(5)).gens());
    minimalize(r, F);
    auto lam2 = strand_homology(r, 2, F);
    CHECK(lam2 == std::vector<int>{0, 0, 1, 1});
    auto lam3 = strand_homology(r, 3, F);
    CHECK(lam3[0] == 1);
    CHECK_THROWS_AS(strand_homology(r, 6, F), std::invalid_argument);
}

TEST_CASE("oracle table of J(C_6^c)") {
    FieldSpec F;
    LyubeznikTable t = oracle_table(complement(cycle(6)), F);
    CHECK(t.dim() == 4);
    CHECK(t.at(0, 3) == 1);
    CHECK(t.at(2, 4) == 1);
    CHECK(t.at(4, 4) == 1);
    CHECK(t.entries().size() == 3);
}

TEST_CASE("strand Euler characteristics match alternating Betti sums") {
    FieldSpec F;
    for (const Graph& g : {cycle(5), cycle(7), l_join(3, 4, LJoinMode::ShareEdge)}) {
        int n = g.ambient();
        GradedResolution r = taylor(n, edge_ideal(g).gens());
        minimalize(r, F);
        auto b = betti(r);
        for (int strand = 2; strand <= n; ++strand) {
            auto lam = strand_homology(r, strand, F);
            long long euler_h = 0, euler_b = 0;
            for (int p = 0; p < static_cast<int>(lam.size()); ++p)
                euler_h += (p % 2 ? -1 : 1) * lam[static_cast<std::size_t>(p)];
            for (auto& [k, v] : b)
                if (popcount(k.second) == k.first + strand)
                    euler_b += ((n - strand - k.first) % 2 ? -1 : 1) * v;
            CHECK(euler_h == euler_b);
        }
    }
}

TEST_CASE("oracle tables satisfy the shape constraints") {
    FieldSpec F;
    for (const Graph& g : {path(5), cycle(6), wheel(6), star(4)}) {
        LyubeznikTable t = oracle_table(g, F);
        int d = t.dim();
        CHECK(d == g.ambient() - 2);
        CHECK(t.at(d, d) == 1);  // connected
        for (const auto& [pi, v] : t.entries()) {
            CHECK(pi.first <= pi.second);
            CHECK(v > 0);
            if (pi.second < d) CHECK(pi.first != pi.second);  // diagonal purity
        }
    }
}

TEST_CASE("projective dimension") {
    FieldSpec F;
    CHECK(projective_dimension(SqfreeIdeal::from_gens(2, {parse_mask("11")}), F) == 1);
    CHECK(projective_dimension(edge_ideal(path(5)), F) == 3);
    CHECK(projective_dimension(edge_ideal(star(3)), F) == 3);
}

TEST_CASE("betti table rendering shows the levels") {
    FieldSpec F;
    GradedResolution r = taylor(3, edge_ideal(path(3)).gens());
    minimalize(r, F);
    std::string txt = betti_table_text(r);
    CHECK(txt.find("level") != std::string::npos);
    CHECK(txt.find('2') != std::string::npos);
}
