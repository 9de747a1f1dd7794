#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lycov/lytable.hpp"
#include "lycov/resolution.hpp"

using namespace lycov;

namespace {

LyubeznikTable table_of(std::initializer_list<std::tuple<int, int, long long>> entries,
                        int n, int d) {
    LyubeznikTable t(n, d);
    for (auto [p, i, v] : entries) t.set(p, i, v);
    return t;
}

}  // namespace

TEST_CASE("basic table invariants") {
    LyubeznikTable t(5, 3);
    CHECK_THROWS_AS(t.set(2, 1, 1), std::out_of_range);
    CHECK_THROWS_AS(t.set(0, 4, 1), std::out_of_range);
    CHECK_THROWS_AS(t.set(0, 1, -2), std::invalid_argument);
    t.set(3, 3, 1);
    CHECK(t.is_trivial());
    t.set(0, 2, 1);
    CHECK_FALSE(t.is_trivial());
}

TEST_CASE("triviality of the basic families") {
    FieldSpec F;
    CHECK(oracle_table(path(2), F).is_trivial());
    CHECK_FALSE(oracle_table(cycle(5), F).is_trivial());
    // a tree
    Graph tree = Graph::from_edges(6, {{1, 2}, {2, 3}, {2, 4}, {4, 5}, {4, 6}});
    CHECK(oracle_table(tree, F).is_trivial());
}

TEST_CASE("embed shifts entries and preserves the pattern") {
    LyubeznikTable t0 = trivial_table(2, 0);
    CHECK(t0.embed(1).is_trivial());
    CHECK(t0.embed(1).dim() == 1);

    FieldSpec F;
    LyubeznikTable c5 = cycle_table(5);
    LyubeznikTable c5e = c5.embed(1);
    CHECK(c5e.at(1, 3) == 1);
    CHECK(c5.at(0, 2) == 1);
    CHECK(c5e.pattern() == c5.pattern());
    // oracle for J(C_5) extended by an unused sixth variable
    SqfreeIdeal j = cover_ideal(cycle(5));
    std::vector<Mask> primes = j.primes();
    SqfreeIdeal j6 = SqfreeIdeal::from_primes(6, primes);
    CHECK(oracle_table(j6, F) == c5e);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        int d = 1 + static_cast<int>(rng() % 5);
        LyubeznikTable t(d + 2, d);
        t.set(d, d, 1);
        for (int k = 0; k < 3; ++k) {
            int i = static_cast<int>(rng() % static_cast<unsigned>(d + 1));
            int p = static_cast<int>(rng() % static_cast<unsigned>(i + 1));
            if (p == i && i < d) continue;
            t.add(p, i, 1 + rng() % 3);
        }
        int e = static_cast<int>(rng() % 4);
        CHECK(t.embed(e).pattern() == t.pattern());
    }
}

TEST_CASE("cycle tables") {
    CHECK(cycle_table(4).is_trivial());
    CHECK(cycle_table(3).is_trivial());
    CHECK(cycle_table(6) == table_of({{4, 4, 1}, {3, 4, 1}, {1, 3, 1}}, 6, 4));
    CHECK(cycle_table(9) ==
          table_of({{7, 7, 1}, {6, 7, 1}, {4, 6, 1}, {3, 6, 1}, {1, 5, 1}}, 9, 7));
}

TEST_CASE("complement cycle tables") {
    CHECK(complement_cycle_table(6) == table_of({{0, 3, 1}, {2, 4, 1}, {4, 4, 1}}, 6, 4));
    CHECK(complement_cycle_table(7) == table_of({{0, 4, 1}, {2, 5, 1}, {5, 5, 1}}, 7, 5));
    FieldSpec F;
    CHECK(oracle_table(complement(cycle(6)), F) == complement_cycle_table(6));
    CHECK_THROWS_AS(complement_cycle_table(4), std::invalid_argument);
}

TEST_CASE("disjoint trivial tables") {
    CHECK(disjoint_trivial_table(1, 3).is_trivial());
    CHECK(disjoint_trivial_table(2, 2) == table_of({{2, 2, 2}, {0, 1, 1}}, 4, 2));
    CHECK(disjoint_trivial_table(3, 4) ==
          table_of({{4, 4, 3}, {2, 3, 3}, {0, 2, 1}}, 6, 4));
    CHECK_THROWS_AS(disjoint_trivial_table(3, 2), std::invalid_argument);
}

TEST_CASE("two cycles tables") {
    CHECK(two_cycles_table(3, 3, 4).is_trivial());
    CHECK(two_cycles_table(6, 6, 10) ==
          table_of({{8, 8, 1}, {7, 8, 2}, {5, 7, 2}, {4, 7, 1}, {2, 6, 1}}, 10, 8));
}

TEST_CASE("thom sebastiani") {
    // height-one partner kills everything
    LyubeznikTable h1(3, 2);  // height 1
    h1.set(2, 2, 1);
    CHECK(thom_sebastiani(h1, trivial_table(2, 0)).is_trivial());

    // two single edges give the forest pattern
    LyubeznikTable e = trivial_table(2, 0);
    CHECK(thom_sebastiani(e, e) == disjoint_trivial_table(2, 2));

    // C_5 plus an edge: top corner 2, smallest column 3
    LyubeznikTable mixed = thom_sebastiani(cycle_table(5), e);
    CHECK(mixed.at(5, 5) == 2);
    CHECK(mixed.smallest_nonzero_index() == 3);

    // commutative, and associative on trivial components
    LyubeznikTable t22 = trivial_table(4, 2);
    CHECK(thom_sebastiani(cycle_table(5), t22) == thom_sebastiani(t22, cycle_table(5)));
    LyubeznikTable abc1 = thom_sebastiani(thom_sebastiani(e, e), e);
    LyubeznikTable abc2 = thom_sebastiani(e, thom_sebastiani(e, e));
    CHECK(abc1 == abc2);
    CHECK(abc1 == disjoint_trivial_table(3, 4));
}

TEST_CASE("thom sebastiani against the oracle on a disjoint union") {
    FieldSpec F;
    // C_3 plus a far-away edge inside one ring
    Graph g(5);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(1, 3);
    g.add_edge(4, 5);
    LyubeznikTable whole = oracle_table(cover_ideal(g), F);
    LyubeznikTable combined =
        thom_sebastiani(oracle_table(cycle(3), F), oracle_table(path(2), F));
    CHECK(whole == combined);
}

TEST_CASE("smallest nonzero index") {
    CHECK(trivial_table(6, 4).smallest_nonzero_index() == 4);
    CHECK(cycle_table(5).smallest_nonzero_index() == 2);
    CHECK(disjoint_top({2, 0}) == 3);
    CHECK(disjoint_top({4}) == 4);
}

TEST_CASE("binomials") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("text and json renderings carry the same numbers") {
    LyubeznikTable t = cycle_table(6);
    std::string txt = render_table_text(t);
    std::string js = render_table_json(t);
    CHECK(txt.find('1') != std::string::npos);
    CHECK(js.find("\"p\":3") != std::string::npos);
    CHECK(js.find("\"d\":4") != std::string::npos);
}
