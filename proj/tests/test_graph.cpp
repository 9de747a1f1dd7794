#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "lycov/graph.hpp"

using namespace lycov;

TEST_CASE("constructors") {
    CHECK(path(2).edges() == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(cycle(5).edge_count() == 5);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    CHECK(complete(4).edge_count() == 6);
    CHECK(star(3).edge_count() == 3);
    CHECK(star(3).degree(1) == 3);

    Graph w = wheel(7);
    CHECK(w.degree(7) == 6);
    for (int v = 1; v <= 6; ++v) CHECK(w.degree(v) == 3);
    CHECK(w.edge_count() == 12);
}

TEST_CASE("complement of C_5 is C_5 again") {
    CHECK(canonical_code(complement(cycle(5))) == canonical_code(cycle(5)));
    CHECK(canonical_code(complement(cycle(6))) != canonical_code(cycle(6)));
}

TEST_CASE("l_join shapes") {
    Graph share = l_join(3, 6, LJoinMode::ShareEdge);
    CHECK(share.ambient() == 7);
    CHECK(share.edge_count() == 8);
    Graph bridged = l_join(3, 3, LJoinMode::BridgePath, 2);
    CHECK(bridged.ambient() == 7);
    CHECK(bridged.edge_count() == 8);
    CHECK_THROWS_AS(l_join(3, 3, LJoinMode::BridgePath, 0), std::invalid_argument);
}

TEST_CASE("induced subgraphs keep labels") {
    Graph g = path(5).induced(parse_mask("11011"));
    CHECK(g.vertex_count() == 4);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {4, 5}});
    CHECK(path(5).induced(full_mask(5)) == path(5));

    Graph c6 = cycle(6).induced(parse_mask("110110"));
    CHECK(c6.edges() == std::vector<std::pair<int, int>>{{1, 2}, {4, 5}});
}

TEST_CASE("induced is functorial") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);
        Graph g(n);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        Mask a = rng() & full_mask(n), b = rng() & full_mask(n);
        CHECK(g.induced(a).induced(b) == g.induced(a & b));
    }
}

TEST_CASE("edge components") {
    auto two = edge_components(path(5).induced(parse_mask("11011")));
    CHECK(two.edge_component_count() == 2);
    CHECK(two.isolated.empty());

    CHECK(edge_components(cycle(6)).edge_component_count() == 1);

    Graph g = Graph::from_edges(3, {{1, 2}});
    auto split = edge_components(g);
    CHECK(split.edge_component_count() == 1);
    CHECK(split.isolated == std::vector<int>{3});
}

TEST_CASE("component masks partition the vertex set") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        Graph g(n);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng() % 3 == 0) g.add_edge(u, v);
        auto split = edge_components(g);
        Mask all = 0;
        int count = 0;
        for (Mask c : split.components) {
            CHECK((all & c) == 0);
            all |= c;
            ++count;
        }
        for (int v : split.isolated) {
            CHECK(!has_bit(all, v));
            all |= bit(v);
        }
        CHECK(all == g.vertices());
        CHECK(count <= n / 2);
    }
}

TEST_CASE("c_max of the basic families") {
    CHECK(c_max(path(5)) == 2);
    CHECK(c_max(cycle(6)) == 2);
    CHECK(c_max(complete(4)) == 1);
    for (int n = 3; n <= 9; ++n) {
        CHECK(c_max(path(n)) == (n + 1) / 3);  // edge components only
        CHECK(c_max(cycle(n)) == n / 3);
    }
    CHECK_THROWS_AS(c_max(Graph(3)), std::invalid_argument);
}

TEST_CASE("vertex classification") {
    CHECK(classify_vertex(path(3), 1) == VertexClass::Whisker);
    CHECK(classify_vertex(cycle(3), 2) == VertexClass::Dominating);
    CHECK(classify_vertex(cycle(4), 1) == VertexClass::HandleSquare);
    for (int n = 5; n <= 9; ++n)
        CHECK(classify_vertex(cycle(n), 1) == VertexClass::DegreeTwoFree);
    // triangle with a tail: the apex is a HandleTriangle
    Graph g = Graph::from_edges(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}});
    CHECK(classify_vertex(g, 1) == VertexClass::HandleTriangle);
    CHECK(classify_vertex(g, 4) == VertexClass::Whisker);
    CHECK(classify_vertex(wheel(6), 6) == VertexClass::Dominating);
    CHECK(classify_vertex(wheel(6), 1) == VertexClass::Other);
    CHECK_THROWS_AS(classify_vertex(Graph(2), 1), std::invalid_argument);
}

TEST_CASE("cover-ideal Cohen-Macaulayness via chordal complements") {
    CHECK(is_cm_cover_ideal(cycle(4)));
    CHECK_FALSE(is_cm_cover_ideal(cycle(5)));
    CHECK(is_cm_cover_ideal(complete(5)));
    CHECK(is_cm_cover_ideal(star(3)));
    CHECK_FALSE(is_cm_cover_ideal(cycle(6)));
}

TEST_CASE("graph6 basics") {
    Graph e = parse_graph6("A_");
    CHECK(e.ambient() == 2);
    CHECK(e.edge_count() == 1);
    Graph empty2 = parse_graph6("A?");
    CHECK(empty2.edge_count() == 0);
    CHECK(emit_graph6(path(2)) == "A_");
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("A"), std::invalid_argument);      // truncated
    CHECK_THROWS_AS(parse_graph6("?"), std::invalid_argument);      // n = 0
    CHECK_THROWS_AS(parse_graph6("B\x01\x01"), std::invalid_argument);
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g(n);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        std::string s = emit_graph6(g);
        CHECK(parse_graph6(s) == g);
        CHECK(emit_graph6(parse_graph6(s)) == s);
    }
}

TEST_CASE("edge list round trip and validation") {
    Graph g = parse_edge_list("4 3\n1 2\n2 3\n1 4\n");
    CHECK(g.edge_count() == 3);
    CHECK(parse_edge_list(emit_edge_list(g)) == g);
    CHECK_THROWS_AS(parse_edge_list("4 1\n2 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("4 2\n1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list(""), std::invalid_argument);
}

TEST_CASE("enumerate_connected counts") {
    CHECK(enumerate_connected(3).size() == 2);
    CHECK(enumerate_connected(4).size() == 6);
    CHECK(enumerate_connected(5).size() == 21);
    CHECK(enumerate_connected(6).size() == 112);
    CHECK_THROWS_AS(enumerate_connected(8), std::invalid_argument);
}

TEST_CASE("enumerated graphs have distinct canonical codes") {
    for (int n = 4; n <= 6; ++n) {
        auto graphs = enumerate_connected(n);
        std::set<std::uint64_t> codes;
        std::set<std::pair<std::vector<int>, int>> invariants_seen;
        for (const auto& g : graphs) {
            std::vector<int> degs;
            for (int v = 1; v <= n; ++v) degs.push_back(g.degree(v));
            std::sort(degs.begin(), degs.end());
            int tri = 0;
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b)
                    for (int c = b + 1; c <= n; ++c)
                        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) ++tri;
            invariants_seen.insert({degs, tri});
            CHECK(codes.insert(canonical_code(g)).second);
        }
        // the invariant buckets must not exceed the class count
        CHECK(invariants_seen.size() <= graphs.size());
    }
}

TEST_CASE("acyclicity and connectivity") {
    CHECK(is_acyclic(path(6)));
    CHECK_FALSE(is_acyclic(cycle(4)));
    CHECK(is_connected(cycle(4)));
    CHECK_FALSE(is_connected(path(5).induced(parse_mask("11011"))));
}
