#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "swnet/graph.hpp"

using namespace swnet;

namespace {

// Independent reachability oracle: Floyd-Warshall closure, then (s,t) lookup.
bool closure_oracle(const Digraph& g) {
    std::vector<std::vector<char>> reach(g.n, std::vector<char>(g.n, 0));
    for (int v = 0; v < g.n; ++v) reach[v][v] = 1;
    for (const auto& e : g.edges) reach[e.from][e.to] = 1;
    for (int m = 0; m < g.n; ++m)
        for (int u = 0; u < g.n; ++u)
            for (int v = 0; v < g.n; ++v)
                if (reach[u][m] && reach[m][v]) reach[u][v] = 1;
    return reach[kSource][sink_of(g.n)];
}

}  // namespace

TEST_CASE("pair indexing is a bijection") {
    for (int n = 2; n <= 5; ++n) {
        std::set<int> seen;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                int idx = pair_index(n, u, v);
                CHECK(idx >= 0);
                CHECK(idx < pair_count(n));
                CHECK(seen.insert(idx).second);
            }
        CHECK(int(seen.size()) == pair_count(n));
    }
}

TEST_CASE("digraph mask round-trip") {
    Digraph g(4, {{0, 1}, {1, 3}, {2, 1}});
    CHECK(Digraph::from_mask(4, g.edge_mask()).edges == g.edges);
    CHECK(g.has_edge({0, 1}));
    CHECK_FALSE(g.has_edge({1, 0}));
    for (std::uint64_t m = 0; m < 64; ++m)
        CHECK(Digraph::from_mask(3, m).edge_mask() == m);
}

TEST_CASE("digraph normalizes its edge list") {
    Digraph g(3, {{1, 0}, {0, 1}, {0, 1}});
    CHECK(g.edges == std::vector<Edge>{{0, 1}, {1, 0}});
    CHECK_THROWS_AS(Digraph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Digraph(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("cut enumeration") {
    CHECK(enumerate_cuts(2).size() == 1);
    auto cuts4 = enumerate_cuts(4);
    REQUIRE(cuts4.size() == 4);
    for (std::uint32_t i = 0; i < 4; ++i) CHECK(cuts4[i].mask == i);
    CHECK(enumerate_cuts(6).size() == 16);
    CHECK_THROWS_WITH_AS(enumerate_cuts(1), doctest::Contains("invalid dimension"),
                         std::invalid_argument);
}

TEST_CASE("cut membership and crossing") {
    const int n = 4;
    Cut c0{0};          // {s}
    Cut ca{1};          // {s, a}
    CHECK(cut_contains(c0, kSource, n));
    CHECK_FALSE(cut_contains(c0, sink_of(n), n));
    CHECK(cut_contains(ca, 1, n));

    for (const auto& c : enumerate_cuts(n)) CHECK(edge_crosses({kSource, sink_of(n)}, c, n));
    CHECK(edge_crosses({0, 1}, c0, n));
    CHECK_FALSE(edge_crosses({0, 1}, ca, n));
    CHECK(edge_crosses({1, 2}, ca, n));
    CHECK_FALSE(edge_crosses({1, 2}, Cut{3}, n));
}

TEST_CASE("path spec edges and validation") {
    PathSpec p;
    p.n = 5;
    p.verts = {1, 3, 2};
    p.validate();
    CHECK(p.edges() == std::vector<Edge>{{0, 1}, {1, 3}, {3, 2}, {2, 4}});

    PathSpec bad;
    bad.n = 4;
    bad.verts = {1, 1};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.verts = {3};  // t is not an internal vertex
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("reachability basics") {
    CHECK(has_st_path(Digraph(3, {{0, 1}, {1, 2}})));
    CHECK_FALSE(has_st_path(Digraph(3, {})));
    // s->a, a->b, b->a, s->b on {s, a, b, t}: no way to reach t
    CHECK_FALSE(has_st_path(Digraph(4, {{0, 1}, {1, 2}, {2, 1}, {0, 2}})));
}

TEST_CASE("reachability agrees with the closure oracle on all 3-vertex digraphs") {
    for (std::uint64_t m = 0; m < 64; ++m) {
        Digraph g = Digraph::from_mask(3, m);
        CHECK(has_st_path(g) == closure_oracle(g));
    }
}
