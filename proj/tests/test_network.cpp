#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "swnet/network.hpp"
#include "swnet/savitch.hpp"

using namespace swnet;

namespace {

SwitchingNetwork chain3() {
    PathSpec p;
    p.n = 3;
    p.verts = {1};
    return make_path_chain_network(p);  // s' -(s->a)- m' -(a->t)- t'
}

}  // namespace

TEST_CASE("evaluate on the 3-vertex chain") {
    SwitchingNetwork net = chain3();
    CHECK(evaluate(net, Digraph(3, {{0, 1}, {1, 2}})));
    CHECK_FALSE(evaluate(net, Digraph(3, {{0, 1}})));
    CHECK(evaluate(net, Digraph(3, {{0, 1}, {1, 2}, {1, 0}})));
    CHECK_THROWS_AS(evaluate(net, Digraph(4, {})), std::invalid_argument);
}

TEST_CASE("evaluate honors negated labels") {
    SwitchingNetwork net = chain3();
    net.edges[1].negated = true;  // second hop now requires a->t to be absent
    CHECK(evaluate(net, Digraph(3, {{0, 1}})));
    CHECK_FALSE(evaluate(net, Digraph(3, {{0, 1}, {1, 2}})));
    CHECK_FALSE(net.is_monotone());
}

TEST_CASE("the chain embedded in a larger graph does not solve connectivity") {
    PathSpec p;
    p.n = 4;
    p.verts = {1};
    SwitchingNetwork net = make_path_chain_network(p);  // ignores vertex b entirely
    VerificationReport rep = verify_solves(net, 5, 1);
    CHECK_FALSE(rep.solves);
    REQUIRE(rep.counterexample.has_value());
    CHECK(rep.expected != rep.actual);
    // the record is re-checkable
    CHECK(has_st_path(*rep.counterexample) == rep.expected);
    CHECK(evaluate(net, *rep.counterexample) == rep.actual);
}

TEST_CASE("a disconnected network fails on the direct edge") {
    SwitchingNetwork net;
    net.n = 3;
    net.vertices = {0, 1};
    net.s_prime = 0;
    net.t_prime = 1;
    VerificationReport rep = verify_solves(net, 5, 1);
    CHECK_FALSE(rep.solves);
    REQUIRE(rep.counterexample.has_value());
    CHECK(rep.counterexample->edges == std::vector<Edge>{{0, 2}});
    CHECK(rep.expected);
    CHECK_FALSE(rep.actual);
}

TEST_CASE("verification cap is enforced") {
    auto [net, lab] = build_savitch_network(6);
    CHECK_THROWS_AS(verify_solves(net, 5), std::invalid_argument);
}

TEST_CASE("monotone networks accept supersets") {
    auto [net, lab] = build_savitch_network(4);
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::uint64_t> dist(0, (1ull << pair_count(4)) - 1);
    for (int trial = 0; trial < 60; ++trial) {
        std::uint64_t m1 = dist(rng);
        std::uint64_t m2 = m1 | dist(rng);
        if (evaluate(net, Digraph::from_mask(4, m1)))
            CHECK(evaluate(net, Digraph::from_mask(4, m2)));
    }
}

TEST_CASE("canonical states of the chain") {
    SwitchingNetwork net = chain3();
    auto states = canonical_states(net);
    REQUIRE(states.size() == 3);
    CHECK(states.at(0) == StateOfKnowledge({KnowledgeSet::empty(3)}));
    CHECK(states.at(1) ==
          StateOfKnowledge({KnowledgeSet::closure_of(3, std::vector<Edge>{{0, 1}})}));
    CHECK(states.at(2) == StateOfKnowledge({KnowledgeSet::complete(3)}));
}

TEST_CASE("canonical states step consistently across every edge") {
    for (int n : {3, 4}) {
        auto [net, lab] = build_savitch_network(n);
        auto states = canonical_states(net);
        for (const auto& e : net.edges)
            CHECK(sok_step_valid(states.at(e.u), states.at(e.v), e.label));
    }
}

TEST_CASE("chaining preserves the verdict") {
    auto [net, lab] = build_savitch_network(3);
    SwitchingNetwork chained = chain_transform(net);
    CHECK(verify_solves(chained).solves);
    CHECK(int(chained.vertices.size()) == 3 * int(net.vertices.size()) - 2);
}

TEST_CASE("chaining a 3-vertex network at n=4 gives 9 vertices") {
    SwitchingNetwork net = chain3();
    net.n = 4;  // same chain viewed over a 4-vertex input graph
    net.validate();
    SwitchingNetwork chained = chain_transform(net);
    CHECK(chained.vertices.size() == 9);  // 3*4 minus 3 merges
    CHECK(chained.s_prime != chained.t_prime);
}

TEST_CASE("partitioned chaining rewrites back-crossing labels") {
    SwitchingNetwork net;
    net.n = 4;
    net.vertices = {0, 1};
    net.s_prime = 0;
    net.t_prime = 1;
    net.edges.push_back({0, 1, {2, 1}, false});  // labeled b->a
    // W1 = {s, a}, W2 = {b, t}
    SwitchingNetwork out = chain_transform(net, std::make_pair(0b0011u, 0b1100u));
    REQUIRE(out.edges.size() == 8);  // two labels per copy, four copies
    for (const auto& e : out.edges) CHECK((e.label == Edge{0, 1} || e.label == Edge{2, 3}));
}

TEST_CASE("dot export is deterministic and marks the endpoints") {
    SwitchingNetwork net = chain3();
    std::string dot = export_dot(net);
    CHECK(dot == export_dot(net));
    CHECK(dot.find("doublecircle") != std::string::npos);
    CHECK(dot.find("0->1") != std::string::npos);
    CHECK(dot.find("1->2") != std::string::npos);

    SwitchingNetwork bare;
    bare.n = 2;
    bare.vertices = {0, 1};
    bare.s_prime = 0;
    bare.t_prime = 1;
    std::string tiny = export_dot(bare);
    CHECK(tiny.find("s'") != std::string::npos);
    CHECK(tiny.find("t'") != std::string::npos);
}
