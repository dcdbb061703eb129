#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swnet/graph.hpp"
#include "swnet/knowledge.hpp"

namespace swnet {

// An edge of the switching network: undirected, labeled with a directed
// G-edge, possibly negated. Multi-edges are allowed.
struct NetEdge {
    int u = 0;
    int v = 0;
    Edge label;
    bool negated = false;
    auto operator<=>(const NetEdge&) const = default;
};

// A switching network <G', s', t', mu'> over an input-vertex set of size n.
struct SwitchingNetwork {
    int n = 2;
    std::vector<int> vertices;  // sorted ids
    int s_prime = 0;
    int t_prime = 1;
    std::vector<NetEdge> edges;

    bool is_monotone() const;
    int index_of(int id) const;  // throws on unknown id
    void validate() const;
};

struct VerificationReport {
    bool solves = false;
    std::uint64_t inputs_checked = 0;
    std::optional<Digraph> counterexample;
    bool expected = false;  // oracle verdict on the counterexample
    bool actual = false;    // network verdict on the counterexample
};

// Does a consistent s'-t' path exist for input g?
bool evaluate(const SwitchingNetwork& net, const Digraph& g);

// Exhaustive check of evaluate against has_st_path over all 2^(n(n-1)) inputs.
// SWNET_THREADS (or the threads argument) bounds worker parallelism.
VerificationReport verify_solves(const SwitchingNetwork& net, int max_n = 5, int threads = 0);

struct StateCaps {
    int max_alphabet = 18;  // distinct labels explored as 2^alphabet subsets
};

// Canonical states of knowledge: for each vertex, the minimal knowledge sets
// whose edges suffice to reach it from s'.
std::map<int, StateOfKnowledge> canonical_states(const SwitchingNetwork& net,
                                                 const StateCaps& caps = {});

// Chain N copies of the network s'-to-t'; with a (W1,W2) partition given as
// vertex masks, every label a->b with a in W2 and b in W1 is first replaced
// by the two labels s->b and a->t.
SwitchingNetwork chain_transform(const SwitchingNetwork& net,
                                 std::optional<std::pair<std::uint32_t, std::uint32_t>>
                                     partition = std::nullopt);

std::string export_dot(const SwitchingNetwork& net);

// Chain-shaped network realizing a single path: s' - v1' - ... - t' with the
// path's induced labels. The workhorse test fixture.
SwitchingNetwork make_path_chain_network(const PathSpec& path);

}  // namespace swnet
