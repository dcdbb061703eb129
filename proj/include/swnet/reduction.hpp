#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "swnet/knowledge.hpp"
#include "swnet/network.hpp"

namespace swnet {

// A walk through a network, as vertex ids plus the index (into net.edges) of
// each step; needed because parallel edges carry different labels.
struct Walk {
    std::vector<int> verts;
    std::vector<int> edges;
};

// Checks shape and incidence against the network.
void validate_walk(const SwitchingNetwork& net, const Walk& walk);

// The subset-walk graph H': one vertex per (walk position, nonempty subset of
// the knowledge sets held there), connected by the reversible subset moves
// and oriented so every vertex except the endpoints has in- and out-degree 1.
// It decomposes into a single s''-t'' path plus directed cycles; every edge
// corresponds to one walk edge.
struct SubsetWalkGraph {
    struct State {
        int pos = 0;                // walk position
        std::uint32_t subset = 0;   // member mask within members_at[pos]
        auto operator<=>(const State&) const = default;
    };

    std::vector<std::vector<KnowledgeSet>> members_at;  // per walk position
    std::vector<State> path;                            // s'' first, t'' last
    std::vector<int> path_corr;                         // walk-edge index per path edge
    std::vector<std::vector<State>> cycles;             // edge i: cycle[i] -> cycle[i+1 mod]
    std::vector<std::vector<int>> cycle_corr;

    // canonical union of the subset's knowledge sets
    KnowledgeSet union_of(const State& st, int n) const;
};

SubsetWalkGraph build_subset_walk_graph(const SwitchingNetwork& net,
                                        const std::map<int, StateOfKnowledge>& lab,
                                        const Walk& walk, const PathSpec& pathP);

// The knowledge sequence along the s''-t'' path of H': starts at {}, ends at
// the closure of {s->t}, and every consecutive pair is one reversible step
// for some edge of pathP. Second element is the anchoring network vertex.
std::vector<std::pair<KnowledgeSet, int>> extract_knowledge_sequence(
    const SwitchingNetwork& net, const std::map<int, StateOfKnowledge>& lab,
    const Walk& walk, const PathSpec& pathP);

}  // namespace swnet
