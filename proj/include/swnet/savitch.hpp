#pragma once

#include <map>

#include "swnet/knowledge.hpp"
#include "swnet/network.hpp"

namespace swnet {

// Assignment of one knowledge set per network vertex.
struct CKLabeling {
    std::map<int, KnowledgeSet> labels;
};

// True iff s' carries {}, t' carries the closure of {s->t}, and every network
// edge is a valid reversible step for its label. Throws if a vertex is
// unlabeled or the network is not monotone.
bool validate_certain_knowledge(const SwitchingNetwork& net, const CKLabeling& lab);

// Divide-and-conquer connectivity network: one vertex per knowledge set the
// recursive midpoint search can hold (removal re-runs the sub-search in
// reverse), with every valid labeled edge between them. s' = empty knowledge,
// t' = complete.
std::pair<SwitchingNetwork, CKLabeling> build_savitch_network(int n, int cap = 6);

}  // namespace swnet
