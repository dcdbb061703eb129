#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "swnet/graph.hpp"

namespace swnet {

// A knowledge set: a set of directed G-edges, identified with its transitive
// closure. Any set whose closure contains s->t canonicalizes to COMPLETE
// (represented without explicit rows; its canonical edge list is {s->t}).
class KnowledgeSet {
  public:
    KnowledgeSet() = default;

    static KnowledgeSet empty(int n) { return KnowledgeSet(n); }
    static KnowledgeSet complete(int n);
    static KnowledgeSet closure_of(int n, std::span<const Edge> edges);

    int n() const { return n_; }
    bool is_complete() const { return complete_; }
    bool has_edge(int u, int v) const;
    std::vector<Edge> edges() const;  // closure edges; {s->t} when COMPLETE
    std::size_t edge_count() const;

    // canon(this ∪ {e})
    KnowledgeSet with_edge(const Edge& e) const;
    // canon(this ∪ other)
    KnowledgeSet unite(const KnowledgeSet& other) const;

    bool operator==(const KnowledgeSet&) const = default;
    bool operator<(const KnowledgeSet& o) const;

  private:
    explicit KnowledgeSet(int n) : n_(n), rows_(n, 0) {}

    int n_ = 0;
    bool complete_ = false;
    std::vector<std::uint32_t> rows_;  // closure adjacency; empty if complete

    void close();
};

KnowledgeSet transitive_closure(int n, std::span<const Edge> edges);

// k1 ⊆ k2 in the paper's sense: closure containment.
bool ks_contains(const KnowledgeSet& k1, const KnowledgeSet& k2);

// Can we get from ka to kb with the edge e (reversible-operation reachability)?
bool ck_step_valid(const KnowledgeSet& ka, const KnowledgeSet& kb, const Edge& e);

// A state of knowledge: a nonempty set of knowledge sets, stored as the
// antichain of its minimal members under closure containment.
class StateOfKnowledge {
  public:
    StateOfKnowledge() = default;
    explicit StateOfKnowledge(std::vector<KnowledgeSet> members);

    const std::vector<KnowledgeSet>& members() const { return members_; }
    bool contained_in(const StateOfKnowledge& other) const;  // this ⊆ other
    bool operator==(const StateOfKnowledge& o) const;

  private:
    std::vector<KnowledgeSet> members_;  // sorted minimal antichain
};

bool sok_step_valid(const StateOfKnowledge& ja, const StateOfKnowledge& jb, const Edge& e);

}  // namespace swnet
