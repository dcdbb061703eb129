#include "swnet/knowledge.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace swnet {

KnowledgeSet KnowledgeSet::complete(int n) {
    KnowledgeSet k(n);
    k.complete_ = true;
    k.rows_.clear();
    return k;
}

KnowledgeSet KnowledgeSet::closure_of(int n, std::span<const Edge> edges) {
    if (n < 2 || n > 31) throw std::invalid_argument("knowledge set dimension out of range");
    KnowledgeSet k(n);
    for (const auto& e : edges) {
        if (e.from == e.to) continue;
        if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n)
            throw std::invalid_argument("knowledge edge endpoint out of range");
        k.rows_[e.from] |= 1u << e.to;
    }
    k.close();
    return k;
}

void KnowledgeSet::close() {
    // reach[u] |= reach[v] for each edge u->v, iterated to fixpoint
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0; u < n_; ++u) {
            std::uint32_t out = rows_[u];
            std::uint32_t acc = out;
            for (int v = 0; v < n_; ++v)
                if ((out >> v) & 1u) acc |= rows_[v];
            acc &= ~(1u << u);  // no self-loops
            if (acc != rows_[u]) {
                rows_[u] = acc;
                changed = true;
            }
        }
    }
    if ((rows_[kSource] >> sink_of(n_)) & 1u) {
        complete_ = true;
        rows_.clear();
    }
}

bool KnowledgeSet::has_edge(int u, int v) const {
    if (u == v) return false;
    if (complete_) return true;
    return (rows_[u] >> v) & 1u;
}

std::vector<Edge> KnowledgeSet::edges() const {
    if (complete_) return {Edge{kSource, sink_of(n_)}};
    std::vector<Edge> es;
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if ((rows_[u] >> v) & 1u) es.push_back({u, v});
    return es;
}

std::size_t KnowledgeSet::edge_count() const {
    if (complete_) return std::size_t(n_) * (n_ - 1);
    std::size_t c = 0;
    for (auto r : rows_) c += std::popcount(r);
    return c;
}

KnowledgeSet KnowledgeSet::with_edge(const Edge& e) const {
    if (complete_) return *this;
    KnowledgeSet k = *this;
    if (e.from != e.to) k.rows_[e.from] |= 1u << e.to;
    k.close();
    return k;
}

KnowledgeSet KnowledgeSet::unite(const KnowledgeSet& other) const {
    if (n_ != other.n_) throw std::invalid_argument("knowledge set dimension mismatch");
    if (complete_ || other.complete_) return complete(n_);
    KnowledgeSet k = *this;
    for (int u = 0; u < n_; ++u) k.rows_[u] |= other.rows_[u];
    k.close();
    return k;
}

bool KnowledgeSet::operator<(const KnowledgeSet& o) const {
    if (complete_ != o.complete_) return !complete_;  // COMPLETE sorts last
    return rows_ < o.rows_;
}

KnowledgeSet transitive_closure(int n, std::span<const Edge> edges) {
    return KnowledgeSet::closure_of(n, edges);
}

bool ks_contains(const KnowledgeSet& k1, const KnowledgeSet& k2) {
    if (k1.n() != k2.n()) throw std::invalid_argument("knowledge set dimension mismatch");
    if (k2.is_complete()) return true;
    if (k1.is_complete()) return false;
    for (const auto& e : k1.edges())
        if (!k2.has_edge(e.from, e.to)) return false;
    return true;
}

bool ck_step_valid(const KnowledgeSet& ka, const KnowledgeSet& kb, const Edge& e) {
    return ks_contains(kb, ka.with_edge(e)) && ks_contains(ka, kb.with_edge(e));
}

StateOfKnowledge::StateOfKnowledge(std::vector<KnowledgeSet> members) {
    if (members.empty()) throw std::invalid_argument("state of knowledge must be nonempty");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    // keep only minimal members under closure containment
    for (std::size_t i = 0; i < members.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < members.size() && minimal; ++j)
            if (i != j && ks_contains(members[j], members[i])) minimal = false;
        if (minimal) members_.push_back(members[i]);
    }
}

bool StateOfKnowledge::contained_in(const StateOfKnowledge& other) const {
    // J1 ⊆ J2: for every K2 there is a K1 with K1 ⊆ K2
    for (const auto& k2 : other.members_) {
        bool found = false;
        for (const auto& k1 : members_)
            if (ks_contains(k1, k2)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

bool StateOfKnowledge::operator==(const StateOfKnowledge& o) const {
    return contained_in(o) && o.contained_in(*this);
}

bool sok_step_valid(const StateOfKnowledge& ja, const StateOfKnowledge& jb, const Edge& e) {
    for (const auto& k1 : ja.members()) {
        bool ok = false;
        for (const auto& k2 : jb.members())
            if (ks_contains(k2, k1.with_edge(e))) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    for (const auto& k2 : jb.members()) {
        bool ok = false;
        for (const auto& k1 : ja.members())
            if (ks_contains(k1, k2.with_edge(e))) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

}  // namespace swnet
