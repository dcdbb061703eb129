#include "swnet/reduction.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace swnet {

void validate_walk(const SwitchingNetwork& net, const Walk& walk) {
    if (walk.verts.size() != walk.edges.size() + 1 || walk.verts.empty())
        throw std::invalid_argument("walk shape mismatch");
    for (std::size_t i = 0; i < walk.edges.size(); ++i) {
        if (walk.edges[i] < 0 || walk.edges[i] >= int(net.edges.size()))
            throw std::invalid_argument("walk edge index out of range");
        const NetEdge& e = net.edges[walk.edges[i]];
        bool fwd = e.u == walk.verts[i] && e.v == walk.verts[i + 1];
        bool bwd = e.v == walk.verts[i] && e.u == walk.verts[i + 1];
        if (!fwd && !bwd) throw std::invalid_argument("walk edge not incident to its step");
    }
}

KnowledgeSet SubsetWalkGraph::union_of(const State& st, int n) const {
    KnowledgeSet k = KnowledgeSet::empty(n);
    const auto& ms = members_at[st.pos];
    for (std::size_t i = 0; i < ms.size(); ++i)
        if ((st.subset >> i) & 1u) k = k.unite(ms[i]);
    return k;
}

namespace {

// Arrow structure for one walk edge: the orange functional graph between the
// knowledge sets on its two sides, its cycles, and the representative each
// member drains to.
struct EdgeArrows {
    std::vector<int> orange_a, orange_b;    // lowest-index targets on the far side
    std::vector<int> rep_of_a, rep_of_b;    // cycle id, or -1 when off-cycle
    std::vector<int> black_a, black_b;      // far-side representative reached
    std::vector<int> cyc_rep_a, cyc_rep_b;  // per cycle, the side representatives
};

EdgeArrows make_arrows(const std::vector<KnowledgeSet>& A, const std::vector<KnowledgeSet>& B,
                       const Edge& e) {
    EdgeArrows ar;
    const int na = int(A.size()), nb = int(B.size());
    ar.orange_a.assign(na, -1);
    ar.orange_b.assign(nb, -1);
    for (int x = 0; x < na; ++x) {
        KnowledgeSet up = A[x].with_edge(e);
        for (int y = 0; y < nb; ++y)
            if (ks_contains(B[y], up)) {
                ar.orange_a[x] = y;
                break;
            }
        if (ar.orange_a[x] < 0) throw std::invalid_argument("walk step violates the state rules");
    }
    for (int y = 0; y < nb; ++y) {
        KnowledgeSet up = B[y].with_edge(e);
        for (int x = 0; x < na; ++x)
            if (ks_contains(A[x], up)) {
                ar.orange_b[y] = x;
                break;
            }
        if (ar.orange_b[y] < 0) throw std::invalid_argument("walk step violates the state rules");
    }

    // nodes 0..na-1 = A side, na..na+nb-1 = B side; arrows alternate sides
    auto next = [&](int v) { return v < na ? na + ar.orange_a[v] : ar.orange_b[v - na]; };
    const int total = na + nb;
    std::vector<int> cyc(total, -1);
    int ncyc = 0;
    for (int v0 = 0; v0 < total; ++v0) {
        // find the cycle this tail drains into
        std::vector<char> on_path(total, 0);
        int v = v0;
        while (cyc[v] < 0 && !on_path[v]) {
            on_path[v] = 1;
            v = next(v);
        }
        if (cyc[v] < 0) {
            int id = ncyc++;
            int w = v;
            do {
                cyc[w] = id;
                w = next(w);
            } while (w != v);
        }
    }
    ar.cyc_rep_a.assign(ncyc, -1);
    ar.cyc_rep_b.assign(ncyc, -1);
    ar.rep_of_a.assign(na, -1);
    ar.rep_of_b.assign(nb, -1);
    // a node is on a cycle iff iterating next() returns to it
    std::vector<char> on_cycle(total, 0);
    for (int v0 = 0; v0 < total; ++v0) {
        int v = next(v0), steps = 0;
        while (v != v0 && steps++ < total) v = next(v);
        on_cycle[v0] = (v == v0);
    }
    for (int x = 0; x < na; ++x)
        if (on_cycle[x] && ar.cyc_rep_a[cyc[x]] < 0) ar.cyc_rep_a[cyc[x]] = x;
    for (int y = 0; y < nb; ++y)
        if (on_cycle[na + y] && ar.cyc_rep_b[cyc[na + y]] < 0) ar.cyc_rep_b[cyc[na + y]] = y;
    for (int x = 0; x < na; ++x)
        if (on_cycle[x] && ar.cyc_rep_a[cyc[x]] == x) ar.rep_of_a[x] = cyc[x];
    for (int y = 0; y < nb; ++y)
        if (on_cycle[na + y] && ar.cyc_rep_b[cyc[na + y]] == y) ar.rep_of_b[y] = cyc[na + y];

    ar.black_a.assign(na, -1);
    ar.black_b.assign(nb, -1);
    for (int x = 0; x < na; ++x) {
        int v = next(x);
        while (!(v >= na && ar.rep_of_b[v - na] >= 0)) v = next(next(v));
        ar.black_a[x] = v - na;
    }
    for (int y = 0; y < nb; ++y) {
        int v = next(na + y);
        while (!(v < na && ar.rep_of_a[v] >= 0)) v = next(next(v));
        ar.black_b[y] = v;
    }
    return ar;
}

struct Move {
    int pos;
    std::uint32_t subset;
};

// One reversible subset move across (or bounced off) a walk edge.
// forward = attempting to travel from the edge's lower to its upper position.
Move apply_move(const EdgeArrows& ar, int lo_pos, std::uint32_t subset, bool forward) {
    const auto& rep_of = forward ? ar.rep_of_a : ar.rep_of_b;
    const auto& black = forward ? ar.black_a : ar.black_b;
    const auto& far_rep_to_cyc = forward ? ar.rep_of_b : ar.rep_of_a;
    const auto& cyc_rep_near = forward ? ar.cyc_rep_a : ar.cyc_rep_b;
    const auto& cyc_rep_far = forward ? ar.cyc_rep_b : ar.cyc_rep_a;
    const int here = forward ? lo_pos : lo_pos + 1;
    const int there = forward ? lo_pos + 1 : lo_pos;

    bool all_reps = true;
    int earliest_nonrep = -1;
    for (int i = 0; (subset >> i) != 0; ++i)
        if ((subset >> i) & 1u)
            if (rep_of[i] < 0) {
                all_reps = false;
                earliest_nonrep = earliest_nonrep < 0 ? i : earliest_nonrep;
                break;
            }
    if (all_reps) {
        std::uint32_t out = 0;
        for (int i = 0; (subset >> i) != 0; ++i)
            if ((subset >> i) & 1u) out |= 1u << cyc_rep_far[rep_of[i]];
        return {there, out};
    }
    int far_rep = black[earliest_nonrep];
    int toggled = cyc_rep_near[far_rep_to_cyc[far_rep]];
    return {here, subset ^ (1u << toggled)};
}

}  // namespace

SubsetWalkGraph build_subset_walk_graph(const SwitchingNetwork& net,
                                        const std::map<int, StateOfKnowledge>& lab,
                                        const Walk& walk, const PathSpec& pathP) {
    validate_walk(net, walk);
    if (walk.verts.front() != net.s_prime || walk.verts.back() != net.t_prime)
        throw std::invalid_argument("walk must run from s' to t'");
    const auto path_edges = pathP.edges();
    for (int ei : walk.edges) {
        const Edge& label = net.edges[ei].label;
        if (std::find(path_edges.begin(), path_edges.end(), label) == path_edges.end())
            throw std::invalid_argument("walk uses a label outside the path");
    }

    const int m = int(walk.edges.size());
    SubsetWalkGraph h;
    h.members_at.resize(m + 1);
    for (int i = 0; i <= m; ++i) {
        auto it = lab.find(walk.verts[i]);
        if (it == lab.end()) throw std::invalid_argument("walk vertex has no state of knowledge");
        h.members_at[i] = it->second.members();
        if (h.members_at[i].size() > 16)
            throw std::invalid_argument("too many knowledge sets at a walk vertex");
    }
    if (h.members_at[0].size() != 1 || h.members_at[m].size() != 1)
        throw std::invalid_argument("endpoint states must be singletons");

    std::vector<EdgeArrows> arrows;
    arrows.reserve(m);
    for (int i = 0; i < m; ++i)
        arrows.push_back(
            make_arrows(h.members_at[i], h.members_at[i + 1], net.edges[walk.edges[i]].label));

    using State = SubsetWalkGraph::State;
    // out[state] = (successor, walk edge); odd subsets move toward the next
    // position, even subsets toward the previous one
    auto step_out = [&](const State& st) -> std::pair<State, int> {
        bool odd = std::popcount(st.subset) % 2 == 1;
        int ei = odd ? st.pos : st.pos - 1;
        Move mv = apply_move(arrows[ei], ei, st.subset, odd);
        return {State{mv.pos, mv.subset}, ei};
    };

    // trace the path
    State cur{0, 1};
    const State fin{m, 1};
    std::map<State, char> seen;
    h.path.push_back(cur);
    while (cur != fin) {
        auto [nxt, ei] = step_out(cur);
        if (seen.count(nxt)) throw std::logic_error("subset-walk path revisited a state");
        seen[nxt] = 1;
        h.path_corr.push_back(ei);
        h.path.push_back(nxt);
        cur = nxt;
    }

    // remaining states sit on directed cycles
    for (int pos = 1; pos < m; ++pos) {
        const std::uint32_t subsets = (1u << h.members_at[pos].size()) - 1;
        for (std::uint32_t s = 1; s <= subsets; ++s) {
            State st{pos, s};
            if (seen.count(st)) continue;
            if (std::find(h.path.begin(), h.path.end(), st) != h.path.end()) continue;
            std::vector<State> cyc;
            std::vector<int> corr;
            State c = st;
            do {
                if (seen.count(c)) throw std::logic_error("subset-walk cycles overlap");
                seen[c] = 1;
                cyc.push_back(c);
                auto [nxt, ei] = step_out(c);
                corr.push_back(ei);
                c = nxt;
            } while (c != st);
            for (const auto& v : cyc)
                if (v.pos == 0 || v.pos == m) throw std::logic_error("cycle touched an endpoint");
            h.cycles.push_back(std::move(cyc));
            h.cycle_corr.push_back(std::move(corr));
        }
    }

    // structural check: every move is an inverse pair, so in-degree is 1
    std::map<State, int> indeg;
    for (std::size_t i = 1; i < h.path.size(); ++i) ++indeg[h.path[i]];
    for (const auto& cyc : h.cycles)
        for (std::size_t i = 0; i < cyc.size(); ++i) ++indeg[cyc[(i + 1) % cyc.size()]];
    for (const auto& [st, d] : indeg)
        if (d != 1) throw std::logic_error("subset-walk vertex with in-degree != 1");
    return h;
}

std::vector<std::pair<KnowledgeSet, int>> extract_knowledge_sequence(
    const SwitchingNetwork& net, const std::map<int, StateOfKnowledge>& lab,
    const Walk& walk, const PathSpec& pathP) {
    SubsetWalkGraph h = build_subset_walk_graph(net, lab, walk, pathP);
    std::vector<std::pair<KnowledgeSet, int>> seq;
    seq.reserve(h.path.size());
    for (const auto& st : h.path)
        seq.emplace_back(h.union_of(st, net.n), walk.verts[st.pos]);
    return seq;
}

}  // namespace swnet
