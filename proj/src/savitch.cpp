#include "swnet/savitch.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace swnet {

bool validate_certain_knowledge(const SwitchingNetwork& net, const CKLabeling& lab) {
    net.validate();
    if (!net.is_monotone())
        throw std::invalid_argument("certain-knowledge validation requires a monotone network");
    for (int id : net.vertices)
        if (!lab.labels.count(id)) throw std::invalid_argument("unlabeled network vertex");

    const Edge st{kSource, sink_of(net.n)};
    if (lab.labels.at(net.s_prime) != KnowledgeSet::empty(net.n)) return false;
    if (lab.labels.at(net.t_prime) != KnowledgeSet::closure_of(net.n, {&st, 1})) return false;
    for (const auto& e : net.edges)
        if (!ck_step_valid(lab.labels.at(e.u), lab.labels.at(e.v), e.label)) return false;
    return true;
}

namespace {

// Knowledge sets as closed edge-bitmasks over pair_index; once s->t appears
// the mask canonicalizes to the full graph.
std::uint64_t full_mask(int n) {
    return (std::uint64_t{1} << pair_count(n)) - 1;
}

std::uint64_t close_mask(int n, std::uint64_t mask) {
    std::uint64_t rows[32] = {};
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && ((mask >> pair_index(n, u, v)) & 1u)) rows[u] |= std::uint64_t{1} << v;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int u = 0; u < n; ++u) {
            std::uint64_t acc = rows[u];
            for (int v = 0; v < n; ++v)
                if ((rows[u] >> v) & 1u) acc |= rows[v];
            acc &= ~(std::uint64_t{1} << u);
            if (acc != rows[u]) {
                rows[u] = acc;
                grew = true;
            }
        }
    }
    if ((rows[kSource] >> sink_of(n)) & 1u) return full_mask(n);
    std::uint64_t out = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if ((rows[u] >> v) & 1u) out |= std::uint64_t{1} << pair_index(n, u, v);
    return out;
}

// All edge sets the recursive search for u~>v (length <= k) can hold at some
// instant, relative to whatever is already known. Finding a sub-edge adds it;
// removing one replays the sub-search backwards through the same sets.
struct Collector {
    int n;
    std::map<std::tuple<int, int, int>, std::vector<std::uint64_t>> memo;

    std::uint64_t bit(int u, int v) const {
        return u == v ? 0 : std::uint64_t{1} << pair_index(n, u, v);
    }

    const std::vector<std::uint64_t>& run(int u, int v, int k) {
        auto key = std::make_tuple(u, v, k);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::set<std::uint64_t> acc;
        if (u == v) {
            acc.insert(0);
        } else if (k <= 1) {
            acc.insert(0);
            acc.insert(bit(u, v));
        } else {
            const int h = (k + 1) / 2;
            const std::uint64_t uv = bit(u, v);
            acc.insert(0);
            acc.insert(uv);
            for (int m = 0; m < n; ++m) {
                const std::uint64_t um = bit(u, m);
                auto first = run(u, m, h);   // copies: recursion invalidates refs
                auto second = run(m, v, h);
                for (auto x : first) acc.insert(x);              // searching u~>m
                for (auto x : second) acc.insert(um | x);        // searching m~>v
                for (auto x : second) acc.insert(um | uv | x);   // unfinding m~>v
                for (auto x : first) acc.insert(uv | x);         // unfinding u~>m
            }
        }
        return memo[key] = std::vector<std::uint64_t>(acc.begin(), acc.end());
    }
};

}  // namespace

std::pair<SwitchingNetwork, CKLabeling> build_savitch_network(int n, int cap) {
    if (n < 3) throw std::invalid_argument("need at least 3 vertices");
    if (n > cap || n > 7)
        throw std::invalid_argument("vertex count exceeds construction cap");

    Collector col{n, {}};
    const auto& raw = col.run(kSource, sink_of(n), n - 1);
    std::set<std::uint64_t> states;
    for (auto m : raw) states.insert(close_mask(n, m));
    states.insert(0);
    states.insert(full_mask(n));

    // deterministic ids: sorted knowledge sets, empty first, complete last
    std::vector<KnowledgeSet> sets;
    for (auto m : states) {
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && ((m >> pair_index(n, u, v)) & 1u)) es.push_back({u, v});
        sets.push_back(KnowledgeSet::closure_of(n, es));
    }
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

    // closed masks again, aligned with ids, plus per-label augmented closures
    const int m = int(sets.size());
    const int labels = pair_count(n);
    std::vector<std::uint64_t> mask(m);
    std::vector<std::vector<std::uint64_t>> aug(m, std::vector<std::uint64_t>(labels));
    for (int i = 0; i < m; ++i) {
        std::uint64_t mk = 0;
        if (sets[i].is_complete()) {
            mk = full_mask(n);
        } else {
            for (const auto& e : sets[i].edges())
                mk |= std::uint64_t{1} << pair_index(n, e.from, e.to);
        }
        mask[i] = mk;
        for (int l = 0; l < labels; ++l)
            aug[i][l] = close_mask(n, mk | (std::uint64_t{1} << l));
    }

    SwitchingNetwork net;
    net.n = n;
    net.vertices.resize(m);
    for (int i = 0; i < m; ++i) net.vertices[i] = i;
    net.s_prime = 0;
    net.t_prime = m - 1;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int l = 0; l < labels; ++l)
                if ((mask[j] & ~aug[i][l]) == 0 && (mask[i] & ~aug[j][l]) == 0) {
                    int from = l / (n - 1);
                    int to = l % (n - 1);
                    if (to >= from) ++to;
                    net.edges.push_back({i, j, Edge{from, to}, false});
                }

    CKLabeling lab;
    for (int i = 0; i < m; ++i) lab.labels.emplace(i, sets[i]);
    net.validate();
    return {std::move(net), std::move(lab)};
}

}  // namespace swnet
