#include "swnet/certificates.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace swnet {

int EdgePartition::classify(const Edge& e) const {
    if (std::find(e1.begin(), e1.end(), e) != e1.end()) return 0;
    if (std::find(e2.begin(), e2.end(), e) != e2.end()) return 1;
    return -1;
}

void EdgePartition::validate() const {
    pathP.validate();
    auto all = pathP.edges();
    std::vector<Edge> merged = e1;
    merged.insert(merged.end(), e2.begin(), e2.end());
    std::sort(merged.begin(), merged.end());
    std::sort(all.begin(), all.end());
    if (merged != all) throw std::invalid_argument("e1, e2 must partition the path edges");
}

EdgePartition standard_partition(const PathSpec& pathP) {
    EdgePartition part;
    part.pathP = pathP;
    const auto es = pathP.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        (i % 2 == 0 ? part.e1 : part.e2).push_back(es[i]);
    part.validate();
    return part;
}

bool is_invariant_cut(const Cut& c, const EdgePartition& part) {
    bool any1 = false, any2 = false;
    for (const auto& e : part.e1)
        if (edge_crosses(e, c, part.pathP.n)) any1 = true;
    for (const auto& e : part.e2)
        if (edge_crosses(e, c, part.pathP.n)) any2 = true;
    return !(any1 && any2);
}

bool is_invariant_function(const CutFunction& g, const EdgePartition& part) {
    if (g.n != part.pathP.n) throw std::invalid_argument("dimension mismatch");
    for (std::uint32_t c = 0; c < g.values.size(); ++c)
        if (!is_invariant_cut(Cut{c}, part) && g.values[c] != 0) return false;
    return true;
}

LabeledTrace walk_trace(const SwitchingNetwork& net,
                        const std::map<int, StateOfKnowledge>& states, const Walk& walk) {
    validate_walk(net, walk);
    LabeledTrace tr;
    for (int id : walk.verts) {
        auto it = states.find(id);
        if (it == states.end()) throw std::invalid_argument("walk vertex has no state");
        tr.fn.push_back(sok_to_function(it->second, net.n));
    }
    for (std::size_t i = 0; i < walk.edges.size(); ++i)
        tr.steps.push_back({int(i), int(i + 1), net.edges[walk.edges[i]].label});
    return tr;
}

namespace {

LabeledTrace states_to_trace(const SubsetWalkGraph& h, const SwitchingNetwork& net,
                             const Walk& walk, const std::vector<SubsetWalkGraph::State>& seq,
                             const std::vector<int>& corr, bool closed) {
    LabeledTrace tr;
    for (const auto& st : seq) tr.fn.push_back(ks_to_function(h.union_of(st, net.n), net.n));
    for (std::size_t i = 0; i < corr.size(); ++i) {
        int v = closed ? int((i + 1) % seq.size()) : int(i + 1);
        tr.steps.push_back({int(i), v, net.edges[walk.edges[corr[i]]].label});
    }
    return tr;
}

}  // namespace

LabeledTrace subset_path_trace(const SubsetWalkGraph& h, const SwitchingNetwork& net,
                               const Walk& walk) {
    return states_to_trace(h, net, walk, h.path, h.path_corr, false);
}

std::vector<LabeledTrace> subset_cycle_traces(const SubsetWalkGraph& h,
                                              const SwitchingNetwork& net, const Walk& walk) {
    std::vector<LabeledTrace> out;
    for (std::size_t i = 0; i < h.cycles.size(); ++i)
        out.push_back(states_to_trace(h, net, walk, h.cycles[i], h.cycle_corr[i], true));
    return out;
}

CutFunction edge_contribution(const LabeledTrace& tr, const Edge& e) {
    if (tr.fn.empty()) throw std::invalid_argument("empty trace");
    CutFunction d(tr.fn.front().n, 0);
    for (const auto& st : tr.steps)
        if (st.label == e) {
            d += tr.fn[st.v];
            d -= tr.fn[st.u];
        }
    return d * Rat(1, 2);
}

CutFunction partition_flow(const LabeledTrace& tr, const EdgePartition& part) {
    if (tr.fn.empty()) throw std::invalid_argument("empty trace");
    CutFunction f(tr.fn.front().n, 0);
    for (const auto& e : part.e1) f += edge_contribution(tr, e);
    for (const auto& e : part.e2) f -= edge_contribution(tr, e);
    return f;
}

std::vector<std::uint32_t> barrier_set(int k, int cap) {
    if (k < 1 || k > 4) throw std::invalid_argument("level out of range");
    const int m = 1 << k;
    std::vector<std::uint32_t> out;
    for (std::uint32_t v = 0; v < (1u << m); ++v) {
        int c = std::popcount(v);
        if (c >= k + 1 && c <= cap) out.push_back(v);
    }
    return out;
}

KvNetwork build_kv_network(const PathSpec& pathP, std::uint32_t w1) {
    pathP.validate();
    const int n = pathP.n;
    const int m = int(pathP.verts.size());
    if (m > 10) throw std::invalid_argument("too many path vertices for the full network");
    if (w1 == 0) w1 = ~(1u << sink_of(n));

    auto translate = [&](std::uint32_t pos_mask) {
        std::uint32_t internal = 0;
        for (int i = 0; i < m; ++i)
            if ((pos_mask >> i) & 1u) internal |= 1u << (pathP.verts[i] - 1);
        return internal;
    };

    KvNetwork kv;
    kv.pathP = pathP;
    const int total = (1 << m) + 1;
    for (std::uint32_t v = 0; v < (1u << m); ++v)
        kv.ks.push_back(partition_knowledge(translate(v), w1, n));
    kv.ks.push_back(KnowledgeSet::complete(n));

    kv.net.n = n;
    kv.net.vertices.resize(total);
    for (int i = 0; i < total; ++i) kv.net.vertices[i] = i;
    kv.net.s_prime = 0;
    kv.net.t_prime = total - 1;
    const auto labels = pathP.edges();
    for (int i = 0; i < total; ++i)
        for (int j = i + 1; j < total; ++j)
            for (const auto& e : labels)
                if (ck_step_valid(kv.ks[i], kv.ks[j], e))
                    kv.net.edges.push_back({i, j, e, false});
    kv.net.validate();
    return kv;
}

CKLabeling KvNetwork::labeling() const {
    CKLabeling lab;
    for (std::size_t i = 0; i < ks.size(); ++i) lab.labels.emplace(int(i), ks[i]);
    return lab;
}

std::map<int, StateOfKnowledge> KvNetwork::singleton_states() const {
    std::map<int, StateOfKnowledge> out;
    for (std::size_t i = 0; i < ks.size(); ++i)
        out.emplace(int(i), StateOfKnowledge({ks[i]}));
    return out;
}

namespace {

struct ClassifiedEdge {
    int u, v, cls;
};

std::vector<ClassifiedEdge> path_edges_only(const SwitchingNetwork& net,
                                            const EdgePartition& part) {
    std::vector<ClassifiedEdge> out;
    for (const auto& e : net.edges) {
        int c = part.classify(e.label);
        if (c >= 0) out.push_back({e.u, e.v, c});
    }
    return out;
}

bool blocks(const SwitchingNetwork& net, const std::set<int>& w,
            const std::vector<ClassifiedEdge>& edges) {
    // states: (vertex, class of the entering edge); a violating walk keeps
    // one class through every barrier vertex it visits
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> stack;
    auto push = [&](int v, int cls) {
        if (seen.insert({v, cls}).second) stack.push_back({v, cls});
    };
    for (const auto& e : edges) {
        if (e.u == net.s_prime) push(e.v, e.cls);
        if (e.v == net.s_prime) push(e.u, e.cls);
    }
    while (!stack.empty()) {
        auto [v, cin] = stack.back();
        stack.pop_back();
        if (v == net.t_prime) return false;
        bool restricted = w.count(v) != 0;
        for (const auto& e : edges) {
            if (e.u != v && e.v != v) continue;
            if (restricted && e.cls != cin) continue;
            push(e.u == v ? e.v : e.u, e.cls);
        }
    }
    return true;
}

}  // namespace

bool barrier_blocks(const SwitchingNetwork& net, const std::vector<int>& barrier,
                    const EdgePartition& part) {
    net.validate();
    return blocks(net, std::set<int>(barrier.begin(), barrier.end()),
                  path_edges_only(net, part));
}

BMapping build_barrier_mapping(const SwitchingNetwork& net, const std::vector<int>& barrier,
                               const EdgePartition& part) {
    net.validate();
    const auto edges = path_edges_only(net, part);
    std::set<int> w(barrier.begin(), barrier.end());
    if (!blocks(net, w, edges)) throw std::invalid_argument("barrier does not block all walks");
    if (w.count(net.s_prime) || w.count(net.t_prime))
        throw std::invalid_argument("barrier may not contain the endpoints");

    // minimize greedily in id order
    for (int id : barrier) {
        std::set<int> trial = w;
        trial.erase(id);
        if (blocks(net, trial, edges)) w = std::move(trial);
    }

    // saturate same-class adjacency to its transitive closure
    const int nv = int(net.vertices.size());
    auto idx = [&](int id) { return net.index_of(id); };
    std::vector<std::vector<char>> adj(2, std::vector<char>(nv * nv, 0));
    for (const auto& e : edges) adj[e.cls][idx(e.u) * nv + idx(e.v)] =
                                    adj[e.cls][idx(e.v) * nv + idx(e.u)] = 1;
    for (int c = 0; c < 2; ++c) {
        bool grew = true;
        while (grew) {
            grew = false;
            for (int a = 0; a < nv; ++a)
                for (int b = 0; b < nv; ++b)
                    if (adj[c][a * nv + b])
                        for (int d = 0; d < nv; ++d)
                            if (adj[c][b * nv + d] && a != d && !adj[c][a * nv + d]) {
                                adj[c][a * nv + d] = adj[c][d * nv + a] = 1;
                                grew = true;
                            }
        }
    }

    // components of the non-barrier vertices
    std::vector<int> comp(nv, -1);
    int ncomp = 0;
    for (int i = 0; i < nv; ++i) {
        if (comp[i] >= 0 || w.count(net.vertices[i])) continue;
        int id = ncomp++;
        std::vector<int> stack{i};
        comp[i] = id;
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int b = 0; b < nv; ++b)
                if ((adj[0][a * nv + b] || adj[1][a * nv + b]) && comp[b] < 0 &&
                    !w.count(net.vertices[b])) {
                    comp[b] = id;
                    stack.push_back(b);
                }
        }
    }
    const int start_comp = comp[idx(net.s_prime)];
    const int end_comp = comp[idx(net.t_prime)];
    if (start_comp == end_comp) throw std::logic_error("endpoints share a component");

    BMapping bm;
    for (int i = 0; i < nv; ++i) {
        int id = net.vertices[i];
        if (w.count(id)) continue;
        if (comp[i] == end_comp) bm.b[id] = {1, 1};
        else bm.b[id] = {0, 0};
    }
    for (int id : w) {
        int i = idx(id);
        int start_cls = -1, end_cls = -1;
        for (int c = 0; c < 2; ++c)
            for (int b = 0; b < nv; ++b) {
                if (!adj[c][i * nv + b]) continue;
                if (comp[b] == start_comp) start_cls = (start_cls == -1 || start_cls == c) ? c : 2;
                if (comp[b] == end_comp) end_cls = (end_cls == -1 || end_cls == c) ? c : 2;
            }
        if (start_cls == 2 || end_cls == 2 || (start_cls >= 0 && start_cls == end_cls))
            throw std::logic_error("barrier vertex touched a component with both classes");
        if (start_cls == -1 && end_cls == -1) bm.b[id] = {0, 0};
        else if (start_cls == 0 || end_cls == 1) bm.b[id] = {0, 1};
        else bm.b[id] = {1, 0};
    }

    // grouping conditions on the original edges
    for (const auto& e : edges) {
        auto [u1, u2] = bm.b.at(e.u);
        auto [v1, v2] = bm.b.at(e.v);
        if (e.cls == 0 && u1 != v1) throw std::logic_error("class-1 edge crosses the first bit");
        if (e.cls == 1 && u2 != v2) throw std::logic_error("class-2 edge crosses the second bit");
    }
    return bm;
}

Certificate build_gP(int k, int cap) {
    if (k < 1) throw std::invalid_argument("level must be positive");
    if (k > cap) throw std::invalid_argument("level exceeds the pipeline cap");
    const int n = (1 << k) + 2;
    PathSpec pathP;
    pathP.n = n;
    for (int v = 1; v <= n - 2; ++v) pathP.verts.push_back(v);
    EdgePartition part = standard_partition(pathP);

    KvNetwork kv = build_kv_network(pathP);
    std::vector<int> wids;
    for (std::uint32_t mask : barrier_set(k, 2 * k + 1)) wids.push_back(int(mask));
    BMapping bm = build_barrier_mapping(kv.net, wids, part);

    std::map<std::uint32_t, Rat> targets;
    for (std::uint32_t v = 0; v < (1u << (n - 2)); ++v) {
        auto [b1, b2] = bm.b.at(int(v));
        targets[v] = Rat(b2 - b1);
    }
    CutFunction g = solve_dual_prescription(targets, n);

    Certificate cert;
    cert.part = std::move(part);
    cert.g = fourier_coeffs(g);
    cert.z = 1;
    cert.moment_floor = k;
    return cert;
}

Certificate build_partition_certificate(int k, std::uint32_t w1, std::uint32_t w2, int n) {
    if (k < 1) throw std::invalid_argument("level must be positive");
    const int m = n - 2;
    const int len = 1 << k;
    if (m < len) throw std::invalid_argument("not enough internal vertices for the path");
    const std::uint32_t everyone = (1u << n) - 1;
    if ((w1 & w2) != 0 || (w1 | w2) != everyone || !((w1 >> kSource) & 1u) ||
        !((w2 >> sink_of(n)) & 1u))
        throw std::invalid_argument("invalid vertex partition");

    // path: W1-side vertices first, then W2-side, so no edge runs W2 to W1
    std::vector<int> side1, side2;
    for (int v = 1; v <= m; ++v) ((w1 >> v) & 1u ? side1 : side2).push_back(v);
    PathSpec pathP;
    pathP.n = n;
    int take1 = std::min<int>(int(side1.size()), len);
    for (int i = 0; i < take1; ++i) pathP.verts.push_back(side1[i]);
    for (int i = 0; int(pathP.verts.size()) < len; ++i) pathP.verts.push_back(side2[i]);
    EdgePartition part = standard_partition(pathP);

    KvNetwork kv = build_kv_network(pathP, w1);
    std::vector<int> wids;
    for (std::uint32_t mask : barrier_set(k, std::min(2 * k + 1, len))) wids.push_back(int(mask));
    BMapping bm = build_barrier_mapping(kv.net, wids, part);

    auto translate = [&](std::uint32_t pos_mask) {
        std::uint32_t internal = 0;
        for (int i = 0; i < len; ++i)
            if ((pos_mask >> i) & 1u) internal |= 1u << (pathP.verts[i] - 1);
        return internal;
    };

    // assemble from the closed-form duals so the support stays local
    CutFunction g(n, 0);
    for (std::uint32_t v = 0; v < (1u << len); ++v) {
        auto [b1, b2] = bm.b.at(int(v));
        if (b1 == b2) continue;
        g += explicit_g(translate(v), w1, w2, n) * Rat(b2 - b1);
    }

    Certificate cert;
    cert.part = std::move(part);
    cert.g = fourier_coeffs(g);
    cert.z = 1;
    cert.moment_floor = k;
    return cert;
}

Certificate transport(const Certificate& cert, const PathSpec& target) {
    target.validate();
    const auto& src = cert.part.pathP;
    if (src.verts.size() != target.verts.size())
        throw std::invalid_argument("transport requires equal path lengths");

    auto map_vertex = [&](int v) {
        if (v == kSource) return kSource;
        if (v == sink_of(src.n)) return sink_of(target.n);
        auto it = std::find(src.verts.begin(), src.verts.end(), v);
        if (it == src.verts.end()) throw std::invalid_argument("vertex off the source path");
        return target.verts[it - src.verts.begin()];
    };

    Certificate out;
    out.part.pathP = target;
    for (const auto& e : cert.part.e1)
        out.part.e1.push_back({map_vertex(e.from), map_vertex(e.to)});
    for (const auto& e : cert.part.e2)
        out.part.e2.push_back({map_vertex(e.from), map_vertex(e.to)});
    out.part.validate();
    out.g.n = target.n;
    for (const auto& [set, c] : cert.g.coeffs) {
        std::uint32_t mapped = 0;
        for (int b = 0; b < src.n - 2; ++b)
            if ((set >> b) & 1u) mapped |= 1u << (map_vertex(b + 1) - 1);
        out.g.coeffs.emplace(mapped, c);
    }
    out.z = cert.z;
    out.moment_floor = cert.moment_floor;
    return out;
}

Rat certificate_dot(const Certificate& a, const Certificate& b) {
    if (a.g.n != b.g.n) throw std::invalid_argument("certificate dimension mismatch");
    Rat acc = 0;
    for (const auto& [set, c] : a.g.coeffs) acc += c * b.g.at(set);
    return acc;
}

namespace {

// all simple s'-t' paths over edges labeled by the certificate path
std::vector<Walk> sample_walks(const SwitchingNetwork& net, const EdgePartition& part,
                               std::size_t max_walks) {
    std::vector<Walk> out;
    std::vector<int> used(net.vertices.size(), 0);
    Walk cur;
    cur.verts.push_back(net.s_prime);
    used[net.index_of(net.s_prime)] = 1;
    std::function<void(int)> dfs = [&](int at) {
        if (out.size() >= max_walks) return;
        if (at == net.t_prime) {
            out.push_back(cur);
            return;
        }
        for (int ei = 0; ei < int(net.edges.size()); ++ei) {
            const auto& e = net.edges[ei];
            if (part.classify(e.label) < 0) continue;
            int other;
            if (e.u == at) other = e.v;
            else if (e.v == at) other = e.u;
            else continue;
            int oi = net.index_of(other);
            if (used[oi]) continue;
            used[oi] = 1;
            cur.verts.push_back(other);
            cur.edges.push_back(ei);
            dfs(other);
            cur.verts.pop_back();
            cur.edges.pop_back();
            used[oi] = 0;
        }
    };
    dfs(net.s_prime);
    return out;
}

}  // namespace

CertReport verify_certificate(
    const Certificate& cert,
    const std::vector<std::pair<SwitchingNetwork, std::map<int, StateOfKnowledge>>>& testnets,
    std::size_t max_walks) {
    CertReport rep;
    const CutFunction gd = from_spectrum(cert.g);

    rep.invariant = is_invariant_function(gd, cert.part);
    if (!rep.invariant) {
        rep.failure = "nonzero value on a non-invariant cut";
        return rep;
    }
    rep.moment_ok = true;
    for (const auto& [set, c] : cert.g.coeffs)
        if (std::popcount(set) <= cert.moment_floor && c != 0) rep.moment_ok = false;
    if (!rep.moment_ok) {
        rep.failure = "low-order coefficient is nonzero";
        return rep;
    }

    for (const auto& [net, states] : testnets) {
        if (net.n != cert.part.pathP.n) {
            rep.failure = "test network dimension mismatch";
            return rep;
        }
        for (const auto& walk : sample_walks(net, cert.part, max_walks)) {
            LabeledTrace tr = walk_trace(net, states, walk);
            if (dot(partition_flow(tr, cert.part), gd) != cert.z) {
                rep.failure = "walk flow does not pair to z";
                return rep;
            }
            ++rep.walks_checked;
            SubsetWalkGraph h = build_subset_walk_graph(net, states, walk, cert.part.pathP);
            for (const auto& ctr : subset_cycle_traces(h, net, walk)) {
                if (dot(partition_flow(ctr, cert.part), gd) != 0) {
                    rep.failure = "cycle flow does not vanish";
                    return rep;
                }
                ++rep.cycles_checked;
            }
        }
    }
    rep.pass = true;
    return rep;
}

}  // namespace swnet
