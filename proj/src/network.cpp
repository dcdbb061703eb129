#include "swnet/network.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace swnet {

bool SwitchingNetwork::is_monotone() const {
    return std::none_of(edges.begin(), edges.end(),
                        [](const NetEdge& e) { return e.negated; });
}

int SwitchingNetwork::index_of(int id) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), id);
    if (it == vertices.end() || *it != id)
        throw std::invalid_argument("unknown network vertex id");
    return int(it - vertices.begin());
}

void SwitchingNetwork::validate() const {
    if (n < 2) throw std::invalid_argument("network input dimension must be >= 2");
    if (!std::is_sorted(vertices.begin(), vertices.end()) ||
        std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw std::invalid_argument("network vertex ids must be sorted and distinct");
    index_of(s_prime);
    index_of(t_prime);
    if (s_prime == t_prime) throw std::invalid_argument("s' and t' must differ");
    for (const auto& e : edges) {
        index_of(e.u);
        index_of(e.v);
        if (e.u == e.v) throw std::invalid_argument("network self-loop");
        if (e.label.from == e.label.to || e.label.from < 0 || e.label.from >= n ||
            e.label.to < 0 || e.label.to >= n)
            throw std::invalid_argument("network edge label out of range");
    }
}

bool evaluate(const SwitchingNetwork& net, const Digraph& g) {
    if (g.n != net.n) throw std::invalid_argument("input dimension mismatch");
    const int m = int(net.vertices.size());
    std::vector<char> seen(m, 0);
    std::vector<int> stack{net.index_of(net.s_prime)};
    seen[stack[0]] = 1;
    const int target = net.index_of(net.t_prime);

    // Adjacency once per call; callers doing bulk evaluation use the mask path.
    std::vector<std::vector<std::pair<int, int>>> adj(m);  // (edge idx, other endpoint)
    for (int i = 0; i < int(net.edges.size()); ++i) {
        const auto& e = net.edges[i];
        int ui = net.index_of(e.u), vi = net.index_of(e.v);
        adj[ui].push_back({i, vi});
        adj[vi].push_back({i, ui});
    }
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (u == target) return true;
        for (auto [ei, w] : adj[u]) {
            if (seen[w]) continue;
            const auto& e = net.edges[ei];
            if (g.has_edge(e.label) != e.negated) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return false;
}

namespace {

struct FlatNet {
    int m = 0;
    int source = 0;
    int target = 0;
    // per network edge: endpoints (as indices) and the label's pair bit
    struct FE {
        int a, b, bit;
        bool negated;
    };
    std::vector<FE> fes;
};

FlatNet flatten(const SwitchingNetwork& net) {
    FlatNet f;
    f.m = int(net.vertices.size());
    f.source = net.index_of(net.s_prime);
    f.target = net.index_of(net.t_prime);
    for (const auto& e : net.edges)
        f.fes.push_back({net.index_of(e.u), net.index_of(e.v),
                         pair_index(net.n, e.label.from, e.label.to), e.negated});
    return f;
}

bool eval_mask(const FlatNet& f, std::uint64_t mask, std::vector<char>& seen,
               std::vector<int>& stack) {
    std::fill(seen.begin(), seen.end(), 0);
    stack.clear();
    stack.push_back(f.source);
    seen[f.source] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& fe : f.fes) {
            bool live = (((mask >> fe.bit) & 1u) != 0) != fe.negated;
            if (!live) continue;
            if (seen[fe.a] != seen[fe.b]) {
                seen[fe.a] = seen[fe.b] = 1;
                grew = true;
            }
        }
    }
    return seen[f.target];
}

bool st_path_mask(int n, std::uint64_t mask, std::vector<std::uint32_t>& rows) {
    rows.assign(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && ((mask >> pair_index(n, u, v)) & 1u)) rows[u] |= 1u << v;
    std::uint32_t reach = 1u << kSource;
    bool grew = true;
    while (grew) {
        grew = false;
        std::uint32_t next = reach;
        for (int u = 0; u < n; ++u)
            if ((reach >> u) & 1u) next |= rows[u];
        if (next != reach) {
            reach = next;
            grew = true;
        }
    }
    return (reach >> sink_of(n)) & 1u;
}

int worker_count(int threads) {
    if (threads > 0) return threads;
    if (const char* env = std::getenv("SWNET_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

}  // namespace

VerificationReport verify_solves(const SwitchingNetwork& net, int max_n, int threads) {
    net.validate();
    if (net.n > max_n)
        throw std::invalid_argument("input dimension exceeds exhaustive verification cap");
    const FlatNet flat = flatten(net);
    const int bits = pair_count(net.n);
    const std::uint64_t total = std::uint64_t{1} << bits;

    const int workers = std::min<int>(worker_count(threads), 64);
    std::atomic<std::uint64_t> bad{total};  // first failing mask, or total
    std::atomic<std::uint64_t> checked{0};

    auto run = [&](int w) {
        std::vector<char> seen(flat.m, 0);
        std::vector<int> stack;
        std::vector<std::uint32_t> rows;
        std::uint64_t local = 0;
        for (std::uint64_t mask = w; mask < total; mask += workers) {
            if (mask > bad.load(std::memory_order_relaxed)) break;
            ++local;
            bool want = st_path_mask(net.n, mask, rows);
            bool got = eval_mask(flat, mask, seen, stack);
            if (want != got) {
                std::uint64_t cur = bad.load();
                while (mask < cur && !bad.compare_exchange_weak(cur, mask)) {
                }
                break;
            }
        }
        checked += local;
    };
    if (workers <= 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    VerificationReport rep;
    rep.inputs_checked = checked.load();
    std::uint64_t fail = bad.load();
    if (fail == total) {
        rep.solves = true;
        rep.inputs_checked = total;
    } else {
        rep.solves = false;
        rep.counterexample = Digraph::from_mask(net.n, fail);
        rep.expected = has_st_path(*rep.counterexample);
        rep.actual = evaluate(net, *rep.counterexample);
    }
    return rep;
}

std::map<int, StateOfKnowledge> canonical_states(const SwitchingNetwork& net,
                                                 const StateCaps& caps) {
    net.validate();
    if (!net.is_monotone())
        throw std::invalid_argument("canonical states require a monotone network");

    std::vector<Edge> alphabet;
    for (const auto& e : net.edges) alphabet.push_back(e.label);
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    const int a = int(alphabet.size());
    if (a > caps.max_alphabet)
        throw std::invalid_argument("label alphabet too large for state enumeration");

    const int m = int(net.vertices.size());
    std::vector<std::vector<std::pair<int, int>>> adj(m);  // (label idx in alphabet, other)
    for (const auto& e : net.edges) {
        int li = int(std::lower_bound(alphabet.begin(), alphabet.end(), e.label) -
                     alphabet.begin());
        adj[net.index_of(e.u)].push_back({li, net.index_of(e.v)});
        adj[net.index_of(e.v)].push_back({li, net.index_of(e.u)});
    }

    // For each label subset, which vertices are reachable from s'?
    std::vector<std::vector<KnowledgeSet>> candidates(m);
    std::vector<char> seen(m);
    std::vector<int> stack;
    for (std::uint32_t sub = 0; sub < (1u << a); ++sub) {
        std::fill(seen.begin(), seen.end(), 0);
        stack.assign({net.index_of(net.s_prime)});
        seen[stack[0]] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [li, w] : adj[u])
                if (((sub >> li) & 1u) && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::vector<Edge> es;
        for (int li = 0; li < a; ++li)
            if ((sub >> li) & 1u) es.push_back(alphabet[li]);
        KnowledgeSet k = KnowledgeSet::closure_of(net.n, es);
        for (int i = 0; i < m; ++i)
            if (seen[i]) candidates[i].push_back(k);
    }

    std::map<int, StateOfKnowledge> out;
    for (int i = 0; i < m; ++i)
        if (!candidates[i].empty())
            out.emplace(net.vertices[i], StateOfKnowledge(std::move(candidates[i])));
    return out;
}

SwitchingNetwork chain_transform(const SwitchingNetwork& net,
                                 std::optional<std::pair<std::uint32_t, std::uint32_t>>
                                     partition) {
    net.validate();
    SwitchingNetwork base = net;
    if (partition) {
        auto [w1, w2] = *partition;
        std::vector<NetEdge> replaced;
        for (const auto& e : base.edges) {
            bool crossing_back = ((w2 >> e.label.from) & 1u) && ((w1 >> e.label.to) & 1u);
            if (crossing_back && !e.negated) {
                NetEdge lo = e, hi = e;
                lo.label = {kSource, e.label.to};
                hi.label = {e.label.from, sink_of(net.n)};
                replaced.push_back(lo);
                replaced.push_back(hi);
            } else {
                replaced.push_back(e);
            }
        }
        base.edges = std::move(replaced);
    }

    const int copies = net.n;
    const int stride = int(base.vertices.size());
    SwitchingNetwork out;
    out.n = net.n;
    // copy c maps vertex index i to id c*stride + i; the t' of copy c is
    // merged into the s' of copy c+1 (the later copy's vertex survives)
    const int si = base.index_of(base.s_prime);
    const int ti = base.index_of(base.t_prime);
    auto remap = [&](int c, int idx) {
        if (idx == ti && c + 1 < copies) return (c + 1) * stride + si;
        return c * stride + idx;
    };
    std::set<int> ids;
    for (int c = 0; c < copies; ++c)
        for (int i = 0; i < stride; ++i) ids.insert(remap(c, i));
    out.vertices.assign(ids.begin(), ids.end());
    out.s_prime = remap(0, si);
    out.t_prime = remap(copies - 1, ti);
    for (int c = 0; c < copies; ++c)
        for (const auto& e : base.edges) {
            NetEdge ne = e;
            ne.u = remap(c, base.index_of(e.u));
            ne.v = remap(c, base.index_of(e.v));
            out.edges.push_back(ne);
        }
    out.validate();
    return out;
}

std::string export_dot(const SwitchingNetwork& net) {
    net.validate();
    std::ostringstream os;
    os << "graph switching_network {\n";
    for (int id : net.vertices) {
        os << "  n" << id;
        if (id == net.s_prime)
            os << " [label=\"s'\", shape=doublecircle]";
        else if (id == net.t_prime)
            os << " [label=\"t'\", shape=doublecircle]";
        else
            os << " [label=\"" << id << "\"]";
        os << ";\n";
    }
    std::vector<NetEdge> sorted = net.edges;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& e : sorted) {
        os << "  n" << e.u << " -- n" << e.v << " [label=\"";
        if (e.negated) os << "!(" << to_string(e.label) << ")";
        else os << to_string(e.label);
        os << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

SwitchingNetwork make_path_chain_network(const PathSpec& path) {
    path.validate();
    SwitchingNetwork net;
    net.n = path.n;
    const auto es = path.edges();
    const int m = int(es.size()) + 1;
    net.vertices.resize(m);
    for (int i = 0; i < m; ++i) net.vertices[i] = i;
    net.s_prime = 0;
    net.t_prime = m - 1;
    for (int i = 0; i < int(es.size()); ++i)
        net.edges.push_back({i, i + 1, es[i], false});
    net.validate();
    return net;
}

}  // namespace swnet
