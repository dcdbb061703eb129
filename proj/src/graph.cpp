#include "swnet/graph.hpp"

#include <algorithm>

namespace swnet {

Digraph::Digraph(int n_, std::vector<Edge> edges_) : n(n_), edges(std::move(edges_)) {
    if (n < 2) throw std::invalid_argument("digraph needs at least 2 vertices");
    for (const auto& e : edges) {
        if (e.from == e.to) throw std::invalid_argument("self-loop in digraph");
        if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n)
            throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool Digraph::has_edge(const Edge& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

std::uint64_t Digraph::edge_mask() const {
    std::uint64_t m = 0;
    for (const auto& e : edges) m |= std::uint64_t{1} << pair_index(n, e.from, e.to);
    return m;
}

Digraph Digraph::from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && ((mask >> pair_index(n, u, v)) & 1u)) es.push_back({u, v});
    return Digraph(n, std::move(es));
}

std::vector<Edge> PathSpec::edges() const {
    validate();
    std::vector<Edge> es;
    int prev = kSource;
    for (int v : verts) {
        es.push_back({prev, v});
        prev = v;
    }
    es.push_back({prev, sink_of(n)});
    return es;
}

void PathSpec::validate() const {
    std::vector<int> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("path vertices must be distinct");
    for (int v : verts)
        if (v <= kSource || v >= sink_of(n))
            throw std::invalid_argument("path vertex must be internal");
}

std::vector<Cut> enumerate_cuts(int n) {
    if (n < 2) throw std::invalid_argument("invalid dimension: need n >= 2");
    int internal = n - 2;
    if (internal > 30) throw std::invalid_argument("too many cuts to enumerate");
    std::vector<Cut> cuts;
    cuts.reserve(std::size_t{1} << internal);
    for (std::uint32_t m = 0; m < (1u << internal); ++m) cuts.push_back(Cut{m});
    return cuts;
}

bool edge_crosses(const Edge& e, const Cut& c, int n) {
    return cut_contains(c, e.from, n) && !cut_contains(c, e.to, n);
}

bool has_st_path(const Digraph& g) {
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{kSource};
    seen[kSource] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (u == sink_of(g.n)) return true;
        for (const auto& e : g.edges)
            if (e.from == u && !seen[e.to]) {
                seen[e.to] = 1;
                stack.push_back(e.to);
            }
    }
    return false;
}

}  // namespace swnet
