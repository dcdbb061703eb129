#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace swnet {

// Vertex ids of the input graph are dense integers, s = 0 and t = n-1.
constexpr int kSource = 0;
inline int sink_of(int n) { return n - 1; }

// A directed edge of the input graph G.
struct Edge {
    int from = 0;
    int to = 0;
    auto operator<=>(const Edge&) const = default;
};

inline std::string to_string(const Edge& e) {
    return std::to_string(e.from) + "->" + std::to_string(e.to);
}

// Index of an ordered pair (u,v), u != v, in [0, n*(n-1)).
inline int pair_index(int n, int u, int v) {
    return u * (n - 1) + (v > u ? v - 1 : v);
}
inline int pair_count(int n) { return n * (n - 1); }

// The input digraph G on n vertices with s = 0, t = n-1.
struct Digraph {
    int n = 2;
    std::vector<Edge> edges;  // sorted, unique, no self-loops

    Digraph() = default;
    Digraph(int n_, std::vector<Edge> edges_);

    bool has_edge(const Edge& e) const;
    std::uint64_t edge_mask() const;  // bit pair_index(n,u,v) per edge
    static Digraph from_mask(int n, std::uint64_t mask);
};

// An s-t cut, stored as a bitmask over internal vertices 1..n-2.
// s is implicitly inside the cut, t implicitly outside.
struct Cut {
    std::uint32_t mask = 0;
};

inline bool cut_contains(const Cut& c, int v, int n) {
    if (v == kSource) return true;
    if (v == sink_of(n)) return false;
    return (c.mask >> (v - 1)) & 1u;
}

// A directed s->t path given by its internal vertices, in order.
struct PathSpec {
    int n = 2;
    std::vector<int> verts;  // distinct internal vertices, none equal to s or t

    std::vector<Edge> edges() const;  // s->v1, v1->v2, ..., vk->t
    void validate() const;
};

// All 2^(n-2) cuts, ascending mask order.
std::vector<Cut> enumerate_cuts(int n);

// True iff e goes from inside the cut to outside.
bool edge_crosses(const Edge& e, const Cut& c, int n);

// Brute-force reachability oracle: is there a directed s~>t path in g?
bool has_st_path(const Digraph& g);

}  // namespace swnet
