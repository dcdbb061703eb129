#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "swnet/fourier.hpp"
#include "swnet/graph.hpp"
#include "swnet/network.hpp"
#include "swnet/reduction.hpp"
#include "swnet/savitch.hpp"

namespace swnet {

// A path together with an exact two-coloring of its edges.
struct EdgePartition {
    PathSpec pathP;
    std::vector<Edge> e1, e2;

    // 0 for e1, 1 for e2, -1 for labels outside the path
    int classify(const Edge& e) const;
    void validate() const;
};

// E1 = the edges v_i -> v_{i+1} with i even (counting s as v_0), E2 = the rest.
EdgePartition standard_partition(const PathSpec& pathP);

bool is_invariant_cut(const Cut& c, const EdgePartition& part);
bool is_invariant_function(const CutFunction& g, const EdgePartition& part);

// A directed trace with a cut function attached to every vertex: network
// walks carry their states of knowledge, subset-walk paths and cycles carry
// single knowledge sets.
struct LabeledTrace {
    struct Step {
        int u = 0, v = 0;  // indices into fn
        Edge label;
    };
    std::vector<CutFunction> fn;
    std::vector<Step> steps;
};

LabeledTrace walk_trace(const SwitchingNetwork& net,
                        const std::map<int, StateOfKnowledge>& states, const Walk& walk);
LabeledTrace subset_path_trace(const SubsetWalkGraph& h, const SwitchingNetwork& net,
                               const Walk& walk);
std::vector<LabeledTrace> subset_cycle_traces(const SubsetWalkGraph& h,
                                              const SwitchingNetwork& net, const Walk& walk);

// d(trace, e): half the net change, over steps labeled e, of the attached
// functions (sinks minus sources, with multiplicity).
CutFunction edge_contribution(const LabeledTrace& tr, const Edge& e);

// f = sum over e1 of d minus sum over e2 of d.
CutFunction partition_flow(const LabeledTrace& tr, const EdgePartition& part);

// All position subsets of size k+1..cap of a path on 2^k internal vertices.
std::vector<std::uint32_t> barrier_set(int k, int cap);

// The certain-knowledge network over every K_V for V a subset of the path's
// internal vertices (vertex id = subset mask), plus a complete-knowledge t',
// with every valid edge labeled by a path edge. A nonzero w1 mask builds the
// partition variant of the knowledge sets.
struct KvNetwork {
    SwitchingNetwork net;
    std::vector<KnowledgeSet> ks;  // indexed by vertex id
    PathSpec pathP;

    CKLabeling labeling() const;
    std::map<int, StateOfKnowledge> singleton_states() const;
};

KvNetwork build_kv_network(const PathSpec& pathP, std::uint32_t w1 = 0);

// Vertex two-bit grouping: (0,0) at s', (1,1) at t', sides differing only on
// barrier vertices, and no class-i edge between vertices differing in bit i.
struct BMapping {
    std::map<int, std::pair<int, int>> b;
};

// Realizes the grouping from a verified barrier: minimize the barrier,
// saturate same-class adjacency, spread (0,0)/(1,1) from the endpoint
// components, and orient each surviving barrier vertex by the classes of its
// component contacts. Throws if the barrier does not block all walks or the
// result violates the grouping conditions.
BMapping build_barrier_mapping(const SwitchingNetwork& net, const std::vector<int>& barrier,
                               const EdgePartition& part);

// True if no s'-t' walk keeps a single edge class through every barrier
// visit (checked by reachability over vertex x entering-class states).
bool barrier_blocks(const SwitchingNetwork& net, const std::vector<int>& barrier,
                    const EdgePartition& part);

struct Certificate {
    EdgePartition part;
    FourierSpectrum g;
    Rat z = 1;
    int moment_floor = 0;
};

// The full pipeline at level k on n = 2^k + 2 vertices: standard partition,
// barrier, grouping, and the triangular solve with targets b2 - b1.
Certificate build_gP(int k, int cap = 3);

// The partition variant: path ordered W1-then-W2, grouping over the
// partition knowledge sets, and g assembled from the closed-form duals so
// its support stays near the W2 cut.
Certificate build_partition_certificate(int k, std::uint32_t w1, std::uint32_t w2, int n);

// Reinterpret the certificate over another path by mapping the i-th path
// vertex across; spectra are relabeled, the partition is rebuilt.
Certificate transport(const Certificate& cert, const PathSpec& target);

// Exact inner product via the coefficient expansion.
Rat certificate_dot(const Certificate& a, const Certificate& b);

struct CertReport {
    bool pass = false;
    std::string failure;
    bool invariant = false;
    bool moment_ok = false;
    std::size_t walks_checked = 0;
    std::size_t cycles_checked = 0;
};

// (a) invariance cut test, (b) flow dot = z on every sampled s'-t' walk of
// each test network restricted to path labels, (c) flow dot = 0 on the
// subset-walk cycles of those walks, (d) moment floor on the spectrum.
CertReport verify_certificate(
    const Certificate& cert,
    const std::vector<std::pair<SwitchingNetwork, std::map<int, StateOfKnowledge>>>& testnets,
    std::size_t max_walks = 256);

}  // namespace swnet
