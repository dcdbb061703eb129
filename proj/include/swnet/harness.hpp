#pragma once

#include <cstdint>
#include <vector>

#include "swnet/certificates.hpp"
#include "swnet/rational.hpp"

namespace swnet {

// A family of vertex-disjoint-enough paths sharing the same s and t.
struct PathFamily {
    int n = 0;
    std::vector<PathSpec> paths;
    int max_shared = 0;  // largest pairwise internal-vertex overlap
};

// One path per polynomial of degree at most k over Z_p (p prime, p >= 2^k):
// the path for f visits vertex p*(i-1) + f(i) + 1 at position i, so any two
// distinct paths share at most k internal vertices.
PathFamily polynomial_path_family(int p, int k);

// A family of (W1, W2) vertex partitions from a binary code of minimum
// Hamming distance d on m internal vertices (bit 0 -> W1, bit 1 -> W2;
// s joins W1, t joins W2). Greedy: all-zeros first, then candidates in
// descending value order kept when far enough from everything chosen.
struct PartitionFamily {
    int n = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> parts;
    int min_distance = 0;
};

PartitionFamily partition_code_family(int m, int d);

// Builds the full knowledge-set network for level k and reports whether the
// given barrier (as position masks) blocks every single-class walk.
bool verify_barrier(int k, const std::vector<std::uint32_t>& barrier, int cap = 2);

// Lower-bound report for an orthogonal certificate family: K certificates,
// M = min over the family of z / ||g||, and the floor of sqrt(K) * M, all
// exact. When some ||g|| is irrational, M is reported through m_sq only and
// the per-network sums are skipped.
struct BoundReport {
    std::size_t family_size = 0;  // K
    Rat m_sq = 0;                 // M^2
    Rat m = 0;                    // M itself, when exact
    bool exact = false;
    Int bound_floor = 0;  // floor(sqrt(K * M^2))

    struct Row {
        std::size_t network = 0;
        Rat sum_abs_dot = 0;  // sum over certificates and vertices of |J.g| / ||g||
        bool computed = false;
        bool meets = false;  // sum_abs_dot >= K * M
    };
    std::vector<Row> rows;
};

// Throws if any pair of certificates has a nonzero inner product. Each
// network comes with its states of knowledge (canonical or prescribed).
BoundReport lower_bound_estimate(
    const std::vector<Certificate>& certs,
    const std::vector<std::pair<SwitchingNetwork, std::map<int, StateOfKnowledge>>>& nets);

// Vertex counts of the divide-and-conquer networks against the classical
// ceiling N^(3(k+1)) at N = 2^k + 2.
struct SizeRow {
    int k = 0;
    int n_value = 0;
    std::size_t vertices = 0;
    Int ceiling = 0;
};

std::vector<SizeRow> savitch_size_table(int k_max, int cap = 2);

}  // namespace swnet
