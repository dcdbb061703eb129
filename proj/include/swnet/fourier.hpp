#pragma once

#include <cstdint>
#include <map>

#include "swnet/graph.hpp"
#include "swnet/knowledge.hpp"
#include "swnet/rational.hpp"

namespace swnet {

// An exact-rational function on cut space, indexed by cut mask.
struct CutFunction {
    int n = 2;
    std::vector<Rat> values;  // length 2^(n-2)

    CutFunction() : values(1) {}
    CutFunction(int n_, Rat fill = 0);

    Rat& operator[](std::uint32_t cut_mask) { return values[cut_mask]; }
    const Rat& operator[](std::uint32_t cut_mask) const { return values[cut_mask]; }

    CutFunction& operator+=(const CutFunction& o);
    CutFunction& operator-=(const CutFunction& o);
    CutFunction& operator*=(const Rat& c);
    friend CutFunction operator+(CutFunction a, const CutFunction& b) { return a += b; }
    friend CutFunction operator-(CutFunction a, const CutFunction& b) { return a -= b; }
    friend CutFunction operator*(CutFunction a, const Rat& c) { return a *= c; }
    bool operator==(const CutFunction&) const = default;
};

// Sparse transform coefficients, keyed by internal-vertex subset mask.
// Zero coefficients are not stored.
struct FourierSpectrum {
    int n = 2;
    std::map<std::uint32_t, Rat> coeffs;

    Rat at(std::uint32_t set) const;
    bool operator==(const FourierSpectrum&) const = default;
};

// e_V(C) = (-1)^{|V and C|}; V is an internal-vertex mask.
CutFunction basis_e(std::uint32_t v_mask, int n);

// 2^{2-n} * sum over cuts of f(C)g(C).
Rat dot(const CutFunction& f, const CutFunction& g);

FourierSpectrum fourier_coeffs(const CutFunction& f);
CutFunction from_spectrum(const FourierSpectrum& s);

// Crossing indicator of a knowledge set: 1 on cuts some closure edge crosses,
// -1 elsewhere.
CutFunction ks_to_function(const KnowledgeSet& k, int n);

// 1 on cuts every member crosses, -1 elsewhere.
CutFunction sok_to_function(const StateOfKnowledge& j, int n);

// The knowledge set {s->v : v in I and W1} + {w->t : w in I and W2}.
// I is an internal-vertex mask; w1 is a full-vertex mask containing s.
// With w1 covering every internal vertex this is the plain K_V = {s->v : v in V}.
KnowledgeSet partition_knowledge(std::uint32_t i_mask, std::uint32_t w1, int n);

// Unique g with dot(g, K_V) = targets[V] for every internal subset V, found
// by a triangular solve over subsets in increasing-cardinality (mask
// tie-break) order; the matrix entry e_{V'} . K_V vanishes unless V' is a
// subset of V. Passing w1 solves against the partition knowledge sets.
CutFunction solve_dual_prescription(const std::map<std::uint32_t, Rat>& targets, int n,
                                    std::uint32_t w1 = 0);

// Closed-form dual of partition_knowledge: dot(explicit_g(I,..), K_{I'}) = [I = I'].
// w1 and w2 are full-vertex masks partitioning V(G) with s in w1, t in w2.
CutFunction explicit_g(std::uint32_t i_mask, std::uint32_t w1, std::uint32_t w2, int n);

}  // namespace swnet
