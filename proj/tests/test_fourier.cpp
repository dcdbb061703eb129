#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <random>

#include "swnet/fourier.hpp"
#include "swnet/network.hpp"
#include "swnet/savitch.hpp"

using namespace swnet;

namespace {

KnowledgeSet make(int n, std::vector<Edge> es) { return KnowledgeSet::closure_of(n, es); }

CutFunction random_fn(int n, std::mt19937& rng) {
    CutFunction f(n, 0);
    std::uniform_int_distribution<int> num(-8, 8), den(1, 5);
    for (auto& v : f.values) v = Rat(num(rng), den(rng));
    return f;
}

// Independent oracle: dense Gaussian elimination over the full e-basis system.
CutFunction dense_solve(const std::map<std::uint32_t, Rat>& targets, int n) {
    const std::size_t dim = std::size_t{1} << (n - 2);
    std::vector<std::vector<Rat>> m(dim, std::vector<Rat>(dim + 1, 0));
    for (std::uint32_t v = 0; v < dim; ++v) {
        std::vector<Edge> es;
        for (int x = 1; x < n - 1; ++x)
            if ((v >> (x - 1)) & 1u) es.push_back({kSource, x});
        CutFunction kf = ks_to_function(KnowledgeSet::closure_of(n, es), n);
        for (std::uint32_t vp = 0; vp < dim; ++vp) m[v][vp] = dot(basis_e(vp, n), kf);
        m[v][dim] = targets.at(v);
    }
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t piv = col;
        while (piv < dim && m[piv][col] == 0) ++piv;
        REQUIRE(piv < dim);
        std::swap(m[col], m[piv]);
        for (std::size_t r = 0; r < dim; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col] / m[col][col];
            for (std::size_t c = col; c <= dim; ++c) m[r][c] -= f * m[col][c];
        }
    }
    FourierSpectrum s;
    s.n = n;
    for (std::uint32_t vp = 0; vp < dim; ++vp) {
        Rat a = m[vp][dim] / m[vp][vp];
        if (a != 0) s.coeffs.emplace(vp, a);
    }
    return from_spectrum(s);
}

}  // namespace

TEST_CASE("basis functions and the dot product") {
    CHECK(basis_e(0, 4).values == std::vector<Rat>{1, 1, 1, 1});
    CutFunction ea = basis_e(1, 4);
    CHECK(ea.values[0] == 1);   // C = {s}
    CHECK(ea.values[1] == -1);  // C = {s, a}
    CHECK(dot(basis_e(0, 4), basis_e(0, 4)) == 1);
    for (std::uint32_t v = 0; v < 8; ++v)
        for (std::uint32_t w = 0; w < 8; ++w)
            CHECK(dot(basis_e(v, 5), basis_e(w, 5)) == (v == w ? 1 : 0));
    CHECK_THROWS_AS(basis_e(1u << 3, 4), std::invalid_argument);
}

TEST_CASE("transform round-trip and Parseval") {
    std::mt19937 rng(5150);
    for (int n : {4, 5, 6}) {
        for (int trial = 0; trial < 20; ++trial) {
            CutFunction f = random_fn(n, rng);
            FourierSpectrum s = fourier_coeffs(f);
            CHECK(from_spectrum(s) == f);
            Rat power = 0;
            for (const auto& [set, c] : s.coeffs) power += c * c;
            CHECK(dot(f, f) == power);
        }
    }
}

TEST_CASE("knowledge indicator functions") {
    CHECK(ks_to_function(make(6, {{0, 5}}), 6) == basis_e(0, 6));
    CHECK(ks_to_function(KnowledgeSet::empty(6), 6) == basis_e(0, 6) * Rat(-1));
    CHECK(ks_to_function(make(6, {{0, 3}}), 6) == basis_e(4, 6));  // K = {s->c}
}

TEST_CASE("state expansions match the five-vertex figure") {
    // the four J's of the worked five-vertex example, embedded at n=6
    auto js = fourier_coeffs(sok_to_function(StateOfKnowledge({KnowledgeSet::empty(6)}), 6));
    REQUIRE(js.coeffs.size() == 1);
    CHECK(js.at(0) == -1);

    StateOfKnowledge jb({make(6, {{0, 1}}), make(6, {{0, 2}})});
    auto sb = fourier_coeffs(sok_to_function(jb, 6));
    REQUIRE(sb.coeffs.size() == 4);
    CHECK(sb.at(0) == Rat(-1, 2));
    CHECK(sb.at(1) == Rat(1, 2));
    CHECK(sb.at(2) == Rat(1, 2));
    CHECK(sb.at(3) == Rat(1, 2));

    StateOfKnowledge ja({make(6, {{0, 1}}), make(6, {{0, 2}}), make(6, {{0, 3}})});
    auto sa = fourier_coeffs(sok_to_function(ja, 6));
    REQUIRE(sa.coeffs.size() == 8);
    CHECK(sa.at(0) == Rat(-3, 4));
    for (std::uint32_t v = 1; v < 8; ++v) CHECK(sa.at(v) == Rat(1, 4));

    auto jt = fourier_coeffs(sok_to_function(StateOfKnowledge({KnowledgeSet::complete(6)}), 6));
    REQUIRE(jt.coeffs.size() == 1);
    CHECK(jt.at(0) == 1);
}

TEST_CASE("state indicators satisfy inclusion-exclusion over member unions") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> vtx(1, 3), count(1, 3);
    const int n = 5;
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<KnowledgeSet> members;
        for (int i = 0, c = count(rng); i < c; ++i) {
            std::vector<Edge> es;
            for (int j = 0, d = count(rng); j < d; ++j) {
                Edge e{vtx(rng), vtx(rng)};
                if (rng() % 2) e.from = kSource;
                if (e.from != e.to) es.push_back(e);
            }
            members.push_back(make(n, es));
        }
        StateOfKnowledge j(members);
        CutFunction lhs = sok_to_function(j, n) - ks_to_function(KnowledgeSet::empty(n), n);
        CutFunction rhs(n, 0);
        const auto& ms = j.members();
        for (std::uint32_t sel = 1; sel < (1u << ms.size()); ++sel) {
            KnowledgeSet u = KnowledgeSet::empty(n);
            for (std::size_t i = 0; i < ms.size(); ++i)
                if ((sel >> i) & 1u) u = u.unite(ms[i]);
            CutFunction term = ks_to_function(u, n) - ks_to_function(KnowledgeSet::empty(n), n);
            if (std::popcount(sel) % 2 == 0) rhs -= term;
            else rhs += term;
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("neighboring states agree off the label's crossing cuts") {
    std::vector<SwitchingNetwork> nets;
    {
        PathSpec p;
        p.n = 4;
        p.verts = {1, 2};
        nets.push_back(make_path_chain_network(p));
    }
    nets.push_back(build_savitch_network(4).first);
    for (const auto& net : nets) {
        auto states = canonical_states(net);
        for (const auto& e : net.edges) {
            CutFunction fu = sok_to_function(states.at(e.u), net.n);
            CutFunction fv = sok_to_function(states.at(e.v), net.n);
            for (const auto& c : enumerate_cuts(net.n))
                if (!edge_crosses(e.label, c, net.n))
                    CHECK(fu.values[c.mask] == fv.values[c.mask]);
        }
    }
}

TEST_CASE("dual prescriptions match an independent dense solve") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    const int n = 5;
    for (int trial = 0; trial < 15; ++trial) {
        std::map<std::uint32_t, Rat> targets;
        for (std::uint32_t v = 0; v < 8; ++v) targets[v] = Rat(num(rng), den(rng));
        CutFunction g = solve_dual_prescription(targets, n);
        CHECK(g == dense_solve(targets, n));
        // and the prescription round-trips
        for (std::uint32_t v = 0; v < 8; ++v) {
            std::vector<Edge> es;
            for (int x = 1; x < n - 1; ++x)
                if ((v >> (x - 1)) & 1u) es.push_back({kSource, x});
            CHECK(dot(g, ks_to_function(make(n, es), n)) == targets[v]);
        }
    }
}

TEST_CASE("dual prescription edge cases") {
    std::map<std::uint32_t, Rat> zero{{0, 0}, {1, 0}, {2, 0}, {3, 0}};
    CHECK(solve_dual_prescription(zero, 4) == CutFunction(4, 0));

    std::map<std::uint32_t, Rat> low{{0, 0}, {1, 0}, {2, 0}, {3, Rat(1)}};
    FourierSpectrum s = fourier_coeffs(solve_dual_prescription(low, 4));
    CHECK(s.at(0) == 0);
    CHECK(s.at(1) == 0);
    CHECK(s.at(2) == 0);
    CHECK(s.at(3) != 0);

    std::map<std::uint32_t, Rat> missing{{0, 1}};
    CHECK_THROWS_AS(solve_dual_prescription(missing, 4), std::invalid_argument);
}

TEST_CASE("the closed-form dual at a worked example") {
    // n=4, W1 = {s, a}, W2 = {b, t}, I = {a}
    CutFunction g = explicit_g(0b01, 0b0011, 0b1100, 4);
    CHECK(g.values == std::vector<Rat>{0, 0, 2, -2});
    CHECK(dot(g, ks_to_function(partition_knowledge(0b01, 0b0011, 4), 4)) == 1);
}

TEST_CASE("closed-form duals form an identity matrix") {
    // (n, W1) pairs; W2 is the complement
    const std::vector<std::pair<int, std::uint32_t>> settings = {
        {4, 0b0011}, {5, 0b00111}, {5, 0b01011}, {6, 0b000111}, {6, 0b010101},
        {4, 0b0001},  // degenerate: W1 = {s}, all knowledge points at t
        {5, 0b01111},  // degenerate: W2 = {t}, the standard K_V case
    };
    for (auto [n, w1] : settings) {
        const std::uint32_t w2 = ~w1 & ((1u << n) - 1);
        const std::uint32_t subsets = 1u << (n - 2);
        for (std::uint32_t i = 0; i < subsets; ++i) {
            CutFunction gi = explicit_g(i, w1, w2, n);
            for (std::uint32_t ip = 0; ip < subsets; ++ip) {
                CutFunction kf = ks_to_function(partition_knowledge(ip, w1, n), n);
                CHECK(dot(gi, kf) == (i == ip ? 1 : 0));
            }
        }
    }
}

TEST_CASE("closed-form assembly matches the triangular solve for the full lattice") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
    const int n = 5;
    const std::uint32_t w1 = 0b01111;  // everything but t
    const std::uint32_t w2 = 0b10000;
    for (int trial = 0; trial < 10; ++trial) {
        std::map<std::uint32_t, Rat> targets;
        for (std::uint32_t v = 0; v < 8; ++v) targets[v] = Rat(num(rng), den(rng));
        CutFunction direct = solve_dual_prescription(targets, n);
        CutFunction assembled(n, 0);
        for (std::uint32_t v = 0; v < 8; ++v)
            if (targets[v] != 0) assembled += explicit_g(v, w1, w2, n) * targets[v];
        CHECK(direct == assembled);
    }
}

TEST_CASE("invalid partitions are rejected") {
    CHECK_THROWS_AS(explicit_g(0, 0b0011, 0b1110, 4), std::invalid_argument);  // overlap
    CHECK_THROWS_AS(explicit_g(0, 0b0110, 0b1001, 4), std::invalid_argument);  // s in W2
    CHECK_THROWS_AS(explicit_g(0, 0b1011, 0b0100, 4), std::invalid_argument);  // t in W1
}
