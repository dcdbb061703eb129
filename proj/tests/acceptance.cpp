// Acceptance checks: one line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <bit>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "swnet/certificates.hpp"
#include "swnet/fourier.hpp"
#include "swnet/harness.hpp"
#include "swnet/knowledge.hpp"
#include "swnet/network.hpp"
#include "swnet/reduction.hpp"
#include "swnet/savitch.hpp"

using namespace swnet;

namespace {

int g_failures = 0;

void run(int idx, const char* name, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& ex) {
        note = std::string(" (") + ex.what() + ")";
    }
    std::printf("criterion %2d %-28s %s%s\n", idx, name, ok ? "PASS" : "FAIL", note.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

PathSpec straight(int n) {
    PathSpec p;
    p.n = n;
    for (int v = 1; v <= n - 2; ++v) p.verts.push_back(v);
    return p;
}

// All simple s'-t' walks over path-labeled edges, in edge-index order.
std::vector<Walk> path_walks(const SwitchingNetwork& net, const PathSpec& pathP,
                             std::size_t cap = 256) {
    const auto labels = pathP.edges();
    std::vector<Walk> out;
    std::vector<int> used(net.vertices.size(), 0);
    Walk cur;
    cur.verts.push_back(net.s_prime);
    used[net.index_of(net.s_prime)] = 1;
    std::function<void(int)> dfs = [&](int at) {
        if (out.size() >= cap) return;
        if (at == net.t_prime) {
            out.push_back(cur);
            return;
        }
        for (int ei = 0; ei < int(net.edges.size()); ++ei) {
            const auto& e = net.edges[ei];
            if (std::find(labels.begin(), labels.end(), e.label) == labels.end()) continue;
            int other = e.u == at ? e.v : (e.v == at ? e.u : -1);
            if (other < 0 || used[net.index_of(other)]) continue;
            used[net.index_of(other)] = 1;
            cur.verts.push_back(other);
            cur.edges.push_back(ei);
            dfs(other);
            cur.verts.pop_back();
            cur.edges.pop_back();
            used[net.index_of(other)] = 0;
        }
    };
    dfs(net.s_prime);
    return out;
}

bool savitch_solves() {
    for (int n : {3, 4}) {
        auto [net, lab] = build_savitch_network(n);
        if (!validate_certain_knowledge(net, lab)) return false;
        VerificationReport rep = verify_solves(net);
        if (!rep.solves) return false;
        if (rep.inputs_checked != (std::size_t{1} << (n * (n - 1)))) return false;
    }
    return true;
}

bool golden_expansions() {
    auto js = fourier_coeffs(sok_to_function(StateOfKnowledge({KnowledgeSet::empty(6)}), 6));
    if (js.coeffs.size() != 1 || js.at(0) != -1) return false;

    StateOfKnowledge jb({KnowledgeSet::closure_of(6, std::vector<Edge>{{0, 1}}),
                         KnowledgeSet::closure_of(6, std::vector<Edge>{{0, 2}})});
    auto sb = fourier_coeffs(sok_to_function(jb, 6));
    if (sb.coeffs.size() != 4 || sb.at(0) != Rat(-1, 2)) return false;
    for (std::uint32_t v = 1; v < 4; ++v)
        if (sb.at(v) != Rat(1, 2)) return false;

    StateOfKnowledge ja({KnowledgeSet::closure_of(6, std::vector<Edge>{{0, 1}}),
                         KnowledgeSet::closure_of(6, std::vector<Edge>{{0, 2}}),
                         KnowledgeSet::closure_of(6, std::vector<Edge>{{0, 3}})});
    auto sa = fourier_coeffs(sok_to_function(ja, 6));
    if (sa.coeffs.size() != 8 || sa.at(0) != Rat(-3, 4)) return false;
    for (std::uint32_t v = 1; v < 8; ++v)
        if (sa.at(v) != Rat(1, 4)) return false;

    auto jt = fourier_coeffs(sok_to_function(StateOfKnowledge({KnowledgeSet::complete(6)}), 6));
    return jt.coeffs.size() == 1 && jt.at(0) == 1;
}

bool spectrum_matches(const FourierSpectrum& s, const std::map<std::uint32_t, Rat>& want) {
    return s.coeffs == want;
}

bool warmup_flows() {
    // one internal vertex
    {
        SwitchingNetwork net = make_path_chain_network(straight(3));
        auto states = canonical_states(net);
        Walk w{{0, 1, 2}, {0, 1}};
        auto s = fourier_coeffs(partition_flow(walk_trace(net, states, w),
                                               standard_partition(straight(3))));
        if (!spectrum_matches(s, {{1, Rat(1)}})) return false;
    }
    // two internal vertices: the chain and every four-vertex network walk
    const std::map<std::uint32_t, Rat> want = {
        {0, Rat(1, 2)}, {1, Rat(1, 2)}, {2, Rat(-1, 2)}, {3, Rat(1, 2)}};
    {
        SwitchingNetwork net = make_path_chain_network(straight(4));
        auto states = canonical_states(net);
        Walk w{{0, 1, 2, 3}, {0, 1, 2}};
        auto s = fourier_coeffs(partition_flow(walk_trace(net, states, w),
                                               standard_partition(straight(4))));
        if (!spectrum_matches(s, want)) return false;
    }
    {
        auto [net, lab] = build_savitch_network(4);
        auto states = canonical_states(net);
        EdgePartition part = standard_partition(straight(4));
        auto walks = path_walks(net, straight(4));
        if (walks.empty()) return false;
        for (const auto& w : walks) {
            auto s = fourier_coeffs(partition_flow(walk_trace(net, states, w), part));
            if (!spectrum_matches(s, want)) return false;
        }
    }
    return true;
}

bool certificate_pipeline() {
    for (int k : {1, 2, 3}) {
        Certificate cert = build_gP(k);
        const int n = (1 << k) + 2;
        for (const auto& [set, c] : cert.g.coeffs)
            if (c != 0 && std::popcount(set) <= k) return false;
        if (!is_invariant_function(from_spectrum(cert.g), cert.part)) return false;

        std::vector<std::pair<SwitchingNetwork, std::map<int, StateOfKnowledge>>> nets;
        SwitchingNetwork chain = make_path_chain_network(straight(n));
        nets.emplace_back(chain, canonical_states(chain));
        if (k == 1) {
            auto [sav, lab] = build_savitch_network(4);
            nets.emplace_back(sav, canonical_states(sav));
        }
        if (k <= 2) {
            KvNetwork kv = build_kv_network(straight(n));
            nets.emplace_back(kv.net, kv.singleton_states());
        }
        CertReport rep = verify_certificate(cert, nets, k == 2 ? 64 : 256);
        if (!rep.pass || rep.walks_checked == 0) return false;
    }
    return true;
}

bool explicit_duality() {
    const std::vector<std::pair<int, std::uint32_t>> settings = {
        {4, 0b0011},  {4, 0b0001},   {5, 0b00111},  {5, 0b01011},  {5, 0b01111},
        {6, 0b000111}, {6, 0b010101}, {6, 0b011111}, {6, 0b000001},
    };
    for (auto [n, w1] : settings) {
        const std::uint32_t w2 = ~w1 & ((1u << n) - 1);
        const std::uint32_t subsets = 1u << (n - 2);
        for (std::uint32_t i = 0; i < subsets; ++i) {
            CutFunction gi = explicit_g(i, w1, w2, n);
            for (std::uint32_t ip = 0; ip < subsets; ++ip) {
                CutFunction kf = ks_to_function(partition_knowledge(ip, w1, n), n);
                if (dot(gi, kf) != (i == ip ? 1 : 0)) return false;
            }
        }
    }
    return true;
}

bool decomposition_identity() {
    auto [net, lab] = build_savitch_network(4);
    PathSpec p = straight(4);
    auto states = canonical_states(net);
    auto walks = path_walks(net, p);
    if (walks.empty()) return false;
    for (const auto& w : walks) {
        SubsetWalkGraph h = build_subset_walk_graph(net, states, w, p);
        LabeledTrace full = walk_trace(net, states, w);
        LabeledTrace core = subset_path_trace(h, net, w);
        auto loops = subset_cycle_traces(h, net, w);
        for (const auto& e : p.edges()) {
            CutFunction want = edge_contribution(full, e);
            CutFunction got = edge_contribution(core, e);
            for (const auto& l : loops) got += edge_contribution(l, e);
            if (!(want == got)) return false;
        }
    }
    return true;
}

bool barrier_checks() {
    if (!verify_barrier(1, barrier_set(1, 3))) return false;
    if (!verify_barrier(2, barrier_set(2, 5))) return false;
    if (verify_barrier(1, {})) return false;
    if (verify_barrier(2, {})) return false;
    return true;
}

bool bound_soundness() {
    PathFamily fam = polynomial_path_family(3, 1);
    Certificate base = build_gP(1);
    std::vector<Certificate> certs;
    for (const auto& path : fam.paths) certs.push_back(transport(base, path));

    std::vector<std::pair<SwitchingNetwork, std::map<int, StateOfKnowledge>>> nets;
    auto [sav, lab] = build_savitch_network(4);
    if (!verify_solves(sav).solves) return false;
    nets.emplace_back(sav, canonical_states(sav));

    BoundReport rep = lower_bound_estimate({base}, nets);
    for (std::size_t i = 0; i < nets.size(); ++i)
        if (rep.bound_floor > Int(nets[i].first.vertices.size())) return false;

    BoundReport fam_rep = lower_bound_estimate(certs, {});
    return fam_rep.family_size == 9 && fam_rep.exact && fam_rep.m == Rat(1, 2) &&
           fam_rep.bound_floor == 1;
}

bool orthogonality() {
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {5, 1}, {5, 2}}) {
        PathFamily fam = polynomial_path_family(p, k);
        Certificate base = build_gP(k);
        std::vector<Certificate> certs;
        for (const auto& path : fam.paths) certs.push_back(transport(base, path));
        for (std::size_t a = 0; a < certs.size(); ++a)
            for (std::size_t b = a + 1; b < certs.size(); ++b)
                if (certificate_dot(certs[a], certs[b]) != 0) return false;
    }
    PartitionFamily pf = partition_code_family(4, 3);
    std::vector<Certificate> pcs;
    for (const auto& [w1, w2] : pf.parts)
        pcs.push_back(build_partition_certificate(1, w1, w2, pf.n));
    if (pcs.size() < 2) return false;
    for (std::size_t a = 0; a < pcs.size(); ++a)
        for (std::size_t b = a + 1; b < pcs.size(); ++b)
            if (certificate_dot(pcs[a], pcs[b]) != 0) return false;
    return true;
}

bool size_growth() {
    auto rows = savitch_size_table(2);
    if (rows.size() != 3) return false;
    const std::size_t golden[] = {3, 9, 116};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].vertices != golden[i]) return false;
        if (Int(rows[i].vertices) > rows[i].ceiling) return false;
        if (rows[i].ceiling != pow(Int(rows[i].n_value), 3 * (rows[i].k + 1))) return false;
    }
    auto again = savitch_size_table(2);
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].vertices != again[i].vertices) return false;
    return true;
}

}  // namespace

int main() {
    run(1, "network correctness", savitch_solves);
    run(2, "golden expansions", golden_expansions);
    run(3, "warm-up flows", warmup_flows);
    run(4, "certificate pipeline", certificate_pipeline);
    run(5, "explicit duals", explicit_duality);
    run(6, "decomposition identity", decomposition_identity);
    run(7, "barrier verification", barrier_checks);
    run(8, "bound soundness", bound_soundness);
    run(9, "orthogonality", orthogonality);
    run(10, "size growth", size_growth);
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
