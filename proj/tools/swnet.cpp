// Command-line front end: builds, verification, analysis, and reports.
// Exit codes: 0 success, 1 verification failure, 2 usage error or bad input.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "swnet/harness.hpp"
#include "swnet/json_io.hpp"

namespace {

using namespace swnet;

unsigned long long g_seed = 0;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) std::cout << text << "\n";
    else save_text(out_path, text + "\n");
}

void emit_json(Json j, const std::string& out_path) {
    j["seed"] = g_seed;
    emit(j.dump(2), out_path);
}

Json member_to_json(const KnowledgeSet& k) {
    if (k.is_complete()) return Json("COMPLETE");
    Json arr = Json::array();
    for (const auto& e : k.edges()) arr.push_back(Json::array({e.from, e.to}));
    return arr;
}

Json states_to_json(const SwitchingNetwork& net, const std::map<int, StateOfKnowledge>& states) {
    Json arr = Json::array();
    for (const auto& [id, sok] : states) {
        Json members = Json::array();
        for (const auto& k : sok.members()) members.push_back(member_to_json(k));
        arr.push_back(Json{{"vertex", id}, {"members", members}});
    }
    return Json{{"n", net.n}, {"states", arr}};
}

std::vector<std::pair<SwitchingNetwork, std::map<int, StateOfKnowledge>>> load_testnets(
    const std::vector<std::string>& paths) {
    std::vector<std::pair<SwitchingNetwork, std::map<int, StateOfKnowledge>>> nets;
    for (const auto& p : paths) {
        SwitchingNetwork net = network_from_json(load_json(p));
        auto states = canonical_states(net);
        nets.emplace_back(std::move(net), std::move(states));
    }
    return nets;
}

PathSpec straight_path(int n) {
    PathSpec path;
    path.n = n;
    for (int v = 1; v <= n - 2; ++v) path.verts.push_back(v);
    return path;
}

int cmd_build_savitch(int n, int cap, const std::string& out, const std::string& labels_out) {
    auto [net, lab] = build_savitch_network(n, cap);
    emit_json(network_to_json(net), out);
    if (!labels_out.empty()) {
        Json j = labeling_to_json(lab, net.n);
        j["seed"] = g_seed;
        emit(j.dump(2), labels_out);
    }
    return 0;
}

int cmd_verify_network(const std::string& in, int max_n, int threads, const std::string& out) {
    SwitchingNetwork net = network_from_json(load_json(in));
    VerificationReport rep = verify_solves(net, max_n, threads);
    emit_json(verification_to_json(rep), out);
    return rep.solves ? 0 : 1;
}

int cmd_states(const std::string& in, int max_alphabet, const std::string& out) {
    SwitchingNetwork net = network_from_json(load_json(in));
    StateCaps caps;
    caps.max_alphabet = max_alphabet;
    emit_json(states_to_json(net, canonical_states(net, caps)), out);
    return 0;
}

int cmd_analyze_fourier(const std::string& in, int max_alphabet, const std::string& out) {
    SwitchingNetwork net = network_from_json(load_json(in));
    StateCaps caps;
    caps.max_alphabet = max_alphabet;
    auto states = canonical_states(net, caps);
    Json arr = Json::array();
    for (const auto& [id, sok] : states) {
        FourierSpectrum spec = fourier_coeffs(sok_to_function(sok, net.n));
        arr.push_back(Json{{"vertex", id}, {"spectrum", spectrum_to_json(spec)}});
    }
    emit_json(Json{{"n", net.n}, {"vertices", arr}}, out);
    return 0;
}

int cmd_make_certificate(int k, int cap, const std::string& out) {
    Certificate cert = build_gP(k, cap);
    emit_json(certificate_to_json(cert), out);
    return 0;
}

int cmd_check_certificate(const std::string& in, const std::vector<std::string>& against,
                          std::size_t max_walks, const std::string& out) {
    Certificate cert = certificate_from_json(load_json(in));
    auto nets = load_testnets(against);
    if (nets.empty()) {
        SwitchingNetwork chain = make_path_chain_network(cert.part.pathP);
        auto states = canonical_states(chain);
        nets.emplace_back(std::move(chain), std::move(states));
    }
    CertReport rep = verify_certificate(cert, nets, max_walks);
    emit_json(cert_report_to_json(rep), out);
    return rep.pass ? 0 : 1;
}

int cmd_barrier_check(int k, int cap, std::vector<std::uint32_t> masks, bool defaults,
                      const std::string& out) {
    if (defaults) masks = barrier_set(k, 2 * k + 1);
    bool blocked = verify_barrier(k, masks, cap);
    Json j{{"k", k},
           {"barrier", masks},
           {"blocks", blocked},
           {"note", blocked ? "verified" : "inconclusive-for-paths"}};
    emit_json(std::move(j), out);
    return blocked ? 0 : 1;
}

int cmd_bound(int k, int p, int cap, const std::vector<std::string>& against,
              const std::string& format, const std::string& out) {
    PathFamily fam = polynomial_path_family(p, k);
    Certificate base = build_gP(k, cap);
    std::vector<Certificate> certs;
    for (const auto& path : fam.paths) certs.push_back(transport(base, path));
    BoundReport rep = lower_bound_estimate(certs, load_testnets(against));
    std::string family = "poly-p" + std::to_string(p) + "-k" + std::to_string(k);
    if (format == "csv") emit(bound_to_csv(rep, family, g_seed), out);
    else emit_json(bound_to_json(rep, family), out);
    return 0;
}

int cmd_size_table(int k_max, int cap, const std::string& format, const std::string& out) {
    auto rows = savitch_size_table(k_max, cap);
    if (format == "csv") {
        std::string text = "# seed=" + std::to_string(g_seed) + "\nk,N,vertices,ceiling\n";
        for (const auto& r : rows)
            text += std::to_string(r.k) + "," + std::to_string(r.n_value) + "," +
                    std::to_string(r.vertices) + "," + r.ceiling.str() + "\n";
        emit(text, out);
    } else {
        Json arr = Json::array();
        for (const auto& r : rows)
            arr.push_back(Json{{"k", r.k},
                               {"N", r.n_value},
                               {"vertices", r.vertices},
                               {"ceiling", r.ceiling.str()}});
        emit_json(Json{{"rows", arr}}, out);
    }
    return 0;
}

int cmd_export_dot(const std::string& in, const std::string& out) {
    SwitchingNetwork net = network_from_json(load_json(in));
    emit("// seed=" + std::to_string(g_seed) + "\n" + export_dot(net), out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monotone switching-network toolkit"};
    app.require_subcommand(1);
    app.add_option("--seed", g_seed, "Seed recorded in all outputs")->capture_default_str();

    std::string in, out, labels_out, format = "json";
    std::vector<std::string> against;
    int n = 3, k = 1, max_n = 5, threads = 0, savitch_cap = 6, pipeline_cap = 3;
    int barrier_cap = 2, table_cap = 2, max_alphabet = 18, p = 3, k_max = 2;
    std::size_t max_walks = 256;
    std::vector<std::uint32_t> masks;

    auto* bs = app.add_subcommand("build-savitch", "Build the divide-and-conquer network");
    bs->add_option("--n", n, "Input graph size")->required();
    bs->add_option("--cap", savitch_cap, "Largest allowed n")->capture_default_str();
    bs->add_option("-o,--output", out, "Network output path");
    bs->add_option("--labels", labels_out, "Knowledge labeling output path");

    auto* vn = app.add_subcommand("verify-network", "Exhaustively check a network");
    vn->add_option("network", in, "Network JSON path")->required();
    vn->add_option("--max-n", max_n, "Largest n checked exhaustively")->capture_default_str();
    vn->add_option("--threads", threads, "Worker bound (0 = SWNET_THREADS or hardware)");
    vn->add_option("-o,--output", out, "Report output path");

    auto* st = app.add_subcommand("states", "Canonical states of knowledge");
    st->add_option("network", in, "Network JSON path")->required();
    st->add_option("--max-alphabet", max_alphabet, "Label alphabet cap")->capture_default_str();
    st->add_option("-o,--output", out, "Output path");

    auto* af = app.add_subcommand("analyze-fourier", "Spectra of the canonical states");
    af->add_option("network", in, "Network JSON path")->required();
    af->add_option("--max-alphabet", max_alphabet, "Label alphabet cap")->capture_default_str();
    af->add_option("-o,--output", out, "Output path");

    auto* mc = app.add_subcommand("make-certificate", "Run the certificate pipeline");
    mc->add_option("--k", k, "Level")->required();
    mc->add_option("--cap", pipeline_cap, "Largest allowed level")->capture_default_str();
    mc->add_option("-o,--output", out, "Certificate output path");

    auto* cc = app.add_subcommand("check-certificate", "Re-verify a certificate");
    cc->add_option("certificate", in, "Certificate JSON path")->required();
    cc->add_option("--against", against, "Test network JSON paths");
    cc->add_option("--max-walks", max_walks, "Walk sample cap")->capture_default_str();
    cc->add_option("-o,--output", out, "Report output path");

    auto* bc = app.add_subcommand("barrier-check", "Verify a barrier by product reachability");
    bc->add_option("--k", k, "Level")->required();
    bc->add_option("--cap", barrier_cap, "Largest allowed level")->capture_default_str();
    auto* bm = bc->add_option("--barrier", masks, "Barrier as position masks");
    bc->add_option("-o,--output", out, "Report output path");

    auto* bd = app.add_subcommand("bound", "Lower-bound report for a path family");
    bd->add_option("--k", k, "Level")->required();
    bd->add_option("--p", p, "Prime modulus")->capture_default_str();
    bd->add_option("--cap", pipeline_cap, "Largest allowed level")->capture_default_str();
    bd->add_option("--against", against, "Networks to evaluate");
    bd->add_option("--format", format, "json or csv")->capture_default_str();
    bd->add_option("-o,--output", out, "Report output path");

    auto* sz = app.add_subcommand("size-table", "Network sizes against the classical ceiling");
    sz->add_option("--k-max", k_max, "Largest level")->capture_default_str();
    sz->add_option("--cap", table_cap, "Largest allowed level")->capture_default_str();
    sz->add_option("--format", format, "json or csv")->capture_default_str();
    sz->add_option("-o,--output", out, "Report output path");

    auto* xd = app.add_subcommand("export-dot", "Render a network as DOT");
    xd->add_option("network", in, "Network JSON path")->required();
    xd->add_option("-o,--output", out, "DOT output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (bs->parsed()) return cmd_build_savitch(n, savitch_cap, out, labels_out);
        if (vn->parsed()) return cmd_verify_network(in, max_n, threads, out);
        if (st->parsed()) return cmd_states(in, max_alphabet, out);
        if (af->parsed()) return cmd_analyze_fourier(in, max_alphabet, out);
        if (mc->parsed()) return cmd_make_certificate(k, pipeline_cap, out);
        if (cc->parsed()) return cmd_check_certificate(in, against, max_walks, out);
        if (bc->parsed()) return cmd_barrier_check(k, barrier_cap, masks, bm->count() == 0, out);
        if (bd->parsed()) return cmd_bound(k, p, pipeline_cap, against, format, out);
        if (sz->parsed()) return cmd_size_table(k_max, table_cap, format, out);
        if (xd->parsed()) return cmd_export_dot(in, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
