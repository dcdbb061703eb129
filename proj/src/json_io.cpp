#include "swnet/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace swnet {

namespace {

long long to_ll(const Int& x, const char* what) {
    if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
        throw std::runtime_error(std::string(what) + " does not fit in 64 bits");
    return static_cast<long long>(x);
}

std::string rat_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

[[noreturn]] void malformed(const std::string& what) {
    throw std::runtime_error("malformed input: " + what);
}

Json edge_list_to_json(const std::vector<Edge>& es) {
    Json arr = Json::array();
    for (const auto& e : es) arr.push_back(Json::array({e.from, e.to}));
    return arr;
}

std::vector<Edge> edge_list_from_json(const Json& j) {
    if (!j.is_array()) malformed("expected an edge array");
    std::vector<Edge> es;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer())
            malformed("edge entries must be [from, to] integer pairs");
        es.push_back({item[0].get<int>(), item[1].get<int>()});
    }
    return es;
}

}  // namespace

Json rat_to_json(const Rat& r) {
    return Json{{"num", to_ll(boost::multiprecision::numerator(r), "numerator")},
                {"den", to_ll(boost::multiprecision::denominator(r), "denominator")}};
}

Rat rat_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den") ||
        !j["num"].is_number_integer() || !j["den"].is_number_integer())
        malformed("rational must be {num, den}");
    long long den = j["den"].get<long long>();
    if (den == 0) malformed("zero denominator");
    return Rat(Int(j["num"].get<long long>()), Int(den));
}

Json digraph_to_json(const Digraph& g) {
    return Json{{"n", g.n}, {"edges", edge_list_to_json(g.edges)}};
}

Digraph digraph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges") || !j["n"].is_number_integer())
        malformed("digraph must be {n, edges}");
    return Digraph(j["n"].get<int>(), edge_list_from_json(j["edges"]));
}

Json network_to_json(const SwitchingNetwork& net) {
    Json edges = Json::array();
    for (const auto& e : net.edges)
        edges.push_back(Json{{"u", e.u},
                             {"v", e.v},
                             {"from", e.label.from},
                             {"to", e.label.to},
                             {"negated", e.negated}});
    return Json{{"n", net.n},
                {"s_prime", net.s_prime},
                {"t_prime", net.t_prime},
                {"vertices", net.vertices},
                {"edges", edges}};
}

SwitchingNetwork network_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("s_prime") || !j.contains("t_prime") ||
        !j.contains("vertices") || !j.contains("edges"))
        malformed("network must be {n, s_prime, t_prime, vertices, edges}");
    SwitchingNetwork net;
    if (!j["n"].is_number_integer()) malformed("n must be an integer");
    net.n = j["n"].get<int>();
    net.s_prime = j["s_prime"].get<int>();
    net.t_prime = j["t_prime"].get<int>();
    if (!j["vertices"].is_array()) malformed("vertices must be an array");
    for (const auto& v : j["vertices"]) {
        if (!v.is_number_integer()) malformed("vertex ids must be integers");
        net.vertices.push_back(v.get<int>());
    }
    if (!j["edges"].is_array()) malformed("edges must be an array");
    for (const auto& e : j["edges"]) {
        if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e.contains("from") ||
            !e.contains("to"))
            malformed("network edges must be {u, v, from, to, negated}");
        NetEdge ne;
        ne.u = e["u"].get<int>();
        ne.v = e["v"].get<int>();
        ne.label = {e["from"].get<int>(), e["to"].get<int>()};
        ne.negated = e.value("negated", false);
        net.edges.push_back(ne);
    }
    net.validate();
    return net;
}

Json labeling_to_json(const CKLabeling& lab, int n) {
    Json arr = Json::array();
    for (const auto& [id, k] : lab.labels) {
        Json entry{{"vertex", id}};
        if (k.is_complete()) entry["edges"] = "COMPLETE";
        else entry["edges"] = edge_list_to_json(k.edges());
        arr.push_back(std::move(entry));
    }
    return Json{{"n", n}, {"labels", arr}};
}

CKLabeling labeling_from_json(const Json& j, int n) {
    if (!j.is_object() || !j.contains("labels") || !j["labels"].is_array())
        malformed("labeling must be {labels}");
    CKLabeling lab;
    for (const auto& entry : j["labels"]) {
        if (!entry.is_object() || !entry.contains("vertex") || !entry.contains("edges"))
            malformed("labels must be {vertex, edges}");
        int id = entry["vertex"].get<int>();
        if (entry["edges"].is_string()) {
            if (entry["edges"].get<std::string>() != "COMPLETE")
                malformed("string edge value must be COMPLETE");
            lab.labels.emplace(id, KnowledgeSet::complete(n));
        } else {
            lab.labels.emplace(id,
                               KnowledgeSet::closure_of(n, edge_list_from_json(entry["edges"])));
        }
    }
    return lab;
}

Json spectrum_to_json(const FourierSpectrum& s) {
    Json coeffs = Json::array();
    for (const auto& [set, c] : s.coeffs) {
        Json entry{{"set", set}};
        entry["num"] = to_ll(boost::multiprecision::numerator(c), "numerator");
        entry["den"] = to_ll(boost::multiprecision::denominator(c), "denominator");
        coeffs.push_back(std::move(entry));
    }
    return Json{{"n", s.n}, {"coeffs", coeffs}};
}

FourierSpectrum spectrum_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("coeffs") || !j["coeffs"].is_array())
        malformed("spectrum must be {n, coeffs}");
    FourierSpectrum s;
    s.n = j["n"].get<int>();
    for (const auto& entry : j["coeffs"]) {
        if (!entry.is_object() || !entry.contains("set") || !entry.contains("num") ||
            !entry.contains("den"))
            malformed("coefficients must be {set, num, den}");
        long long den = entry["den"].get<long long>();
        if (den == 0) malformed("zero denominator");
        Rat c(Int(entry["num"].get<long long>()), Int(den));
        if (c != 0) s.coeffs.emplace(entry["set"].get<std::uint32_t>(), std::move(c));
    }
    return s;
}

Json certificate_to_json(const Certificate& cert) {
    return Json{{"k", cert.moment_floor},
                {"path", cert.part.pathP.verts},
                {"e1", edge_list_to_json(cert.part.e1)},
                {"e2", edge_list_to_json(cert.part.e2)},
                {"spectrum", spectrum_to_json(cert.g)},
                {"z", rat_to_json(cert.z)}};
}

Certificate certificate_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("path") || !j.contains("e1") ||
        !j.contains("e2") || !j.contains("spectrum") || !j.contains("z"))
        malformed("certificate must be {k, path, e1, e2, spectrum, z}");
    Certificate cert;
    cert.moment_floor = j["k"].get<int>();
    cert.g = spectrum_from_json(j["spectrum"]);
    cert.part.pathP.n = cert.g.n;
    if (!j["path"].is_array()) malformed("path must be an array");
    for (const auto& v : j["path"]) cert.part.pathP.verts.push_back(v.get<int>());
    cert.part.e1 = edge_list_from_json(j["e1"]);
    cert.part.e2 = edge_list_from_json(j["e2"]);
    cert.part.validate();
    cert.z = rat_from_json(j["z"]);
    return cert;
}

Json verification_to_json(const VerificationReport& rep) {
    Json out{{"solves", rep.solves}, {"inputs_checked", rep.inputs_checked}};
    if (rep.counterexample) {
        out["counterexample"] = digraph_to_json(*rep.counterexample);
        out["expected"] = rep.expected;
        out["actual"] = rep.actual;
    } else {
        out["counterexample"] = nullptr;
    }
    return out;
}

Json cert_report_to_json(const CertReport& rep) {
    return Json{{"pass", rep.pass},
                {"failure", rep.failure},
                {"invariant", rep.invariant},
                {"moment_ok", rep.moment_ok},
                {"walks_checked", rep.walks_checked},
                {"cycles_checked", rep.cycles_checked}};
}

namespace {

std::pair<long long, long long> m_fields(const BoundReport& rep) {
    if (!rep.exact) return {0, 0};  // sentinel: normalization irrational
    return {to_ll(boost::multiprecision::numerator(rep.m), "numerator"),
            to_ll(boost::multiprecision::denominator(rep.m), "denominator")};
}

}  // namespace

std::string bound_to_csv(const BoundReport& rep, const std::string& family,
                         unsigned long long seed) {
    auto [mn, md] = m_fields(rep);
    std::ostringstream os;
    os << "# seed=" << seed << "\n";
    os << "family,K,M_num,M_den,bound_floor,network,sum_abs_dot\n";
    auto prefix = [&]() {
        os << family << "," << rep.family_size << "," << mn << "," << md << ","
           << rep.bound_floor << ",";
    };
    if (rep.rows.empty()) {
        prefix();
        os << ",\n";
    }
    for (const auto& row : rep.rows) {
        prefix();
        os << row.network << "," << (row.computed ? rat_string(row.sum_abs_dot) : "") << "\n";
    }
    return os.str();
}

Json bound_to_json(const BoundReport& rep, const std::string& family) {
    auto [mn, md] = m_fields(rep);
    Json rows = Json::array();
    for (const auto& row : rep.rows) {
        Json r{{"network", row.network}};
        if (row.computed) {
            r["sum_abs_dot"] = rat_to_json(row.sum_abs_dot);
            r["meets"] = row.meets;
        } else {
            r["sum_abs_dot"] = nullptr;
        }
        rows.push_back(std::move(r));
    }
    return Json{{"family", family},
                {"K", rep.family_size},
                {"M_num", mn},
                {"M_den", md},
                {"M_sq", rat_to_json(rep.m_sq)},
                {"bound_floor", to_ll(rep.bound_floor, "bound floor")},
                {"rows", rows}};
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw std::runtime_error("malformed input: invalid JSON in " + path);
    return j;
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

}  // namespace swnet
