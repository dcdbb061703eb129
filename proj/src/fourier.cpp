#include "swnet/fourier.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <tuple>

namespace swnet {

namespace {

std::size_t cut_count(int n) {
    if (n < 2) throw std::invalid_argument("invalid dimension: need n >= 2");
    if (n - 2 > 16) throw std::invalid_argument("cut space too large");
    return std::size_t{1} << (n - 2);
}

void check_internal_mask(std::uint32_t v_mask, int n) {
    if (n - 2 < 32 && (v_mask >> (n - 2)) != 0)
        throw std::invalid_argument("subset mask references s, t, or out-of-range vertices");
}

// in-place butterfly: out[C] = sum_V in[V] * (-1)^{|V and C|}
void hadamard(std::vector<Rat>& a) {
    for (std::size_t h = 1; h < a.size(); h <<= 1)
        for (std::size_t i = 0; i < a.size(); i += h << 1)
            for (std::size_t j = i; j < i + h; ++j) {
                Rat x = a[j], y = a[j + h];
                a[j] = x + y;
                a[j + h] = x - y;
            }
}

}  // namespace

CutFunction::CutFunction(int n_, Rat fill) : n(n_), values(cut_count(n_), std::move(fill)) {}

CutFunction& CutFunction::operator+=(const CutFunction& o) {
    if (n != o.n) throw std::invalid_argument("cut function dimension mismatch");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
    return *this;
}

CutFunction& CutFunction::operator-=(const CutFunction& o) {
    if (n != o.n) throw std::invalid_argument("cut function dimension mismatch");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
    return *this;
}

CutFunction& CutFunction::operator*=(const Rat& c) {
    for (auto& v : values) v *= c;
    return *this;
}

Rat FourierSpectrum::at(std::uint32_t set) const {
    auto it = coeffs.find(set);
    return it == coeffs.end() ? Rat(0) : it->second;
}

CutFunction basis_e(std::uint32_t v_mask, int n) {
    check_internal_mask(v_mask, n);
    CutFunction f(n);
    for (std::uint32_t c = 0; c < f.values.size(); ++c)
        f.values[c] = (std::popcount(c & v_mask) % 2 == 0) ? 1 : -1;
    return f;
}

Rat dot(const CutFunction& f, const CutFunction& g) {
    if (f.n != g.n) throw std::invalid_argument("cut function dimension mismatch");
    Rat acc = 0;
    for (std::size_t i = 0; i < f.values.size(); ++i) acc += f.values[i] * g.values[i];
    return acc / Rat(Int(f.values.size()));
}

FourierSpectrum fourier_coeffs(const CutFunction& f) {
    std::vector<Rat> a = f.values;
    hadamard(a);
    FourierSpectrum s;
    s.n = f.n;
    const Rat scale = Rat(1) / Rat(Int(a.size()));
    for (std::uint32_t v = 0; v < a.size(); ++v)
        if (a[v] != 0) s.coeffs.emplace(v, a[v] * scale);
    return s;
}

CutFunction from_spectrum(const FourierSpectrum& s) {
    CutFunction f(s.n, 0);
    std::vector<Rat> a(f.values.size(), Rat(0));
    for (const auto& [v, c] : s.coeffs) {
        check_internal_mask(v, s.n);
        a[v] = c;
    }
    hadamard(a);
    f.values = std::move(a);
    return f;
}

CutFunction ks_to_function(const KnowledgeSet& k, int n) {
    if (k.n() != n) throw std::invalid_argument("knowledge set dimension mismatch");
    CutFunction f(n);
    const auto es = k.edges();
    for (std::uint32_t c = 0; c < f.values.size(); ++c) {
        bool crossed = false;
        for (const auto& e : es)
            if (edge_crosses(e, Cut{c}, n)) {
                crossed = true;
                break;
            }
        f.values[c] = crossed ? 1 : -1;
    }
    return f;
}

CutFunction sok_to_function(const StateOfKnowledge& j, int n) {
    if (j.members().empty()) throw std::invalid_argument("empty state of knowledge");
    CutFunction f(n, 1);
    for (const auto& k : j.members()) {
        CutFunction kf = ks_to_function(k, n);
        for (std::size_t i = 0; i < f.values.size(); ++i)
            if (kf.values[i] < f.values[i]) f.values[i] = kf.values[i];
    }
    return f;
}

KnowledgeSet partition_knowledge(std::uint32_t i_mask, std::uint32_t w1, int n) {
    check_internal_mask(i_mask, n);
    std::vector<Edge> es;
    for (int v = 1; v < n - 1; ++v)
        if ((i_mask >> (v - 1)) & 1u) {
            if ((w1 >> v) & 1u) es.push_back({kSource, v});
            else es.push_back({v, sink_of(n)});
        }
    return KnowledgeSet::closure_of(n, es);
}

CutFunction solve_dual_prescription(const std::map<std::uint32_t, Rat>& targets, int n,
                                    std::uint32_t w1) {
    const std::uint32_t all = std::uint32_t(cut_count(n)) - 1;
    if (w1 == 0) w1 = ~(1u << sink_of(n));  // plain K_V case
    for (std::uint32_t v = 0; v <= all; ++v)
        if (!targets.count(v)) throw std::invalid_argument("missing target for a subset");

    // e_{V'} . K_V depends only on whether V' is empty, |V|, and the parity
    // of |V' and W1|; measure each class once by a direct dot product.
    std::map<std::tuple<bool, int, int>, Rat> entry;
    auto matrix = [&](std::uint32_t vp, std::uint32_t v) {
        int w1_parity = std::popcount(vp & (w1 >> 1) & all) % 2;
        auto key = std::make_tuple(vp == 0, std::popcount(v), w1_parity);
        auto it = entry.find(key);
        if (it == entry.end())
            it = entry.emplace(key, dot(basis_e(vp, n),
                                        ks_to_function(partition_knowledge(v, w1, n), n)))
                     .first;
        return it->second;
    };

    // increasing cardinality, mask tie-break
    std::vector<std::uint32_t> order;
    for (std::uint32_t v = 0; v <= all; ++v) order.push_back(v);
    std::stable_sort(order.begin(), order.end(),
                     [](std::uint32_t a, std::uint32_t b) {
                         return std::popcount(a) < std::popcount(b);
                     });

    FourierSpectrum spec;
    spec.n = n;
    std::vector<Rat> coef(all + 1, Rat(0));
    for (std::uint32_t v : order) {
        Rat rhs = targets.at(v);
        if (v != 0)
            for (std::uint32_t sub = (v - 1) & v;; sub = (sub - 1) & v) {
                rhs -= coef[sub] * matrix(sub, v);
                if (sub == 0) break;
            }
        Rat diag = matrix(v, v);
        coef[v] = rhs / diag;
        if (coef[v] != 0) spec.coeffs.emplace(v, coef[v]);
    }
    return from_spectrum(spec);
}

CutFunction explicit_g(std::uint32_t i_mask, std::uint32_t w1, std::uint32_t w2, int n) {
    check_internal_mask(i_mask, n);
    const std::uint32_t everyone = (n < 32) ? ((1u << n) - 1) : ~0u;
    if ((w1 & w2) != 0 || (w1 | w2) != everyone)
        throw std::invalid_argument("W1, W2 must partition the vertex set");
    if (!((w1 >> kSource) & 1u) || !((w2 >> sink_of(n)) & 1u))
        throw std::invalid_argument("s must lie in W1 and t in W2");

    const std::uint32_t all = std::uint32_t(cut_count(n)) - 1;
    const std::uint32_t w1_int = (w1 >> 1) & all;
    const std::uint32_t w2_int = (w2 >> 1) & all;
    const Rat big = Rat(Int(1) << (n >= 3 ? n - 3 : 0)) / (n >= 3 ? 1 : 2);

    CutFunction g(n, 0);
    if (i_mask == 0) {
        g.values[w1_int] -= big;
        g.values[w2_int] -= big;
        return g;
    }
    for (std::uint32_t c = 0; c <= all; ++c) {
        // vertices outside I must sit on their own side: W1 in C^c, W2 in C
        if ((w1_int & ~i_mask & c) != 0) continue;
        if ((w2_int & ~i_mask & ~c & all) != 0) continue;
        int sgn = 1 + std::popcount(i_mask & w1_int & ~c & all) +
                  std::popcount(i_mask & w2_int & c);
        g.values[c] = (sgn % 2 == 0) ? big : -big;
    }
    return g;
}

}  // namespace swnet
