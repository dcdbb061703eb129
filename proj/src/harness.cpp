#include "swnet/harness.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "swnet/savitch.hpp"

namespace swnet {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Int int_pow(Int base, int exp) {
    Int r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

}  // namespace

PathFamily polynomial_path_family(int p, int k) {
    if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
    if (k < 0) throw std::invalid_argument("degree must be nonnegative");
    const int len = 1 << k;
    if (p < len) throw std::invalid_argument("modulus must be at least the path length");
    Int count = int_pow(p, k + 1);
    if (count > 4096) throw std::invalid_argument("family too large");

    PathFamily fam;
    fam.n = p * len + 2;
    std::vector<int> coef(k + 1, 0);
    const std::size_t total = std::size_t(count);
    for (std::size_t idx = 0; idx < total; ++idx) {
        PathSpec path;
        path.n = fam.n;
        for (int i = 1; i <= len; ++i) {
            long long val = 0, pw = 1;
            for (int j = 0; j <= k; ++j) {
                val = (val + coef[j] * pw) % p;
                pw = (pw * i) % p;
            }
            path.verts.push_back(p * (i - 1) + int(val) + 1);
        }
        path.validate();
        fam.paths.push_back(std::move(path));
        for (int j = 0; j <= k; ++j) {
            if (++coef[j] < p) break;
            coef[j] = 0;
        }
    }

    fam.max_shared = 0;
    for (std::size_t a = 0; a < fam.paths.size(); ++a)
        for (std::size_t b = a + 1; b < fam.paths.size(); ++b) {
            int shared = 0;
            for (int i = 0; i < len; ++i)
                if (fam.paths[a].verts[i] == fam.paths[b].verts[i]) ++shared;
            fam.max_shared = std::max(fam.max_shared, shared);
        }
    return fam;
}

PartitionFamily partition_code_family(int m, int d) {
    if (m < 1 || m > 16) throw std::invalid_argument("internal vertex count out of range");
    if (d < 1 || d > m) throw std::invalid_argument("invalid minimum distance");

    std::vector<std::uint32_t> words{0};
    for (std::uint32_t cand = (1u << m) - 1; cand >= 1; --cand) {
        bool ok = true;
        for (std::uint32_t w : words)
            if (std::popcount(cand ^ w) < d) {
                ok = false;
                break;
            }
        if (ok) words.push_back(cand);
    }
    std::sort(words.begin(), words.end());

    PartitionFamily fam;
    fam.n = m + 2;
    fam.min_distance = d;
    for (std::uint32_t w : words) {
        std::uint32_t w1 = 1u << kSource, w2 = 1u << sink_of(fam.n);
        for (int v = 1; v <= m; ++v) {
            if ((w >> (v - 1)) & 1u) w2 |= 1u << v;
            else w1 |= 1u << v;
        }
        fam.parts.emplace_back(w1, w2);
    }
    return fam;
}

bool verify_barrier(int k, const std::vector<std::uint32_t>& barrier, int cap) {
    if (k < 1) throw std::invalid_argument("level must be positive");
    if (k > cap) throw std::invalid_argument("level exceeds the barrier cap");
    const int n = (1 << k) + 2;
    PathSpec pathP;
    pathP.n = n;
    for (int v = 1; v <= n - 2; ++v) pathP.verts.push_back(v);
    EdgePartition part = standard_partition(pathP);
    KvNetwork kv = build_kv_network(pathP);
    std::vector<int> ids;
    for (std::uint32_t mask : barrier) {
        if (mask == 0 || mask >= (1u << (n - 2)))
            throw std::invalid_argument("barrier mask out of range");
        ids.push_back(int(mask));
    }
    return barrier_blocks(kv.net, ids, part);
}

BoundReport lower_bound_estimate(
    const std::vector<Certificate>& certs,
    const std::vector<std::pair<SwitchingNetwork, std::map<int, StateOfKnowledge>>>& nets) {
    if (certs.empty()) throw std::invalid_argument("empty certificate family");
    for (std::size_t a = 0; a < certs.size(); ++a)
        for (std::size_t b = a + 1; b < certs.size(); ++b)
            if (certificate_dot(certs[a], certs[b]) != 0)
                throw std::invalid_argument("non-orthogonal certificates");

    BoundReport rep;
    rep.family_size = certs.size();

    // ||g||^2 is the coefficient power sum; M_i = z_i / ||g_i||
    std::vector<Rat> norm_sq, inv_norm;
    std::vector<bool> inv_exact;
    for (const auto& c : certs) {
        Rat gg = 0;
        for (const auto& [set, v] : c.g.coeffs) gg += v * v;
        if (gg == 0) throw std::invalid_argument("certificate with zero norm");
        norm_sq.push_back(gg);
        Rat m_sq_i = (c.z * c.z) / gg;
        if (rep.m_sq == 0 || m_sq_i < rep.m_sq) rep.m_sq = m_sq_i;
        Rat inv;
        bool ok = exact_sqrt(Rat(1) / gg, inv);
        inv_exact.push_back(ok);
        inv_norm.push_back(ok ? inv : Rat(0));
    }
    rep.exact = exact_sqrt(rep.m_sq, rep.m);

    // floor(sqrt(a/b)) = floor(sqrt(a*b)) / b, exactly
    Rat total = Rat(Int(rep.family_size)) * rep.m_sq;
    Int a = boost::multiprecision::numerator(total);
    Int b = boost::multiprecision::denominator(total);
    Int ab = a * b;
    rep.bound_floor = boost::multiprecision::sqrt(ab) / b;

    const bool all_exact =
        rep.exact && std::all_of(inv_exact.begin(), inv_exact.end(), [](bool e) { return e; });
    for (std::size_t ni = 0; ni < nets.size(); ++ni) {
        const auto& [net, states] = nets[ni];
        BoundReport::Row row;
        row.network = ni;
        if (all_exact) {
            Rat sum = 0;
            for (std::size_t ci = 0; ci < certs.size(); ++ci) {
                if (certs[ci].g.n != net.n)
                    throw std::invalid_argument("network dimension mismatch");
                CutFunction gd = from_spectrum(certs[ci].g);
                for (int id : net.vertices) {
                    auto it = states.find(id);
                    if (it == states.end())
                        throw std::invalid_argument("network vertex has no state");
                    Rat d = dot(sok_to_function(it->second, net.n), gd);
                    sum += (d < 0 ? -d : d) * inv_norm[ci];
                }
            }
            row.sum_abs_dot = sum;
            row.computed = true;
            row.meets = sum >= Rat(Int(rep.family_size)) * rep.m;
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::vector<SizeRow> savitch_size_table(int k_max, int cap) {
    if (k_max < 0) throw std::invalid_argument("level must be nonnegative");
    if (k_max > cap) throw std::invalid_argument("level exceeds the table cap");
    std::vector<SizeRow> rows;
    for (int k = 0; k <= k_max; ++k) {
        SizeRow row;
        row.k = k;
        row.n_value = (1 << k) + 2;
        auto [net, lab] = build_savitch_network(row.n_value);
        row.vertices = net.vertices.size();
        row.ceiling = int_pow(Int(row.n_value), 3 * (k + 1));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace swnet
