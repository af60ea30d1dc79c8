#include "orient/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>
#include <omp.h>

#include "orient/graph6.hpp"

namespace orient {

namespace {

// One forbidden-clique probe: global edge positions of the clique's pairs in
// local lexicographic order, so the gathered word indexes the family table.
struct CliqueProbe {
    std::array<std::uint8_t, 15> edge{};
    int npairs = 0;
};

std::uint64_t gather(std::uint64_t bits, const CliqueProbe& p) {
    std::uint64_t mask = 0;
    for (int t = 0; t < p.npairs; ++t) mask |= ((bits >> p.edge[t]) & 1ull) << t;
    return mask;
}

// Clique checks bucketed by their final edge in assignment order: each
// clique is probed exactly once per completed prefix.
struct Scheduler {
    const SmallGraph& g;
    const ForbiddenFamily& f;
    int m;
    bool trivial;  // no k-clique at all
    std::vector<std::vector<CliqueProbe>> by_edge;

    Scheduler(const SmallGraph& graph, const ForbiddenFamily& fam)
        : g(graph), f(fam), m(graph.m()), by_edge(graph.m()) {
        const int k = f.order();
        trivial = true;
        if (k <= g.n()) {
            for (std::uint16_t clique : cliques_of_size(g, k)) {
                const auto verts = bits_of(clique);
                CliqueProbe probe;
                int last = -1;
                for (std::size_t a = 0; a < verts.size(); ++a)
                    for (std::size_t b = a + 1; b < verts.size(); ++b) {
                        const int e = g.edge_pos(verts[a], verts[b]);
                        probe.edge[probe.npairs++] = static_cast<std::uint8_t>(e);
                        last = std::max(last, e);
                    }
                by_edge[last].push_back(probe);
                trivial = false;
            }
        }
    }

    bool ok_after(std::uint64_t bits, int e) const {
        for (const auto& probe : by_edge[e])
            if (f.forbidden_mask(gather(bits, probe))) return false;
        return true;
    }

    std::uint64_t dfs_count(std::uint64_t bits, int e) const {
        if (e == m) return 1;
        std::uint64_t total = 0;
        for (std::uint64_t b = 0; b < 2; ++b) {
            const std::uint64_t nb = bits | (b << e);
            if (ok_after(nb, e)) total += dfs_count(nb, e + 1);
        }
        return total;
    }

    template <typename Fn>
    void dfs_each(std::uint64_t bits, int e, Fn&& fn) const {
        if (e == m) {
            fn(bits);
            return;
        }
        for (std::uint64_t b = 0; b < 2; ++b) {
            const std::uint64_t nb = bits | (b << e);
            if (ok_after(nb, e)) dfs_each(nb, e + 1, fn);
        }
    }

    // assign the first p edges from prefix; false when a check fails
    bool seed(std::uint64_t prefix, int p, std::uint64_t& bits) const {
        bits = 0;
        for (int e = 0; e < p; ++e) {
            bits |= prefix & (1ull << e);
            if (!ok_after(bits, e)) return false;
        }
        return true;
    }
};

// Extensions of one external vertex against varying orientations of a fixed
// subgraph: the clique probes are set up once, then count() runs a small
// DFS over the new edge bits with the same last-edge bucketing.
class ExtensionCounter {
public:
    ExtensionCounter(const SmallGraph& h, std::uint16_t neighbors, const ForbiddenFamily& f)
        : f_(f), d_(std::popcount(neighbors)) {
        const int k = f.order();
        nbr_ = bits_of(neighbors);
        by_bit_.resize(d_);
        if (k - 1 > h.n() || d_ < k - 1) return;
        std::array<int, 16> slot{};  // H-local vertex -> neighbor index
        for (int t = 0; t < d_; ++t) slot[nbr_[t]] = t;
        // (k-1)-cliques of H inside the neighborhood become k-cliques with v;
        // slots follow the lexicographic pair order of (clique..., v)
        for (std::uint16_t sub : cliques_of_size(h, k - 1)) {
            if ((sub & ~neighbors) != 0) continue;
            const auto verts = bits_of(sub);
            Probe probe;
            int last = 0;
            for (std::size_t a = 0; a < verts.size(); ++a) {
                for (std::size_t b = a + 1; b < verts.size(); ++b)
                    probe.slot[probe.nslots++] = {
                        false, static_cast<std::uint8_t>(h.edge_pos(verts[a], verts[b]))};
                probe.slot[probe.nslots++] = {true,
                                              static_cast<std::uint8_t>(slot[verts[a]])};
                last = std::max(last, slot[verts[a]]);
            }
            by_bit_[last].push_back(probe);
        }
    }

    // number of extension patterns keeping the orientation F-free
    std::uint64_t count(std::uint64_t h_bits) const {
        return dfs(h_bits, 0, 0);
    }

private:
    // mask layout: clique vertices in ascending H-local order, v last;
    // pattern bit t == 1 means neighbor t -> v, which is also the mask-bit
    // convention for the pair (c_a, v) since c_a is the lower local index
    struct Probe {
        struct Slot {
            bool from_pattern;
            std::uint8_t idx;  // H edge position or pattern bit
        };
        std::array<Slot, 15> slot{};
        int nslots = 0;
    };

    bool ok_after(std::uint64_t h_bits, std::uint64_t pat, int t) const {
        for (const auto& probe : by_bit_[t]) {
            std::uint64_t mask = 0;
            for (int x = 0; x < probe.nslots; ++x) {
                const auto& s = probe.slot[x];
                const std::uint64_t bit =
                    s.from_pattern ? (pat >> s.idx) & 1ull : (h_bits >> s.idx) & 1ull;
                mask |= bit << x;
            }
            if (f_.forbidden_mask(mask)) return false;
        }
        return true;
    }

    std::uint64_t dfs(std::uint64_t h_bits, std::uint64_t pat, int t) const {
        if (t == d_) return 1;
        std::uint64_t total = 0;
        for (std::uint64_t b = 0; b < 2; ++b) {
            const std::uint64_t np = pat | (b << t);
            if (ok_after(h_bits, np, t)) total += dfs(h_bits, np, t + 1);
        }
        return total;
    }

    const ForbiddenFamily& f_;
    int d_;
    std::vector<int> nbr_;
    std::vector<std::vector<Probe>> by_bit_;
};

std::uint16_t compress_mask(std::uint16_t mask, std::uint16_t domain) {
    // restrict mask to the set bits of domain, renumbered ascending
    std::uint16_t out = 0;
    int idx = 0;
    for (int v : bits_of(domain)) {
        if ((mask >> v) & 1) out |= static_cast<std::uint16_t>(1u << idx);
        ++idx;
    }
    return out;
}

}  // namespace

std::string CountReport::to_json_line() const {
    nlohmann::ordered_json j;
    j["graph6"] = graph6;
    j["family"] = family;
    j["count"] = dec(count);
    j["method"] = method;
    j["elapsed_ms"] = elapsed_ms;
    return j.dump();
}

BigInt count_naive(const SmallGraph& g, const ForbiddenFamily& f) {
    if (g.m() > 25)
        throw std::invalid_argument(
            "count_naive: more than 25 edges; use the backtracking method");
    std::uint64_t count = 0;
    for (std::uint64_t bits = 0; bits < (1ull << g.m()); ++bits)
        if (is_family_free(Orientation(g, bits), f)) ++count;
    return count;
}

BigInt count_backtrack_serial(const SmallGraph& g, const ForbiddenFamily& f) {
    Scheduler sched(g, f);
    if (sched.trivial) return pow2(g.m());
    if (g.m() > 36) throw std::invalid_argument("count_backtrack: more than 36 edges");
    return sched.dfs_count(0, 0);
}

BigInt count_backtrack(const SmallGraph& g, const ForbiddenFamily& f) {
    Scheduler sched(g, f);
    if (sched.trivial) return pow2(g.m());
    const int m = g.m();
    if (m > 36) throw std::invalid_argument("count_backtrack: more than 36 edges");
    const int p = std::min(8, m);
    std::vector<std::uint64_t> sub(1ull << p, 0);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t prefix = 0; prefix < (1ll << p); ++prefix) {
        std::uint64_t bits;
        if (sched.seed(static_cast<std::uint64_t>(prefix), p, bits))
            sub[prefix] = sched.dfs_count(bits, p);
    }
    std::uint64_t total = 0;
    for (std::uint64_t s : sub) total += s;  // fixed index order
    return total;
}

BigInt count_via_independent_set(const SmallGraph& g, const ForbiddenFamily& f,
                                 std::uint16_t independent_set) {
    const std::uint16_t vm = g.vertex_mask();
    if (independent_set & ~vm)
        throw std::invalid_argument("count_via_independent_set: set outside vertex range");
    for (int v : bits_of(independent_set))
        if (g.row(v) & independent_set)
            throw std::invalid_argument("count_via_independent_set: set is not independent");
    if (independent_set == 0) return count_backtrack(g, f);

    const std::uint16_t h_mask = static_cast<std::uint16_t>(vm & ~independent_set);
    if (h_mask == 0) return 1;  // edgeless graph, single (empty) orientation

    const SmallGraph h = induced_subgraph(g, h_mask);
    if (h.m() > 36)
        throw std::invalid_argument("count_via_independent_set: G - S has more than 36 edges");
    Scheduler sched(h, f);

    // vertices of S with equal neighborhoods share one counter with an exponent
    std::vector<std::pair<ExtensionCounter, unsigned>> counters;
    std::vector<std::uint16_t> seen;
    for (int v : bits_of(independent_set)) {
        const std::uint16_t nbrs = compress_mask(g.row(v), h_mask);
        bool grouped = false;
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (seen[i] == nbrs) {
                ++counters[i].second;
                grouped = true;
                break;
            }
        if (!grouped) {
            counters.emplace_back(ExtensionCounter(h, nbrs, f), 1u);
            seen.push_back(nbrs);
        }
    }

    auto subtree_sum = [&](std::uint64_t bits, int from_edge) {
        BigInt local = 0;
        sched.dfs_each(bits, from_edge, [&](std::uint64_t h_bits) {
            BigInt prod = 1;
            for (const auto& [c, exp] : counters) {
                const std::uint64_t e = c.count(h_bits);
                if (e == 0) {
                    prod = 0;
                    break;
                }
                prod *= exp == 1 ? BigInt(e) : ipow(e, exp);
            }
            local += prod;
        });
        return local;
    };

    // same deterministic prefix split as the backtracking kernel
    const int p = std::min(8, h.m());
    std::vector<BigInt> partial(1ull << p);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t prefix = 0; prefix < (1ll << p); ++prefix) {
        std::uint64_t bits;
        if (sched.seed(static_cast<std::uint64_t>(prefix), p, bits))
            partial[prefix] = subtree_sum(bits, p);
    }
    BigInt total = 0;
    for (const BigInt& s : partial) total += s;
    return total;
}

std::uint64_t extension_count_vertex(const Orientation& h, std::uint16_t neighbors,
                                     const ForbiddenFamily& f) {
    const SmallGraph& hg = *h.graph;
    if (neighbors & ~hg.vertex_mask())
        throw std::invalid_argument("extension_count_vertex: neighbors outside H");
    if (!is_family_free(h, f)) return 0;
    return ExtensionCounter(hg, neighbors, f).count(h.bits);
}

std::uint64_t extension_count_edge(const Orientation& k_orientation, const ForbiddenFamily& f) {
    const SmallGraph& kg = *k_orientation.graph;
    const int kc = kg.n();
    if (kc != f.order() - 1)
        throw std::invalid_argument("extension_count_edge: clique must have k-1 vertices");
    if (kg.m() != kc * (kc - 1) / 2)
        throw std::invalid_argument("extension_count_edge: subgraph is not complete");
    if (!is_family_free(k_orientation, f)) return 0;

    // complete graph on K + {u, v}; K keeps its labels, u = kc, v = kc+1
    const SmallGraph host = complete_graph(kc + 2);
    // carry K's orientation onto the matching host edges
    std::uint64_t fixed = 0;
    std::vector<int> free_edges;
    for (int e = 0; e < host.m(); ++e) {
        auto [a, b] = host.edges()[e];
        if (b < kc) {
            if ((k_orientation.bits >> kg.edge_pos(a, b)) & 1) fixed |= 1ull << e;
        } else {
            free_edges.push_back(e);
        }
    }
    std::uint64_t count = 0;
    const int nfree = static_cast<int>(free_edges.size());  // 2(k-1)+1
    for (std::uint64_t pat = 0; pat < (1ull << nfree); ++pat) {
        std::uint64_t bits = fixed;
        for (int t = 0; t < nfree; ++t)
            if ((pat >> t) & 1) bits |= 1ull << free_edges[t];
        if (is_family_free(Orientation(host, bits), f)) ++count;
    }
    return count;
}

ExtensionVector extension_vector(const SmallGraph& g, std::uint16_t h_mask, int v,
                                 const ForbiddenFamily& f) {
    if ((h_mask >> v) & 1) throw std::invalid_argument("extension_vector: v inside H");
    if (h_mask == 0) throw std::invalid_argument("extension_vector: empty H");
    const SmallGraph h = induced_subgraph(g, h_mask);
    if (h.m() > 25) throw std::invalid_argument("extension_vector: H has more than 25 edges");
    const ExtensionCounter counter(h, compress_mask(g.row(v), h_mask), f);
    ExtensionVector out;
    for (std::uint64_t bits = 0; bits < (1ull << h.m()); ++bits) {
        if (!is_family_free(Orientation(h, bits), f)) continue;
        out.orientations.push_back(bits);
        out.entries.push_back(counter.count(bits));
    }
    return out;
}

double lp_norm(const std::vector<BigInt>& x, double p) {
    if (p <= 0) throw std::invalid_argument("lp_norm: p must be positive");
    if (p == std::floor(p) && p <= 64) {
        const BigInt s = lp_power_sum(x, static_cast<unsigned>(p));
        return std::pow(s.convert_to<double>(), 1.0 / p);
    }
    double s = 0;
    for (const BigInt& e : x) s += std::pow(std::abs(e.convert_to<double>()), p);
    return std::pow(s, 1.0 / p);
}

BigInt lp_power_sum(const std::vector<BigInt>& x, unsigned p) {
    if (p == 0) throw std::invalid_argument("lp_power_sum: p must be positive");
    BigInt s = 0;
    for (const BigInt& e : x) s += ipow(abs(e), p);
    return s;
}

namespace {

bool linearly_dependent(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    for (std::size_t t = 0; t < a.size(); ++t)
        for (std::size_t u = t + 1; u < a.size(); ++u)
            if (a[t] * b[u] != a[u] * b[t]) return false;
    return true;
}

}  // namespace

HolderReport holder_check(const std::vector<std::vector<BigInt>>& xs) {
    if (xs.empty()) throw std::invalid_argument("holder_check: needs at least one vector");
    const std::size_t s = xs.size();
    const std::size_t len = xs[0].size();
    for (const auto& x : xs) {
        if (x.size() != len) throw std::invalid_argument("holder_check: mismatched lengths");
        for (const BigInt& e : x)
            if (e < 0) throw std::invalid_argument("holder_check: entries must be nonnegative");
    }

    HolderReport rep;
    rep.lhs = 0;
    for (std::size_t t = 0; t < len; ++t) {
        BigInt prod = 1;
        for (const auto& x : xs) prod *= x[t];
        rep.lhs += prod;
    }
    rep.lhs_pow = ipow(rep.lhs, s);
    rep.rhs_pow = 1;
    double rhs = 1;
    for (const auto& x : xs) {
        const BigInt ps = lp_power_sum(x, static_cast<unsigned>(s));
        rep.rhs_pow *= ps;
        rhs *= std::pow(ps.convert_to<double>(), 1.0 / static_cast<double>(s));
    }
    rep.rhs = rhs;
    rep.holds = rep.lhs_pow <= rep.rhs_pow;

    rep.equality = true;
    for (std::size_t i = 0; i < s && rep.equality; ++i)
        for (std::size_t j = i + 1; j < s && rep.equality; ++j)
            if (!linearly_dependent(xs[i], xs[j])) rep.equality = false;

    if (rep.equality) {
        std::size_t ref = s;
        for (std::size_t i = 0; i < s && ref == s; ++i)
            for (const BigInt& e : xs[i])
                if (e != 0) {
                    ref = i;
                    break;
                }
        if (ref < s) {
            std::size_t t0 = 0;
            while (xs[ref][t0] == 0) ++t0;
            std::vector<std::pair<BigInt, BigInt>> ratios;
            for (std::size_t k = 0; k < s; ++k) {
                BigInt num = xs[k][t0], den = xs[ref][t0];
                const BigInt g = gcd(num, den);
                if (g != 0) num /= g, den /= g;
                ratios.emplace_back(num, den);
            }
            rep.witness = {ref, std::move(ratios)};
        }
    }
    return rep;
}

}  // namespace orient
