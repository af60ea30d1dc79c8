#include "orient/lemmas.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "orient/canonical.hpp"
#include "orient/counting.hpp"
#include "orient/enumerate.hpp"
#include "orient/graph6.hpp"
#include "orient/search.hpp"
#include "orient/symmetrize.hpp"

namespace orient {

namespace {

std::vector<std::uint16_t> maximal_independent_sets(const SmallGraph& g) {
    std::vector<std::uint16_t> out;
    const std::uint16_t vm = g.vertex_mask();
    for (std::uint32_t s = 1; s <= vm; ++s) {
        bool indep = true;
        for (int v : bits_of(s))
            if (g.row(v) & s) {
                indep = false;
                break;
            }
        if (!indep) continue;
        bool maximal = true;
        for (int v : bits_of(static_cast<std::uint16_t>(vm & ~s)))
            if ((g.row(v) & s) == 0) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(static_cast<std::uint16_t>(s));
    }
    return out;
}

bool pairwise_proportional(const std::vector<std::vector<BigInt>>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            for (std::size_t t = 0; t < xs[i].size(); ++t)
                for (std::size_t u = t + 1; u < xs[i].size(); ++u)
                    if (xs[i][t] * xs[j][u] != xs[i][u] * xs[j][t]) return false;
    return true;
}

std::vector<SmallGraph> extremal_graphs(int n, const ForbiddenFamily& f) {
    std::vector<SmallGraph> out;
    for (const auto& g6 : extremal_search(n, f, SearchMode::all).extremal_graphs)
        out.push_back(graph6_decode(g6));
    return out;
}

LemmaResult lemma_holder() {
    LemmaResult r{"holder", true, 0, ""};
    auto probe = [&](const std::vector<std::vector<BigInt>>& xs) {
        const HolderReport rep = holder_check(xs);
        ++r.checked;
        if (!rep.holds) r.pass = false;
        if (rep.equality != pairwise_proportional(xs)) r.pass = false;
        if (rep.equality && rep.lhs_pow != rep.rhs_pow) r.pass = false;
    };
    // exhaustive: all pairs of length-3 vectors with entries in 0..3
    std::vector<std::vector<BigInt>> pool;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) pool.push_back({a, b, c});
    for (const auto& x : pool)
        for (const auto& y : pool) probe({x, y});
    // randomized tuples, fixed seed
    std::mt19937 rng(20230115);
    for (int it = 0; it < 10000; ++it) {
        const int s = 1 + static_cast<int>(rng() % 4);
        const int len = 1 + static_cast<int>(rng() % 8);
        std::vector<std::vector<BigInt>> xs(s, std::vector<BigInt>(len));
        for (auto& x : xs)
            for (auto& e : x) e = static_cast<int>(rng() % 20);
        // bias some tuples towards proportional ones
        if (it % 5 == 0 && s >= 2) {
            const int scale = 1 + static_cast<int>(rng() % 3);
            for (int t = 0; t < len; ++t) xs[1][t] = xs[0][t] * scale;
        }
        probe(xs);
    }
    r.detail = "inequality + equality flag on exhaustive small pairs and random tuples";
    return r;
}

LemmaResult lemma_twin() {
    LemmaResult r{"twin", true, 0, ""};
    const char* fams[] = {"s4", "r4", "u4", "c3"};
    for (const char* fn : fams) {
        const ForbiddenFamily f = ForbiddenFamily::parse(fn);
        for (int n = 1; n <= 5; ++n)
            for (const SmallGraph& g : enumerate_graphs(n)) {
                const BigInt d = count_backtrack_serial(g, f);
                for (std::uint16_t s : maximal_independent_sets(g)) {
                    const auto [v, replaced] = best_twin_replacement(g, s, f);
                    (void)v;
                    ++r.checked;
                    if (count_backtrack_serial(replaced, f) < d) r.pass = false;
                }
            }
    }
    // on an extremal graph the extension vectors of any independent set's
    // members over G - S coincide entry-wise
    const ForbiddenFamily s4 = ForbiddenFamily::strongly_connected(4);
    for (int n = 2; n <= 5; ++n)
        for (const SmallGraph& g : extremal_graphs(n, s4)) {
            const std::uint16_t vm = g.vertex_mask();
            for (std::uint32_t s = 1; s <= vm; ++s) {
                if (std::popcount(s) < 2 || s == static_cast<std::uint32_t>(vm)) continue;
                bool indep = true;
                for (int v : bits_of(s))
                    if (g.row(v) & s) {
                        indep = false;
                        break;
                    }
                if (!indep) continue;
                const std::uint16_t h_mask = static_cast<std::uint16_t>(vm & ~s);
                const auto members = bits_of(s);
                const auto first = extension_vector(g, h_mask, members[0], s4);
                ++r.checked;
                for (std::size_t i = 1; i < members.size(); ++i)
                    if (extension_vector(g, h_mask, members[i], s4).entries != first.entries)
                        r.pass = false;
            }
        }
    r.detail =
        "D never decreases under best twin replacement; member extension "
        "vectors agree on extremal graphs";
    return r;
}

LemmaResult lemma_clone() {
    LemmaResult r{"clone", true, 0, ""};
    const ForbiddenFamily f = ForbiddenFamily::strongly_connected(4);
    for (int n = 2; n <= 5; ++n)
        for (const SmallGraph& g : extremal_graphs(n, f)) {
            const BigInt d = count_backtrack_serial(g, f);
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    if (u == v || g.adjacent(u, v)) continue;
                    ++r.checked;
                    if (count_backtrack_serial(clone_twin(g, u, v), f) != d) r.pass = false;
                }
        }
    r.detail = "cloning preserves D on S4-extremal graphs (n <= 5)";
    return r;
}

LemmaResult lemma_edge_delete() {
    LemmaResult r{"edge-delete", true, 0, ""};
    long long applicable = 0;
    const char* fams[] = {"s4", "r4", "u4", "c3"};
    for (const char* fn : fams) {
        const ForbiddenFamily f = ForbiddenFamily::parse(fn);
        for (int n = 3; n <= 5; ++n)
            for (const SmallGraph& g : extremal_graphs(n, f)) {
                const BigInt d = count_backtrack_serial(g, f);
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v)
                        for (int w = v + 1; w < n; ++w) {
                            if (u == v || u == w) continue;
                            if (g.adjacent(u, v) || g.adjacent(u, w) || !g.adjacent(v, w))
                                continue;
                            ++applicable;
                            ++r.checked;
                            if (count_backtrack_serial(delete_edge_step(g, u, v, w), f) != d)
                                r.pass = false;
                        }
            }
    }
    // structural effect on a non-extremal example: K3 plus an isolated vertex
    {
        const SmallGraph g = SmallGraph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}});
        const SmallGraph cut = delete_edge_step(g, 3, 0, 1);
        ++r.checked;
        if (cut.m() != 2 || cut.adjacent(0, 1)) r.pass = false;
    }
    std::ostringstream os;
    os << "extremal pattern instances: " << applicable << " (D preserved on each)";
    r.detail = os.str();
    return r;
}

LemmaResult lemma_multipartite() {
    LemmaResult r{"multipartite", true, 0, ""};
    struct Case {
        const char* fam;
        int n_max;
    };
    const Case cases[] = {{"s4", 5}, {"s5", 5}, {"u4", 5}, {"c3", 6}};
    for (const auto& c : cases) {
        const ForbiddenFamily f = ForbiddenFamily::parse(c.fam);
        for (int n = 1; n <= c.n_max; ++n)
            for (const SmallGraph& g : extremal_graphs(n, f)) {
                ++r.checked;
                if (!is_complete_multipartite(g)) r.pass = false;
            }
    }
    r.detail = "every extremal graph of a no-source family is complete multipartite";
    return r;
}

bool valid_path(const Tournament& t, const std::vector<int>& labs) {
    if (labs.size() != static_cast<std::size_t>(t.size())) return false;
    std::array<int, 16> local{};
    for (int v = 0; v < t.size(); ++v) local[t.label(v)] = v;
    for (std::size_t i = 0; i + 1 < labs.size(); ++i)
        if (!t.beats(local[labs[i]], local[labs[i + 1]])) return false;
    return true;
}

LemmaResult lemma_ham() {
    LemmaResult r{"ham", true, 0, ""};
    for (int k = 1; k <= 6; ++k) {
        const int m = k * (k - 1) / 2;
        for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
            const Tournament t = Tournament::from_mask(k, mask);
            ++r.checked;
            if (!valid_path(t, hamilton_path(t))) r.pass = false;
            const bool sc = is_strongly_connected(t);
            if (k >= 2 && sc && (has_source(t) || is_transitive(t))) r.pass = false;
            if (k < 3) continue;
            if (sc) {
                const auto cyc = hamilton_cycle(t);
                std::array<int, 16> local{};
                for (int v = 0; v < k; ++v) local[t.label(v)] = v;
                bool ok = valid_path(t, cyc) && t.beats(local[cyc.back()], local[cyc.front()]);
                if (!ok) r.pass = false;
            } else {
                try {
                    hamilton_cycle(t);
                    r.pass = false;  // must refuse non-strongly-connected input
                } catch (const std::invalid_argument&) {
                }
            }
        }
    }
    r.detail = "paths validated edge-by-edge; cycle exists iff strongly connected (k <= 6)";
    return r;
}

LemmaResult lemma_chain() {
    LemmaResult r{"chain", true, 0, ""};
    for (int k = 3; k <= 6; ++k) {
        const int m = k * (k - 1) / 2;
        for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
            const Tournament t = Tournament::from_mask(k, mask);
            if (!is_strongly_connected(t)) continue;
            const auto chain = sc_subtournament_chain(t);
            ++r.checked;
            const SmallGraph kk = complete_graph(k);
            const Orientation o(kk, mask);
            for (int l = 3; l <= k; ++l) {
                auto it = chain.find(l);
                if (it == chain.end() || static_cast<int>(it->second.size()) != l) {
                    r.pass = false;
                    continue;
                }
                std::uint16_t vs = 0;
                for (int v : it->second) vs |= static_cast<std::uint16_t>(1u << v);
                if (!is_strongly_connected(induced_subtournament(o, vs))) r.pass = false;
            }
        }
    }
    r.detail = "strongly connected subtournaments of every order 3..k (k <= 6)";
    return r;
}

LemmaResult lemma_ext_vertex() {
    LemmaResult r{"ext-vertex", true, 0, ""};
    for (int k = 4; k <= 5; ++k) {
        const ForbiddenFamily f = ForbiddenFamily::strongly_connected(k);
        for (int x = k - 1; x <= k + 1; ++x) {
            const SmallGraph kx = complete_graph(x);
            const std::uint64_t bound = static_cast<std::uint64_t>(x - k + 4) << (k - 3);
            for (std::uint64_t bits = 0; bits < (1ull << kx.m()); ++bits) {
                const Orientation o(kx, bits);
                if (!is_family_free(o, f)) continue;
                ++r.checked;
                if (extension_count_vertex(o, kx.vertex_mask(), f) > bound) r.pass = false;
            }
        }
    }
    r.detail = "c(u, K⃗) <= (x-k+4)*2^(k-3) for k in {4,5}, x in {k-1,k,k+1}";
    return r;
}

LemmaResult lemma_ext_edge() {
    LemmaResult r{"ext-edge", true, 0, ""};
    for (int k = 4; k <= 5; ++k) {
        const ForbiddenFamily f = ForbiddenFamily::strongly_connected(k);
        const SmallGraph kk = complete_graph(k - 1);
        const std::uint64_t bound = 6ull << (2 * k - 5);
        for (std::uint64_t bits = 0; bits < (1ull << kk.m()); ++bits) {
            const Orientation o(kk, bits);
            if (!is_family_free(o, f)) continue;
            ++r.checked;
            if (extension_count_edge(o, f) >= bound) r.pass = false;
        }
    }
    r.detail = "c({u,v}, K⃗) < 6*2^(2k-5) for k in {4,5}";
    return r;
}

LemmaResult lemma_sc_bound() {
    LemmaResult r{"sc-bound", true, 0, ""};
    const std::uint64_t sc3 = count_sc_orientations(3);
    const std::uint64_t sc4 = count_sc_orientations(4);
    const std::uint64_t sc5 = count_sc_orientations(5);
    const std::uint64_t sc6 = count_sc_orientations(6);
    r.checked = 4;
    if (sc3 != 2 || sc4 != 24 || sc5 != 544) r.pass = false;
    if (!(sc5 > (1ull << 9)) || !(sc6 > (1ull << 14))) r.pass = false;
    // recurrence lower bound from extending a (k-1)-tournament
    if (!(sc5 >= (14ull * sc4) + (4ull * ((1ull << 6) - sc4)))) r.pass = false;
    if (!(sc6 >= (30ull * sc5) + (8ull * ((1ull << 10) - sc5)))) r.pass = false;
    // the 64 tournaments on 4 vertices: 24 transitive + 24 strongly connected + 16 other
    std::uint64_t transitive = 0, sc = 0;
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        const Tournament t = Tournament::from_mask(4, mask);
        if (is_transitive(t)) ++transitive;
        if (is_strongly_connected(t)) ++sc;
    }
    if (transitive != 24 || sc != 24) r.pass = false;
    std::ostringstream os;
    os << "SC(K3..K6) = " << sc3 << "," << sc4 << "," << sc5 << "," << sc6;
    r.detail = os.str();
    return r;
}

LemmaResult lemma_small_cliques() {
    LemmaResult r{"small-cliques", true, 0, ""};
    const ForbiddenFamily s4 = ForbiddenFamily::strongly_connected(4);
    const ForbiddenFamily s5 = ForbiddenFamily::strongly_connected(5);
    const BigInt s4k5 = count_backtrack_serial(complete_graph(5), s4);
    const BigInt s5k5 = count_backtrack_serial(complete_graph(5), s5);
    const BigInt s5k6 = count_backtrack_serial(complete_graph(6), s5);
    r.checked = 3;
    if (s4k5 != 240 || s4k5 >= pow2(turan_edges(5, 3))) r.pass = false;
    if (s5k5 >= pow2(turan_edges(5, 4))) r.pass = false;
    if (s5k6 >= pow2(turan_edges(6, 4))) r.pass = false;
    std::ostringstream os;
    os << "S4(K5)=" << s4k5 << " S5(K5)=" << s5k5 << " S5(K6)=" << s5k6;
    r.detail = os.str();
    return r;
}

}  // namespace

std::vector<std::string> lemma_ids() {
    return {"holder",     "twin",       "clone",    "edge-delete",
            "multipartite", "ham",      "chain",    "ext-vertex",
            "ext-edge",   "sc-bound",   "small-cliques"};
}

LemmaResult verify_lemma(const std::string& id) {
    if (id == "holder") return lemma_holder();
    if (id == "twin") return lemma_twin();
    if (id == "clone") return lemma_clone();
    if (id == "edge-delete") return lemma_edge_delete();
    if (id == "multipartite") return lemma_multipartite();
    if (id == "ham") return lemma_ham();
    if (id == "chain") return lemma_chain();
    if (id == "ext-vertex") return lemma_ext_vertex();
    if (id == "ext-edge") return lemma_ext_edge();
    if (id == "sc-bound") return lemma_sc_bound();
    if (id == "small-cliques") return lemma_small_cliques();
    throw std::invalid_argument("unknown lemma id: " + id);
}

std::vector<LemmaResult> verify_lemmas(const std::string& which) {
    std::vector<LemmaResult> out;
    if (which == "all") {
        for (const auto& id : lemma_ids()) out.push_back(verify_lemma(id));
    } else {
        out.push_back(verify_lemma(which));
    }
    return out;
}

}  // namespace orient
