#include "orient/symmetrize.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "orient/counting.hpp"
#include "orient/graph6.hpp"

namespace orient {

bool twins(const SmallGraph& g, int u, int v) {
    if (u == v || g.adjacent(u, v)) return false;
    return g.row(u) == g.row(v);
}

std::uint16_t eccentric_vertices(const SmallGraph& g) {
    std::uint16_t out = 0;
    for (int u = 0; u < g.n(); ++u) {
        const std::uint16_t non = static_cast<std::uint16_t>(~g.row(u) & g.vertex_mask() &
                                                             ~(1u << u));
        for (int w : bits_of(non))
            if (g.row(w) != g.row(u)) {
                out |= static_cast<std::uint16_t>(1u << u);
                break;
            }
    }
    return out;
}

namespace {

SmallGraph copy_neighborhood(const SmallGraph& g, std::uint16_t targets, int v) {
    // every vertex of targets gets neighborhood row(v) (none of them is a
    // neighbor of v, so symmetry is preserved)
    std::array<std::uint16_t, 16> rows{};
    for (int x = 0; x < g.n(); ++x) rows[x] = g.row(x);
    const std::uint16_t nv = g.row(v);
    for (int w : bits_of(static_cast<std::uint16_t>(targets & ~(1u << v)))) {
        for (int x = 0; x < g.n(); ++x) {
            rows[x] &= static_cast<std::uint16_t>(~(1u << w));
            if ((nv >> x) & 1) rows[x] |= static_cast<std::uint16_t>(1u << w);
        }
        rows[w] = nv;
    }
    return SmallGraph::from_rows(g.n(), rows);
}

}  // namespace

SmallGraph replace_with_twins(const SmallGraph& g, std::uint16_t s, int v) {
    if (!((s >> v) & 1)) throw std::invalid_argument("replace_with_twins: v not in S");
    for (int u : bits_of(s))
        if (g.row(u) & s) throw std::invalid_argument("replace_with_twins: S not independent");
    return copy_neighborhood(g, static_cast<std::uint16_t>(s & ~(1u << v)), v);
}

std::pair<int, SmallGraph> best_twin_replacement(const SmallGraph& g, std::uint16_t s,
                                                 const ForbiddenFamily& f) {
    const auto members = bits_of(s);
    if (members.empty()) throw std::invalid_argument("best_twin_replacement: empty S");
    for (int u : members)
        if (g.row(u) & s)
            throw std::invalid_argument("best_twin_replacement: S not independent");

    const std::uint16_t h_mask = static_cast<std::uint16_t>(g.vertex_mask() & ~s);
    int best = members.front();
    if (h_mask != 0 && members.size() > 1) {
        const unsigned p = static_cast<unsigned>(members.size());
        BigInt best_norm = -1;
        for (int u : members) {
            const auto vec = extension_vector(g, h_mask, u, f);
            std::vector<BigInt> entries(vec.entries.begin(), vec.entries.end());
            const BigInt norm = lp_power_sum(entries, p);
            if (norm > best_norm) {  // ties keep the smallest index
                best_norm = norm;
                best = u;
            }
        }
    }
    return {best, replace_with_twins(g, s, best)};
}

SmallGraph clone_twin(const SmallGraph& g, int u, int v) {
    if (u == v || g.adjacent(u, v))
        throw std::invalid_argument("clone_twin: vertices must be distinct and non-adjacent");
    return copy_neighborhood(g, static_cast<std::uint16_t>(1u << v), u);
}

SmallGraph delete_edge_step(const SmallGraph& g, int u, int v, int w) {
    if (u == v || u == w || v == w)
        throw std::invalid_argument("delete_edge_step: vertices must be distinct");
    if (g.adjacent(u, v) || g.adjacent(u, w) || !g.adjacent(v, w))
        throw std::invalid_argument(
            "delete_edge_step: needs {u,v},{u,w} non-edges and {v,w} an edge");
    std::array<std::uint16_t, 16> rows{};
    for (int x = 0; x < g.n(); ++x) rows[x] = g.row(x);
    rows[v] &= static_cast<std::uint16_t>(~(1u << w));
    rows[w] &= static_cast<std::uint16_t>(~(1u << v));
    return SmallGraph::from_rows(g.n(), rows);
}

std::string SymmetrizationTrace::to_json_line() const {
    nlohmann::ordered_json steps_json = nlohmann::ordered_json::array();
    for (const auto& st : steps)
        steps_json.push_back({{"before", graph6_encode(st.before)},
                              {"vertex", st.vertex},
                              {"after", graph6_encode(st.after)}});
    nlohmann::ordered_json j;
    j["steps"] = std::move(steps_json);
    j["final"] = graph6_encode(final_graph);
    j["final_is_complete_multipartite"] = final_is_complete_multipartite;
    j["edge_count_nondecreasing"] = edge_count_nondecreasing;
    return j.dump();
}

SymmetrizationTrace symmetrization_sequence(const SmallGraph& g) {
    SymmetrizationTrace trace;
    SmallGraph cur = g;
    for (;;) {
        const std::uint16_t ecc = eccentric_vertices(cur);
        if (ecc == 0) break;
        int pick = -1;
        for (int u : bits_of(ecc))
            if (pick < 0 || cur.degree(u) > cur.degree(pick)) pick = u;
        const std::uint16_t non = static_cast<std::uint16_t>(~cur.row(pick) &
                                                             cur.vertex_mask() & ~(1u << pick));
        SmallGraph next = copy_neighborhood(cur, non, pick);
        trace.steps.push_back({cur, pick, next});
        cur = std::move(next);
    }
    trace.final_graph = cur;
    trace.final_is_complete_multipartite = is_complete_multipartite(cur);
    trace.edge_count_nondecreasing = cur.m() >= g.m();
    return trace;
}

}  // namespace orient
