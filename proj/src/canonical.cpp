#include "orient/canonical.hpp"

#include <algorithm>
#include <stdexcept>

namespace orient {

namespace {

// Branch-and-bound minimization: place one vertex per level; the new column
// of upper-triangle bits is fully determined by the placed prefix, so a
// branch dies as soon as its prefix exceeds the best complete cert.  Among
// untried candidates at one level, a vertex interchangeable with an already
// tried one (a twin, adjacent or not) spans an identical subtree and is
// skipped.
struct CertSearch {
    const SmallGraph& g;
    int n;
    int total_bits;
    std::uint64_t best = ~0ull;
    std::array<int, 16> placed{};    // level -> original vertex
    std::array<int, 16> best_perm{};

    explicit CertSearch(const SmallGraph& graph)
        : g(graph), n(graph.n()), total_bits(graph.n() * (graph.n() - 1) / 2) {}

    static bool interchangeable(const SmallGraph& g, int u, int v) {
        const std::uint16_t off = static_cast<std::uint16_t>(~((1u << u) | (1u << v)));
        return (g.row(u) & off) == (g.row(v) & off);
    }

    void run() {
        descend(0, 0, g.vertex_mask());
    }

    void descend(int level, std::uint64_t prefix, std::uint16_t unused) {
        if (level == n) {
            if (prefix < best) {
                best = prefix;
                for (int i = 0; i < n; ++i) best_perm[placed[i]] = i;
            }
            return;
        }
        // candidates sorted by their new column bits so the minimum is found early
        std::array<std::pair<std::uint32_t, int>, 16> cands;
        int nc = 0;
        for (int v : bits_of(unused)) {
            std::uint32_t col = 0;
            for (int i = 0; i < level; ++i)
                col = (col << 1) | (g.adjacent(placed[i], v) ? 1u : 0u);
            cands[nc++] = {col, v};
        }
        std::sort(cands.begin(), cands.begin() + nc);

        const int done_bits = (level + 1) * level / 2;  // C(level+1, 2)
        for (int c = 0; c < nc; ++c) {
            auto [col, v] = cands[c];
            bool skip = false;
            for (int p = 0; p < c && !skip; ++p)
                if (cands[p].first == col && interchangeable(g, cands[p].second, v)) skip = true;
            if (skip) continue;
            const std::uint64_t next = (prefix << level) | col;
            if (next > (best >> (total_bits - done_bits))) continue;
            placed[level] = v;
            descend(level + 1, next, static_cast<std::uint16_t>(unused & ~(1u << v)));
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const SmallGraph& g) {
    if (g.n() > 11)
        throw std::invalid_argument("canonical_form: supported for n <= 11 (word-sized cert)");
    CertSearch s(g);
    s.run();
    return {g.n(), s.best};
}

SmallGraph graph_from_cert(const CanonicalForm& c) {
    const int n = c.n;
    const int total = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((c.bits >> (total - 1 - bit)) & 1) edges.emplace_back(i, j);
    return SmallGraph::from_edges(n, edges);
}

SmallGraph canonical_graph(const SmallGraph& g) {
    return graph_from_cert(canonical_form(g));
}

SmallGraph relabel(const SmallGraph& g, const std::array<int, 16>& perm) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return SmallGraph::from_edges(g.n(), edges);
}

bool isomorphic(const SmallGraph& a, const SmallGraph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace orient
