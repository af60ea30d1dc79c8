#include "orient/small_graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace orient {

SmallGraph::SmallGraph(int n) : n_(n) {
    if (n < 1 || n > max_vertices)
        throw std::invalid_argument("SmallGraph: vertex count must be in [1,16]");
    for (auto& row : epos_) row.fill(-1);
}

SmallGraph SmallGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    SmallGraph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw std::invalid_argument("SmallGraph: bad edge endpoint");
        g.adj_[u] |= static_cast<std::uint16_t>(1u << v);
        g.adj_[v] |= static_cast<std::uint16_t>(1u << u);
    }
    g.finalize();
    return g;
}

SmallGraph SmallGraph::from_rows(int n, const std::array<std::uint16_t, 16>& rows) {
    SmallGraph g(n);
    const std::uint16_t vm = g.vertex_mask();
    for (int v = 0; v < n; ++v) {
        if (rows[v] & ~vm) throw std::invalid_argument("SmallGraph: row references vertex >= n");
        if ((rows[v] >> v) & 1) throw std::invalid_argument("SmallGraph: self-loop");
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (((rows[u] >> v) & 1) != ((rows[v] >> u) & 1))
                throw std::invalid_argument("SmallGraph: adjacency not symmetric");
    g.adj_ = rows;
    g.finalize();
    return g;
}

void SmallGraph::finalize() {
    edges_.clear();
    for (auto& row : epos_) row.fill(-1);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) {
                epos_[u][v] = epos_[v][u] = static_cast<std::int8_t>(edges_.size());
                edges_.emplace_back(u, v);
            }
}

PartitionSpec::PartitionSpec(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw std::invalid_argument("PartitionSpec: empty partition");
    for (int s : parts)
        if (s < 1) throw std::invalid_argument("PartitionSpec: parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
}

int PartitionSpec::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

TuranDecomposition turan_decompose(int n, int r) {
    if (n < 0) throw std::invalid_argument("turan_decompose: n must be nonnegative");
    if (r < 1) throw std::invalid_argument("turan_decompose: r must be positive");
    return {n, r, n / r, n % r};
}

long long turan_edges(int n, int r) {
    auto [nn, rr, q, rem] = turan_decompose(n, r);
    auto c2 = [](long long x) { return x * (x - 1) / 2; };
    return c2(n) - rem * c2(q + 1) - (static_cast<long long>(r) - rem) * c2(q);
}

SmallGraph turan_graph(int n, int r) {
    auto d = turan_decompose(n, r);
    if (n < 1 || n > SmallGraph::max_vertices)
        throw std::invalid_argument("turan_graph: n out of range");
    std::vector<int> parts;
    for (int i = 0; i < std::min(r, n); ++i) parts.push_back(i < d.rem ? d.q + 1 : d.q);
    std::erase(parts, 0);
    return complete_multipartite(PartitionSpec(parts));
}

SmallGraph complete_graph(int n) {
    std::vector<int> parts(n, 1);
    return complete_multipartite(PartitionSpec(parts));
}

SmallGraph complete_multipartite(const PartitionSpec& spec) {
    const int n = spec.total();
    if (n > SmallGraph::max_vertices)
        throw std::invalid_argument("complete_multipartite: more than 16 vertices");
    // part_of[v] for consecutive vertex blocks, largest part first
    std::vector<int> part_of(n);
    int v = 0, id = 0;
    for (int size : spec.parts) {
        for (int i = 0; i < size; ++i) part_of[v++] = id;
        ++id;
    }
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (part_of[a] != part_of[b]) edges.emplace_back(a, b);
    return SmallGraph::from_edges(n, edges);
}

std::optional<PartitionSpec> complete_multipartite_parts(const SmallGraph& g) {
    const int n = g.n();
    const std::uint16_t vm = g.vertex_mask();
    // Complete multipartite <=> non-adjacency (plus identity) is an
    // equivalence relation, i.e. every non-neighbor pair has equal rows.
    std::vector<int> part_size;
    std::uint16_t seen = 0;
    for (int v = 0; v < n; ++v) {
        if ((seen >> v) & 1) continue;
        std::uint16_t cls = static_cast<std::uint16_t>(~g.row(v) & vm);  // v and its non-neighbors
        for (int u : bits_of(cls))
            if (g.row(u) != g.row(v)) return std::nullopt;
        seen |= cls;
        part_size.push_back(std::popcount(cls));
    }
    return PartitionSpec(part_size);
}

namespace {

void extend_cliques(const SmallGraph& g, std::uint16_t clique, std::uint16_t cands,
                    int need, std::vector<std::uint16_t>& out) {
    if (need == 0) {
        out.push_back(clique);
        return;
    }
    while (cands) {
        int v = std::countr_zero(cands);
        cands &= static_cast<std::uint16_t>(cands - 1);
        if (std::popcount(static_cast<unsigned>(cands)) + 1 < need) break;
        extend_cliques(g, static_cast<std::uint16_t>(clique | (1u << v)),
                       static_cast<std::uint16_t>(cands & g.row(v)), need - 1, out);
    }
}

}  // namespace

std::vector<std::uint16_t> cliques_of_size(const SmallGraph& g, int k) {
    if (k < 1 || k > g.n()) throw std::invalid_argument("cliques_of_size: k out of range");
    std::vector<std::uint16_t> out;
    extend_cliques(g, 0, g.vertex_mask(), k, out);
    return out;
}

int clique_number(const SmallGraph& g) {
    for (int k = g.n(); k >= 1; --k)
        if (!cliques_of_size(g, k).empty()) return k;
    return 0;
}

SmallGraph induced_subgraph(const SmallGraph& g, std::uint16_t mask) {
    const auto verts = bits_of(mask);
    const int k = static_cast<int>(verts.size());
    if (k == 0) throw std::invalid_argument("induced_subgraph: empty vertex set");
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (g.adjacent(verts[a], verts[b])) edges.emplace_back(a, b);
    return SmallGraph::from_edges(k, edges);
}

std::vector<int> bits_of(std::uint32_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

}  // namespace orient
