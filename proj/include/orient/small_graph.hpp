#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orient {

// Undirected graph on at most 16 vertices, adjacency kept as one bitmask
// row per vertex.  Edges are indexed lexicographically by (min,max)
// endpoint pair; orientation bit vectors and the backtracking order of the
// counting engine follow this index, so it is part of the public contract.
class SmallGraph {
public:
    static constexpr int max_vertices = 16;

    SmallGraph() : SmallGraph(1) {}
    explicit SmallGraph(int n);  // edgeless

    static SmallGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static SmallGraph from_rows(int n, const std::array<std::uint16_t, 16>& rows);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    std::uint16_t row(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
    int degree(int v) const { return std::popcount(adj_[v]); }
    std::uint16_t vertex_mask() const { return static_cast<std::uint16_t>((1u << n_) - 1u); }

    // Position of {u,v} in the edge index, or -1 when not an edge.
    int edge_pos(int u, int v) const { return epos_[u][v]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool operator==(const SmallGraph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    void finalize();  // rebuild edge index from rows

    int n_;
    std::array<std::uint16_t, 16> adj_{};
    std::vector<std::pair<int, int>> edges_;
    std::array<std::array<std::int8_t, 16>, 16> epos_{};
};

// Multiset of positive part sizes, stored sorted descending.
struct PartitionSpec {
    std::vector<int> parts;

    PartitionSpec() = default;
    explicit PartitionSpec(std::vector<int> p);  // validates, sorts descending
    int total() const;
    bool operator==(const PartitionSpec&) const = default;
};

// n = r*q + rem with 0 <= rem < r.
struct TuranDecomposition {
    int n, r, q, rem;
};

TuranDecomposition turan_decompose(int n, int r);

// Edge count of the balanced complete r-partite graph on n vertices:
// C(n,2) - rem*C(q+1,2) - (r-rem)*C(q,2).
long long turan_edges(int n, int r);

SmallGraph turan_graph(int n, int r);
SmallGraph complete_graph(int n);
SmallGraph complete_multipartite(const PartitionSpec& parts);

// Non-adjacency must be transitive; recovers the part multiset when it is.
std::optional<PartitionSpec> complete_multipartite_parts(const SmallGraph& g);
inline bool is_complete_multipartite(const SmallGraph& g) {
    return complete_multipartite_parts(g).has_value();
}

// All k-subsets inducing complete subgraphs, as vertex masks, in ascending
// lexicographic order of the sorted vertex tuple.
std::vector<std::uint16_t> cliques_of_size(const SmallGraph& g, int k);

int clique_number(const SmallGraph& g);

// Subgraph induced by mask, vertices renumbered in ascending order.
SmallGraph induced_subgraph(const SmallGraph& g, std::uint16_t mask);

// Ascending list of set bits.
std::vector<int> bits_of(std::uint32_t mask);

}  // namespace orient
