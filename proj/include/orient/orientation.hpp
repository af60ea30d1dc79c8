#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "orient/small_graph.hpp"

namespace orient {

// An orientation of a graph's edges: bit e = 1 means edge e runs from its
// smaller endpoint to its larger one.  Holds a pointer to the graph it
// orients; the graph must outlive it.
struct Orientation {
    const SmallGraph* graph = nullptr;
    std::uint64_t bits = 0;

    Orientation() = default;
    Orientation(const SmallGraph& g, std::uint64_t b);

    // true when the edge {u,v} is oriented u -> v
    bool directed(int u, int v) const;
};

// graph6 string, a colon, then the bit vector as a big-endian hex string
// over edge indices (ceil(m/4) digits).
std::string orientation_to_text(const Orientation& o);
std::uint64_t orientation_bits_from_text(const SmallGraph& g, const std::string& hex);

// Orientation of a complete (sub)graph, kept as out-neighbor bitrows over
// local indices 0..k-1 plus the original vertex labels.
class Tournament {
public:
    // mask packs the local pairs in lexicographic (min,max) order, bit = 1
    // meaning lower local index -> higher.
    static Tournament from_mask(int k, std::uint64_t mask);

    int size() const { return k_; }
    bool beats(int u, int v) const { return (out_[u] >> v) & 1; }
    std::uint16_t out_row(int v) const { return out_[v]; }
    int out_degree(int v) const { return std::popcount(out_[v]); }
    int label(int v) const { return labels_[v]; }
    const std::array<int, 16>& labels() const { return labels_; }
    std::uint64_t mask() const;

    friend Tournament induced_subtournament(const Orientation&, std::uint16_t);

private:
    int k_ = 0;
    std::array<std::uint16_t, 16> out_{};
    std::array<int, 16> labels_{};
};

// The sub-tournament induced by a clique of the oriented graph (error when
// the vertex set is not a clique).  Labels keep the original vertex ids.
Tournament induced_subtournament(const Orientation& o, std::uint16_t vertex_set);

// Every ordered pair joined by a directed path.
bool is_strongly_connected(const Tournament& t);

// Dominance is a linear order; for tournaments this is equivalent to the
// out-degrees being a permutation of 0..k-1.
bool is_transitive(const Tournament& t);

// Some vertex dominates all others.
bool has_source(const Tournament& t);

// Directed Hamilton path by insertion: vertex j enters the path of the
// first j-1 vertices at the first position whose successor it beats.
// Returns original labels.
std::vector<int> hamilton_path(const Tournament& t);

// Directed Hamilton cycle of a strongly connected tournament, by triangle
// seeding and absorption; exhaustive fallback for k <= 8 if extension ever
// stalls.  Returns original labels (closing edge last->first implied).
std::vector<int> hamilton_cycle(const Tournament& t);

// For each 3 <= l <= k, a vertex set inducing a strongly connected
// subtournament of order l, built by the Hamilton-cycle chord recursion.
// Keys are original labels.
std::map<int, std::vector<int>> sc_subtournament_chain(const Tournament& t);

// Exact SC(K_k) by sweeping all 2^C(k,2) tournaments; 3 <= k <= 6.
std::uint64_t count_sc_orientations(int k);

// Position of local pair (i,j), i<j, in the lexicographic pair order of a
// k-vertex complete graph.
inline int pair_pos(int k, int i, int j) {
    return i * k - i * (i + 3) / 2 + j - 1;
}

}  // namespace orient
