#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "orient/family.hpp"
#include "orient/small_graph.hpp"

namespace orient {

// Non-adjacent with equal neighborhoods.
bool twins(const SmallGraph& g, int u, int v);

// Vertices having a non-neighbor that is not their twin, as a mask.
// Empty exactly when the graph is complete multipartite.
std::uint16_t eccentric_vertices(const SmallGraph& g);

// Every vertex of the independent set S becomes a twin of v in S.
SmallGraph replace_with_twins(const SmallGraph& g, std::uint16_t s, int v);

// Picks the v in S whose extension vector over G - S has the largest
// l_|S| norm (exact |S|-th power sums; ties to the smallest index) and
// applies replace_with_twins.  Never decreases D(., F).
std::pair<int, SmallGraph> best_twin_replacement(const SmallGraph& g, std::uint16_t s,
                                                 const ForbiddenFamily& f);

// v's neighborhood becomes a copy of u's (u, v non-adjacent).
SmallGraph clone_twin(const SmallGraph& g, int u, int v);

// Requires {u,v},{u,w} non-edges and {v,w} an edge; returns G - {v,w}.
SmallGraph delete_edge_step(const SmallGraph& g, int u, int v, int w);

struct SymmetrizationStep {
    SmallGraph before;
    int vertex;
    SmallGraph after;
};

struct SymmetrizationTrace {
    std::vector<SymmetrizationStep> steps;
    SmallGraph final_graph;
    bool final_is_complete_multipartite = false;
    bool edge_count_nondecreasing = false;

    std::string to_json_line() const;
};

// Repeatedly picks an eccentric vertex of maximum degree (ties to the
// smallest index) and replaces every non-neighbor with a twin of it, until
// no eccentric vertex remains.  The eccentric-vertex count strictly drops
// each step, the edge count never drops, and the final graph is complete
// multipartite.
SymmetrizationTrace symmetrization_sequence(const SmallGraph& g);

}  // namespace orient
