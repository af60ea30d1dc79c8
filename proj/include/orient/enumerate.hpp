#pragma once

#include <vector>

#include "orient/small_graph.hpp"

namespace orient {

// One representative per isomorphism class, in ascending canonical-cert
// order.  Generated by extending the (n-1)-vertex classes with every
// possible neighborhood of a new vertex and deduplicating canonical forms.
// n <= 8 (12346 classes); larger universes come from external graph6
// streams.
std::vector<SmallGraph> enumerate_graphs(int n);

// Class counts 1, 2, 4, 11, 34, 156, 1044, 12346 for n = 1..8.
extern const long long graph_census[9];

}  // namespace orient
