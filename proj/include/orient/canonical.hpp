#pragma once

#include <array>
#include <cstdint>

#include "orient/small_graph.hpp"

namespace orient {

// Lexicographically minimal upper-triangle bitstring over all vertex
// relabelings, bits in graph6 column-major order with the first bit in the
// most significant position, so integer order equals lexicographic order.
// Exact for every n it accepts (n <= 11 so the cert fits one word).
struct CanonicalForm {
    int n = 0;
    std::uint64_t bits = 0;

    auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const SmallGraph& g);

// Representative graph whose adjacency equals the cert.
SmallGraph canonical_graph(const SmallGraph& g);
SmallGraph graph_from_cert(const CanonicalForm& c);

// perm[old] = new position.
SmallGraph relabel(const SmallGraph& g, const std::array<int, 16>& perm);

bool isomorphic(const SmallGraph& a, const SmallGraph& b);

}  // namespace orient
