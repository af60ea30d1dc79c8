#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orient/bigint.hpp"
#include "orient/family.hpp"
#include "orient/orientation.hpp"
#include "orient/small_graph.hpp"

namespace orient {

struct CountReport {
    std::string graph6;
    std::string family;
    BigInt count;
    std::string method;  // naive | backtrack | independent-set-product
    double elapsed_ms = 0;

    std::string to_json_line() const;
};

// Full sweep of all 2^m orientations; m <= 25.
BigInt count_naive(const SmallGraph& g, const ForbiddenFamily& f);

// Pruned backtracking over edges in index order; after fixing edge e only
// the k-cliques whose final edge is e are checked.  m <= 36.  Families of
// order above the clique number short-circuit to 2^m.
BigInt count_backtrack_serial(const SmallGraph& g, const ForbiddenFamily& f);

// Same count; the first min(8,m) edges split the search into 2^p
// independent subproblems solved concurrently and summed in index order.
BigInt count_backtrack(const SmallGraph& g, const ForbiddenFamily& f);

// Sum over F-free orientations of H = G - S of the product of per-vertex
// extension counts (S must be independent).
BigInt count_via_independent_set(const SmallGraph& g, const ForbiddenFamily& f,
                                 std::uint16_t independent_set);

// c_F(v, H⃗): orientations of the edges from an external vertex v to its
// neighbors (mask over H's vertices) extending H⃗ without creating a
// forbidden clique.  Returns 0 when H⃗ itself is not F-free.
std::uint64_t extension_count_vertex(const Orientation& h, std::uint16_t neighbors,
                                     const ForbiddenFamily& f);

// c_F({u,v}, K⃗): K complete on k-1 vertices, u and v adjacent to each other
// and to all of K; counts F-free orientations of the 2(k-1)+1 new edges.
std::uint64_t extension_count_edge(const Orientation& k_orientation, const ForbiddenFamily& f);

// v⃗_{H,F}: one entry per F-free orientation of H = G[h_mask] in ascending
// bit order; entry = c_F(v, H⃗).
struct ExtensionVector {
    std::vector<std::uint64_t> orientations;
    std::vector<std::uint64_t> entries;
};
ExtensionVector extension_vector(const SmallGraph& g, std::uint16_t h_mask, int v,
                                 const ForbiddenFamily& f);

// Standard l_p value; exact power sums via lp_power_sum when p is integral.
double lp_norm(const std::vector<BigInt>& x, double p);
BigInt lp_power_sum(const std::vector<BigInt>& x, unsigned p);

struct HolderReport {
    BigInt lhs;          // ||pointwise product||_1, exact
    double rhs;          // prod_k ||x_k||_s
    BigInt lhs_pow;      // lhs^s
    BigInt rhs_pow;      // prod_k sum_t x_k(t)^s
    bool holds = false;  // lhs_pow <= rhs_pow (exact verdict)
    bool equality = false;  // vectors pairwise proportional
    // x_k = (num_k/den_k) * x_reference, present when equality holds and
    // some vector is nonzero
    std::optional<std::pair<std::size_t, std::vector<std::pair<BigInt, BigInt>>>> witness;
};

// Generalized Hoelder check on s equal-length nonnegative integer vectors;
// the verdict compares s-th powers so no floating point is involved.
HolderReport holder_check(const std::vector<std::vector<BigInt>>& xs);

}  // namespace orient
