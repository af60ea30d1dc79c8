#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orient/orientation.hpp"
#include "orient/small_graph.hpp"

namespace orient {

enum class FamilyKind {
    strongly_connected,  // S_k
    non_transitive,      // R_k
    no_source,           // U_k
    explicit_set,        // explicit list of tournaments on k vertices
};

// A predicate-defined family of forbidden k-vertex tournaments, with a
// precomputed lookup table over all 2^C(k,2) tournament masks so the
// counting engine's clique checks are a gather plus one load.
class ForbiddenFamily {
public:
    static ForbiddenFamily strongly_connected(int k);
    static ForbiddenFamily non_transitive(int k);
    static ForbiddenFamily no_source(int k);
    static ForbiddenFamily cyclic_triangle();  // == strongly_connected(3), named c3

    // Members are tournament masks on k vertices; matching is up to
    // isomorphism (the whole relabeling orbit of each member is marked).
    static ForbiddenFamily explicit_set(int k, const std::vector<std::uint64_t>& members);

    // "s3".."s6", "r4".."r6", "u4", "c3", or "explicit:FILE" where FILE
    // holds one tournament per line in orientation text form.
    static ForbiddenFamily parse(const std::string& name);

    int order() const { return k_; }
    FamilyKind kind() const { return kind_; }
    const std::string& name() const { return name_; }

    bool forbidden_mask(std::uint64_t tournament_mask) const { return table_[tournament_mask]; }
    bool forbidden(const Tournament& t) const;

private:
    ForbiddenFamily(int k, FamilyKind kind, std::string name);

    int k_;
    FamilyKind kind_;
    std::string name_;
    std::vector<char> table_;
};

// No k-clique induces a forbidden tournament.  Cliques are checked in
// ascending lexicographic order with a short-circuit on the first hit.
bool is_family_free(const Orientation& o, const ForbiddenFamily& f);

}  // namespace orient
