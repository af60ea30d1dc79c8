#pragma once

#include <string>
#include <vector>

#include "orient/bigint.hpp"
#include "orient/counting.hpp"
#include "orient/family.hpp"
#include "orient/small_graph.hpp"

namespace orient {

enum class SearchMode { all, multipartite };

struct ExtremalSearchReport {
    int n = 0;
    std::string family;
    BigInt max_count;
    std::vector<std::string> extremal_graphs;  // canonical graph6, sorted
    BigInt reference_value;                    // 2^{t_{k-1}(n)}
    bool matches_reference = false;
    bool unique_extremal = false;
    long long graphs_scanned = 0;
    double elapsed_ms = 0;

    std::string to_json_line() const;
};

// Count with the cheapest valid method: 2^m when the family order exceeds
// the clique number, pruned backtracking up to 36 edges, and the
// independent-set product (over a greedy maximum independent set) beyond.
BigInt count_auto(const SmallGraph& g, const ForbiddenFamily& f, std::string* method = nullptr);

// mode=all scans one representative per isomorphism class (n <= 7, n = 8
// only with long_run); mode=multipartite scans every complete multipartite
// graph (n <= 10).  Graphs are counted concurrently; the report is a pure
// function of the inputs.
ExtremalSearchReport extremal_search(int n, const ForbiddenFamily& f, SearchMode mode,
                                     bool long_run = false, const std::string& checkpoint = "");

// Same report over a caller-provided universe (e.g. an external graph6
// stream); all graphs must have n vertices.  A non-empty checkpoint path
// makes the scan resumable: per-graph counts are appended as they finish
// and already-recorded indices are skipped on restart.
ExtremalSearchReport extremal_search_universe(const std::vector<SmallGraph>& universe, int n,
                                              const ForbiddenFamily& f,
                                              const std::string& checkpoint = "");

// All partitions of n, each as a descending part list.
std::vector<PartitionSpec> partitions_of(int n);

// Greedy maximum-effort independent set: vertices tried in descending
// non-degree order, deterministic ties.
std::uint16_t greedy_independent_set(const SmallGraph& g);

}  // namespace orient
