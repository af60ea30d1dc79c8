#include "orient/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <omp.h>

#include "orient/canonical.hpp"

namespace orient {

const long long graph_census[9] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};

namespace {

std::vector<std::uint64_t> extend_level(const std::vector<std::uint64_t>& parents, int n) {
    // children of an (n-1)-vertex parent: attach vertex n-1 with every neighborhood
    const int nsub = 1 << (n - 1);
    std::vector<std::set<std::uint64_t>> found(omp_get_max_threads());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t pi = 0; pi < parents.size(); ++pi) {
        auto& local = found[omp_get_thread_num()];
        const SmallGraph parent = graph_from_cert({n - 1, parents[pi]});
        for (int nb = 0; nb < nsub; ++nb) {
            std::vector<std::pair<int, int>> edges = parent.edges();
            for (int v : bits_of(static_cast<std::uint32_t>(nb))) edges.emplace_back(v, n - 1);
            const SmallGraph child = SmallGraph::from_edges(n, edges);
            local.insert(canonical_form(child).bits);
        }
    }
    std::set<std::uint64_t> merged;
    for (auto& local : found) merged.insert(local.begin(), local.end());
    return {merged.begin(), merged.end()};
}

}  // namespace

std::vector<SmallGraph> enumerate_graphs(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_graphs: n must be positive");
    if (n > 8)
        throw std::invalid_argument(
            "enumerate_graphs: n > 8 exceeds the enumeration budget; supply a graph6 stream");
    std::vector<std::uint64_t> certs = {0};  // the 1-vertex graph
    for (int level = 2; level <= n; ++level) certs = extend_level(certs, level);
    std::vector<SmallGraph> out;
    out.reserve(certs.size());
    for (std::uint64_t c : certs) out.push_back(graph_from_cert({n, c}));
    return out;
}

}  // namespace orient
