#include "orient/search.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>
#include <omp.h>

#include "orient/canonical.hpp"
#include "orient/enumerate.hpp"
#include "orient/graph6.hpp"

namespace orient {

std::string ExtremalSearchReport::to_json_line() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["family"] = family;
    j["max_count"] = dec(max_count);
    j["extremal_graphs"] = extremal_graphs;
    j["reference_value"] = dec(reference_value);
    j["matches_reference"] = matches_reference;
    j["unique_extremal"] = unique_extremal;
    j["graphs_scanned"] = graphs_scanned;
    j["elapsed_ms"] = elapsed_ms;
    return j.dump();
}

std::uint16_t greedy_independent_set(const SmallGraph& g) {
    std::vector<int> order(g.n());
    for (int v = 0; v < g.n(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
    std::uint16_t s = 0;
    for (int v : order)
        if ((g.row(v) & s) == 0) s |= static_cast<std::uint16_t>(1u << v);
    return s;
}

BigInt count_auto(const SmallGraph& g, const ForbiddenFamily& f, std::string* method) {
    if (f.order() > clique_number(g)) {
        if (method) *method = "backtrack";  // short-circuit inside the backtracker
        return count_backtrack(g, f);
    }
    if (g.m() <= 36) {
        if (method) *method = "backtrack";
        return count_backtrack(g, f);
    }
    if (method) *method = "independent-set-product";
    return count_via_independent_set(g, f, greedy_independent_set(g));
}

std::vector<PartitionSpec> partitions_of(int n) {
    std::vector<PartitionSpec> out;
    std::vector<int> cur;
    // descending parts, largest first
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int next = std::min(cap, remaining); next >= 1; --next) {
            cur.push_back(next);
            self(self, remaining - next, next);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

namespace {

ExtremalSearchReport finish_report(const std::vector<SmallGraph>& universe,
                                   const std::vector<BigInt>& counts, int n,
                                   const ForbiddenFamily& f,
                                   std::chrono::steady_clock::time_point started) {
    ExtremalSearchReport rep;
    rep.n = n;
    rep.family = f.name();
    rep.graphs_scanned = static_cast<long long>(universe.size());
    rep.max_count = 0;
    for (const auto& c : counts) rep.max_count = std::max(rep.max_count, c);
    for (std::size_t i = 0; i < universe.size(); ++i)
        if (counts[i] == rep.max_count) {
            const SmallGraph& g = universe[i];
            rep.extremal_graphs.push_back(
                graph6_encode(g.n() <= 11 ? canonical_graph(g) : g));
        }
    std::sort(rep.extremal_graphs.begin(), rep.extremal_graphs.end());
    rep.extremal_graphs.erase(
        std::unique(rep.extremal_graphs.begin(), rep.extremal_graphs.end()),
        rep.extremal_graphs.end());
    rep.unique_extremal = rep.extremal_graphs.size() == 1;
    rep.reference_value = pow2(static_cast<unsigned long long>(turan_edges(n, f.order() - 1)));
    rep.matches_reference = rep.max_count == rep.reference_value;
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               started)
                         .count();
    return rep;
}

}  // namespace

ExtremalSearchReport extremal_search_universe(const std::vector<SmallGraph>& universe, int n,
                                              const ForbiddenFamily& f,
                                              const std::string& checkpoint) {
    const auto started = std::chrono::steady_clock::now();
    if (universe.empty()) throw std::invalid_argument("extremal_search: empty universe");
    for (const auto& g : universe)
        if (g.n() != n) throw std::invalid_argument("extremal_search: universe has wrong order");
    std::vector<BigInt> counts(universe.size());
    std::vector<char> done(universe.size(), 0);

    const std::string header =
        "scan n=" + std::to_string(n) + " family=" + f.name() +
        " universe=" + std::to_string(universe.size());
    std::ofstream ck;
    if (!checkpoint.empty()) {
        std::ifstream in(checkpoint);
        std::string line;
        if (in && std::getline(in, line)) {
            if (line != header)
                throw std::invalid_argument("checkpoint belongs to a different scan: " + line);
            std::size_t idx;
            std::string value;
            while (in >> idx >> value) {
                if (idx >= universe.size()) continue;
                counts[idx] = BigInt(value);
                done[idx] = 1;
            }
        }
        ck.open(checkpoint, std::ios::app);
        if (!ck) throw std::runtime_error("cannot open checkpoint file: " + checkpoint);
        if (ck.tellp() == 0) ck << header << "\n";
    }

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(universe.size()); ++i) {
        if (done[i]) continue;
        const BigInt c = count_auto(universe[i], f);
        counts[i] = c;
        if (ck.is_open()) {
#pragma omp critical
            {
                ck << i << " " << dec(c) << "\n" << std::flush;
            }
        }
    }
    return finish_report(universe, counts, n, f, started);
}

ExtremalSearchReport extremal_search(int n, const ForbiddenFamily& f, SearchMode mode,
                                     bool long_run, const std::string& checkpoint) {
    std::vector<SmallGraph> universe;
    if (mode == SearchMode::all) {
        if (n > 8 || (n == 8 && !long_run))
            throw std::invalid_argument(
                "extremal_search: full scan limited to n <= 7 (n = 8 with long-run)");
        universe = enumerate_graphs(n);
    } else {
        if (n > 10)
            throw std::invalid_argument("extremal_search: multipartite scan limited to n <= 10");
        for (const auto& p : partitions_of(n)) universe.push_back(complete_multipartite(p));
    }
    return extremal_search_universe(universe, n, f, checkpoint);
}

}  // namespace orient
