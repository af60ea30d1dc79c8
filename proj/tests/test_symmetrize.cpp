#include <doctest.h>

#include "orient/counting.hpp"
#include "orient/enumerate.hpp"
#include "orient/symmetrize.hpp"

using namespace orient;

namespace {

SmallGraph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return SmallGraph::from_edges(n, e);
}

}  // namespace

TEST_CASE("twins") {
    const SmallGraph t36 = turan_graph(6, 3);  // parts {0,1},{2,3},{4,5}
    CHECK(twins(t36, 0, 1));
    CHECK_FALSE(twins(t36, 0, 2));  // adjacent
    CHECK(twins(path_graph(3), 0, 2));
}

TEST_CASE("eccentric vertices") {
    CHECK(eccentric_vertices(turan_graph(6, 3)) == 0);
    CHECK(eccentric_vertices(path_graph(3)) == 0);
    CHECK(eccentric_vertices(path_graph(4)) == 0b1111);
}

TEST_CASE("replace_with_twins") {
    const SmallGraph p3 = path_graph(3);
    CHECK(replace_with_twins(p3, 0b101, 0) == p3);  // endpoints already twins

    // P4 = 0-1-2-3, S = {0,3}, v = 0: vertex 3 becomes adjacent only to 1
    const SmallGraph p4 = path_graph(4);
    const SmallGraph r = replace_with_twins(p4, 0b1001, 0);
    CHECK(r.adjacent(3, 1));
    CHECK_FALSE(r.adjacent(3, 2));
    CHECK(twins(r, 0, 3));

    CHECK(replace_with_twins(p4, 0b0001, 0) == p4);  // |S| = 1
    CHECK_THROWS_AS(replace_with_twins(p4, 0b0011, 0), std::invalid_argument);
}

TEST_CASE("best twin replacement never decreases the count (small exhaustive)") {
    const ForbiddenFamily s4 = ForbiddenFamily::strongly_connected(4);
    for (int n = 1; n <= 4; ++n)
        for (const SmallGraph& g : enumerate_graphs(n)) {
            const BigInt d = count_backtrack_serial(g, s4);
            const std::uint16_t vm = g.vertex_mask();
            for (std::uint32_t s = 1; s <= vm; ++s) {
                bool indep = true;
                for (int v : bits_of(s))
                    if (g.row(v) & s) indep = false;
                if (!indep) continue;
                const auto [v, replaced] = best_twin_replacement(g, static_cast<std::uint16_t>(s), s4);
                CHECK(((s >> v) & 1) == 1);
                CHECK(count_backtrack_serial(replaced, s4) >= d);
            }
        }
}

TEST_CASE("clone_twin") {
    const SmallGraph t36 = turan_graph(6, 3);
    CHECK(clone_twin(t36, 0, 1) == t36);  // already twins
    CHECK_THROWS_AS(clone_twin(complete_graph(4), 0, 1), std::invalid_argument);

    const ForbiddenFamily s4 = ForbiddenFamily::strongly_connected(4);
    const SmallGraph t35 = turan_graph(5, 3);  // parts {0,1},{2,3},{4}
    CHECK(clone_twin(t35, 0, 1) == t35);
    CHECK(count_backtrack_serial(clone_twin(t35, 0, 1), s4) == pow2(8));
}

TEST_CASE("delete_edge_step") {
    const SmallGraph g = SmallGraph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}});
    const SmallGraph cut = delete_edge_step(g, 3, 0, 1);
    CHECK(cut.m() == 2);
    CHECK_FALSE(cut.adjacent(0, 1));
    CHECK(cut.adjacent(0, 2));
    CHECK_THROWS_AS(delete_edge_step(g, 0, 1, 2), std::invalid_argument);   // u adjacent to v
    CHECK_THROWS_AS(delete_edge_step(g, 3, 0, 3), std::invalid_argument);   // not distinct
}

TEST_CASE("symmetrization sequences") {
    // complete multipartite input: zero steps
    CHECK(symmetrization_sequence(turan_graph(6, 3)).steps.empty());

    const auto p4_trace = symmetrization_sequence(path_graph(4));
    CHECK(p4_trace.steps.size() <= 4);
    CHECK(p4_trace.final_is_complete_multipartite);
    CHECK(p4_trace.edge_count_nondecreasing);
    CHECK(p4_trace.final_graph.m() >= 3);

    // exhaustive over all classes up to 6 vertices
    for (int n = 1; n <= 6; ++n)
        for (const SmallGraph& g : enumerate_graphs(n)) {
            const auto trace = symmetrization_sequence(g);
            CHECK(trace.final_is_complete_multipartite);
            CHECK(is_complete_multipartite(trace.final_graph));
            CHECK(trace.edge_count_nondecreasing);
            CHECK(trace.final_graph.m() >= g.m());
            int prev_ecc = 1 << 15;
            for (const auto& step : trace.steps) {
                const int before = std::popcount(eccentric_vertices(step.before));
                const int after = std::popcount(eccentric_vertices(step.after));
                CHECK(before < prev_ecc + 1);
                CHECK(after < before);               // strictly fewer eccentric vertices
                CHECK(step.after.m() >= step.before.m());  // per-step edge monotonicity
                prev_ecc = before;
            }
        }
}

TEST_CASE("trace serialization") {
    const auto trace = symmetrization_sequence(path_graph(4));
    const std::string line = trace.to_json_line();
    CHECK(line.find("\"final_is_complete_multipartite\":true") != std::string::npos);
    CHECK(line.find("\"steps\"") != std::string::npos);
}
