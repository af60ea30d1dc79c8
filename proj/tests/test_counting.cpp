#include <doctest.h>

#include <random>

#include "orient/counting.hpp"
#include "orient/enumerate.hpp"
#include "orient/graph6.hpp"
#include "orient/search.hpp"

using namespace orient;

namespace {

const ForbiddenFamily& s4() {
    static const ForbiddenFamily f = ForbiddenFamily::strongly_connected(4);
    return f;
}
const ForbiddenFamily& s5() {
    static const ForbiddenFamily f = ForbiddenFamily::strongly_connected(5);
    return f;
}
const ForbiddenFamily& c3() {
    static const ForbiddenFamily f = ForbiddenFamily::cyclic_triangle();
    return f;
}
const ForbiddenFamily& r4() {
    static const ForbiddenFamily f = ForbiddenFamily::non_transitive(4);
    return f;
}
const ForbiddenFamily& u4() {
    static const ForbiddenFamily f = ForbiddenFamily::no_source(4);
    return f;
}

std::vector<std::uint16_t> maximal_independent_sets(const SmallGraph& g) {
    std::vector<std::uint16_t> out;
    const std::uint16_t vm = g.vertex_mask();
    for (std::uint32_t s = 1; s <= vm; ++s) {
        bool ok = true;
        for (int v : bits_of(s))
            if (g.row(v) & s) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (int v : bits_of(static_cast<std::uint16_t>(vm & ~s)))
            if ((g.row(v) & s) == 0) {
                ok = false;
                break;
            }
        if (ok) out.push_back(static_cast<std::uint16_t>(s));
    }
    return out;
}

}  // namespace

TEST_CASE("naive counting reproduces the paper's headline values") {
    CHECK(count_naive(complete_graph(4), s4()) == 40);
    CHECK(count_naive(complete_graph(5), s4()) == 240);
    // K_k-free graphs admit every orientation
    CHECK(count_naive(turan_graph(5, 3), s4()) == pow2(8));
    CHECK(count_naive(turan_graph(6, 3), s4()) == pow2(12));
    CHECK_THROWS_AS(count_naive(complete_graph(8), s4()), std::invalid_argument);
}

TEST_CASE("backtracking equals naive and handles the larger paper instances") {
    CHECK(count_backtrack(turan_graph(5, 3), s4()) == 256);
    CHECK(count_backtrack(complete_graph(5), c3()) == 120);  // transitive only
    const BigInt s5k6 = count_backtrack(complete_graph(6), s5());
    CHECK(s5k6 == 3920);  // frozen from the naive sweep; paper bounds it by 7824 < 2^13
    CHECK(s5k6 < pow2(turan_edges(6, 4)));
    // short-circuit beyond the clique number, even past the edge budget
    CHECK(count_backtrack(turan_graph(16, 3), s4()) == pow2(turan_edges(16, 3)));
    CHECK_THROWS_AS(count_backtrack(complete_graph(10), s4()), std::invalid_argument);
}

TEST_CASE("serial and prefix-split parallel backtracking agree") {
    const SmallGraph samples[] = {complete_graph(6), complete_graph(7), turan_graph(8, 4),
                                  turan_graph(7, 3)};
    for (const SmallGraph& g : samples)
        for (const ForbiddenFamily* f : {&s4(), &c3()})
            CHECK(count_backtrack_serial(g, *f) == count_backtrack(g, *f));
}

TEST_CASE("independent-set product equals backtracking") {
    // one full part of T3(6)
    CHECK(count_via_independent_set(turan_graph(6, 3), s4(), 0b000011) == pow2(12));
    // empty S falls back to plain counting
    CHECK(count_via_independent_set(complete_graph(5), s4(), 0) == 240);
    // K4 plus an isolated vertex: the isolated vertex contributes a factor 1
    const SmallGraph k4iso =
        SmallGraph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(count_via_independent_set(k4iso, s4(), 0b10000) == 40);
    CHECK_THROWS_AS(count_via_independent_set(complete_graph(4), s4(), 0b0011),
                    std::invalid_argument);

    // exhaustive: every maximal independent set of every n <= 4 class
    for (int n = 1; n <= 4; ++n)
        for (const SmallGraph& g : enumerate_graphs(n)) {
            const BigInt want = count_backtrack_serial(g, s4());
            for (std::uint16_t s : maximal_independent_sets(g))
                CHECK(count_via_independent_set(g, s4(), s) == want);
        }
}

TEST_CASE("vertex extension counts") {
    const SmallGraph k3 = complete_graph(3);
    // transitive triangle: 6 of the 8 extensions stay S4-free
    CHECK(extension_count_vertex(Orientation(k3, 0b111), 0b111, s4()) == 6);
    // cyclic triangle: only 2
    CHECK(extension_count_vertex(Orientation(k3, 0b101), 0b111, s4()) == 2);
    // no edges into K: the empty extension
    CHECK(extension_count_vertex(Orientation(k3, 0b111), 0b000, s4()) == 1);
}

TEST_CASE("edge extension counts") {
    const SmallGraph k3 = complete_graph(3);
    CHECK(extension_count_edge(Orientation(k3, 0b101), s4()) == 6);  // cyclic triangle
    const std::uint64_t tr = extension_count_edge(Orientation(k3, 0b111), s4());
    CHECK(tr == 38);      // frozen from enumerating all 2^7 extensions
    CHECK(tr < 2 * 3 * 8);  // the 2*3*2^(2k-5) bound at k = 4
    CHECK_THROWS_AS(extension_count_edge(Orientation(complete_graph(4), 0), s4()),
                    std::invalid_argument);  // |K| must be k-1
}

TEST_CASE("extension vectors") {
    // H edgeless on two vertices, v adjacent to both: single orientation, 4 ways
    const SmallGraph g1 = SmallGraph::from_edges(3, {{0, 2}, {1, 2}});
    const auto ev1 = extension_vector(g1, 0b011, 2, s4());
    REQUIRE(ev1.entries.size() == 1);
    CHECK(ev1.entries[0] == 4);

    // H = K3 inside K4: all 8 orientations are S4-free; transitive ones
    // extend 6 ways, cyclic ones (bits 2 and 5) extend 2 ways
    const SmallGraph k4 = complete_graph(4);
    const auto ev2 = extension_vector(k4, 0b0111, 3, s4());
    REQUIRE(ev2.entries.size() == 8);
    const std::vector<std::uint64_t> expect = {6, 6, 2, 6, 6, 2, 6, 6};
    CHECK(ev2.entries == expect);

    // v with no neighbors in H: all entries 1
    const SmallGraph k3iso = SmallGraph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}});
    const auto ev3 = extension_vector(k3iso, 0b0111, 3, s4());
    REQUIRE(ev3.entries.size() == 8);
    for (std::uint64_t e : ev3.entries) CHECK(e == 1);
}

TEST_CASE("lp norms") {
    CHECK(lp_norm({3, 4}, 2.0) == doctest::Approx(5.0));
    CHECK(lp_norm(std::vector<BigInt>(7, 1), 3.0) == doctest::Approx(std::pow(7.0, 1.0 / 3)));
    const std::vector<BigInt> k3vec = {6, 6, 6, 6, 6, 6, 2, 2};
    CHECK(lp_power_sum(k3vec, 3) == 1312);
    CHECK(lp_norm(k3vec, 3.0) == doctest::Approx(std::cbrt(1312.0)));
    CHECK_THROWS_AS(lp_norm({1}, 0.0), std::invalid_argument);
}

TEST_CASE("holder checks") {
    {
        const auto rep = holder_check({{1, 2}, {1, 2}});
        CHECK(rep.lhs == 5);
        CHECK(rep.rhs == doctest::Approx(5.0));
        CHECK(rep.holds);
        CHECK(rep.equality);
        CHECK(rep.lhs_pow == rep.rhs_pow);
        REQUIRE(rep.witness.has_value());
    }
    {
        const auto rep = holder_check({{1, 0}, {0, 1}});
        CHECK(rep.lhs == 0);
        CHECK(rep.rhs == doctest::Approx(1.0));
        CHECK(rep.holds);
        CHECK_FALSE(rep.equality);
    }
    CHECK_THROWS_AS(holder_check({{1, 2}, {1}}), std::invalid_argument);

    std::mt19937 rng(99);
    for (int it = 0; it < 1000; ++it) {
        const int s = 2 + static_cast<int>(rng() % 2);
        const int len = 1 + static_cast<int>(rng() % 6);
        std::vector<std::vector<BigInt>> xs(s, std::vector<BigInt>(len));
        for (auto& x : xs)
            for (auto& e : x) e = static_cast<int>(rng() % 15);
        const auto rep = holder_check(xs);
        CHECK(rep.holds);
        if (rep.equality) CHECK(rep.lhs_pow == rep.rhs_pow);
    }
}

TEST_CASE("oracle equivalence and monotonicity across families") {
    const ForbiddenFamily* fams[] = {&s4(), &s5(), &r4(), &u4(), &c3()};
    for (int n = 1; n <= 4; ++n)
        for (const SmallGraph& g : enumerate_graphs(n))
            for (const ForbiddenFamily* f : fams) {
                const BigInt naive = count_naive(g, *f);
                CHECK(count_backtrack_serial(g, *f) == naive);
                CHECK(count_backtrack(g, *f) == naive);
            }
    // S4 ⊂ R4, so forbidding more leaves fewer orientations
    for (int n = 1; n <= 5; ++n)
        for (const SmallGraph& g : enumerate_graphs(n))
            CHECK(count_backtrack_serial(g, r4()) <= count_backtrack_serial(g, s4()));
}

TEST_CASE("count reports serialize one JSON object per line") {
    CountReport rep;
    rep.graph6 = graph6_encode(complete_graph(4));
    rep.family = "s4";
    rep.count = 40;
    rep.method = "backtrack";
    rep.elapsed_ms = 1.5;
    const std::string line = rep.to_json_line();
    CHECK(line.find("\"count\":\"40\"") != std::string::npos);
    CHECK(line.find("\"family\":\"s4\"") != std::string::npos);
    CHECK(line.find('\n') == std::string::npos);
}
