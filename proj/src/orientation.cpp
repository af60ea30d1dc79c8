#include "orient/orientation.hpp"

#include <algorithm>
#include <stdexcept>

#include "orient/graph6.hpp"

namespace orient {

Orientation::Orientation(const SmallGraph& g, std::uint64_t b) : graph(&g), bits(b) {
    if (g.m() > 64) throw std::invalid_argument("Orientation: more than 64 edges");
    if (g.m() < 64 && (b >> g.m()) != 0)
        throw std::invalid_argument("Orientation: bits beyond edge count");
}

bool Orientation::directed(int u, int v) const {
    const int e = graph->edge_pos(u, v);
    if (e < 0) throw std::invalid_argument("Orientation::directed: not an edge");
    const bool forward = (bits >> e) & 1;
    return (u < v) == forward;
}

std::string orientation_to_text(const Orientation& o) {
    const int m = o.graph->m();
    const int digits = (m + 3) / 4;
    static const char* hexdig = "0123456789abcdef";
    std::string hex;
    for (int d = digits - 1; d >= 0; --d) hex.push_back(hexdig[(o.bits >> (4 * d)) & 0xf]);
    return graph6_encode(*o.graph) + ":" + hex;
}

std::uint64_t orientation_bits_from_text(const SmallGraph& g, const std::string& hex) {
    const int m = g.m();
    const int digits = (m + 3) / 4;
    if (static_cast<int>(hex.size()) != digits)
        throw std::invalid_argument("orientation text: expected " + std::to_string(digits) +
                                    " hex digits, got " + std::to_string(hex.size()));
    std::uint64_t bits = 0;
    for (char c : hex) {
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else throw std::invalid_argument("orientation text: bad hex digit");
        bits = (bits << 4) | static_cast<std::uint64_t>(v);
    }
    if (m < 64 && (bits >> m) != 0)
        throw std::invalid_argument("orientation text: bits beyond edge count");
    return bits;
}

Tournament Tournament::from_mask(int k, std::uint64_t mask) {
    if (k < 1 || k > 16) throw std::invalid_argument("Tournament: order out of range");
    Tournament t;
    t.k_ = k;
    for (int i = 0; i < k; ++i) t.labels_[i] = i;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const bool fwd = (mask >> pair_pos(k, i, j)) & 1;
            if (fwd) t.out_[i] |= static_cast<std::uint16_t>(1u << j);
            else t.out_[j] |= static_cast<std::uint16_t>(1u << i);
        }
    return t;
}

std::uint64_t Tournament::mask() const {
    std::uint64_t m = 0;
    for (int i = 0; i < k_; ++i)
        for (int j = i + 1; j < k_; ++j)
            if (beats(i, j)) m |= 1ull << pair_pos(k_, i, j);
    return m;
}

Tournament induced_subtournament(const Orientation& o, std::uint16_t vertex_set) {
    const auto verts = bits_of(vertex_set);
    const int k = static_cast<int>(verts.size());
    if (k < 1) throw std::invalid_argument("induced_subtournament: empty vertex set");
    Tournament t;
    t.k_ = k;
    for (int a = 0; a < k; ++a) t.labels_[a] = verts[a];
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            if (!o.graph->adjacent(verts[a], verts[b]))
                throw std::invalid_argument("induced_subtournament: vertex set is not a clique");
            if (o.directed(verts[a], verts[b]))
                t.out_[a] |= static_cast<std::uint16_t>(1u << b);
            else
                t.out_[b] |= static_cast<std::uint16_t>(1u << a);
        }
    return t;
}

bool is_strongly_connected(const Tournament& t) {
    const int k = t.size();
    const std::uint16_t all = static_cast<std::uint16_t>((1u << k) - 1u);
    // forward and backward reachability from vertex 0
    for (int dir = 0; dir < 2; ++dir) {
        std::uint16_t reach = 1;
        for (;;) {
            std::uint16_t next = reach;
            for (int v : bits_of(reach))
                next |= dir == 0 ? t.out_row(v)
                                 : static_cast<std::uint16_t>(~t.out_row(v) & all & ~(1u << v));
            if (next == reach) break;
            reach = next;
        }
        if (reach != all) return false;
    }
    return true;
}

bool is_transitive(const Tournament& t) {
    const int k = t.size();
    std::uint32_t seen = 0;
    for (int v = 0; v < k; ++v) seen |= 1u << t.out_degree(v);
    return seen == (1u << k) - 1u;
}

bool has_source(const Tournament& t) {
    for (int v = 0; v < t.size(); ++v)
        if (t.out_degree(v) == t.size() - 1) return true;
    return false;
}

std::vector<int> hamilton_path(const Tournament& t) {
    const int k = t.size();
    std::vector<int> path;  // local indices
    path.reserve(k);
    for (int v = 0; v < k; ++v) {
        std::size_t pos = path.size();
        for (std::size_t i = 0; i < path.size(); ++i)
            if (t.beats(v, path[i])) {
                pos = i;
                break;
            }
        path.insert(path.begin() + pos, v);
    }
    std::vector<int> out;
    for (int v : path) out.push_back(t.label(v));
    return out;
}

namespace {

// directed triangle with the lexicographically smallest vertex triple
std::vector<int> seed_triangle(const Tournament& t) {
    const int k = t.size();
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            for (int c = b + 1; c < k; ++c) {
                if (t.beats(a, b) && t.beats(b, c) && t.beats(c, a)) return {a, b, c};
                if (t.beats(a, c) && t.beats(c, b) && t.beats(b, a)) return {a, c, b};
            }
    return {};
}

bool cycle_dfs(const Tournament& t, std::vector<int>& seq, std::uint16_t used) {
    const int k = t.size();
    if (static_cast<int>(seq.size()) == k) return t.beats(seq.back(), seq.front());
    for (int v = 0; v < k; ++v) {
        if ((used >> v) & 1 || !t.beats(seq.back(), v)) continue;
        seq.push_back(v);
        if (cycle_dfs(t, seq, static_cast<std::uint16_t>(used | (1u << v)))) return true;
        seq.pop_back();
    }
    return false;
}

}  // namespace

std::vector<int> hamilton_cycle(const Tournament& t) {
    const int k = t.size();
    if (k < 3 || !is_strongly_connected(t))
        throw std::invalid_argument("hamilton_cycle: tournament is not strongly connected");

    std::vector<int> cyc = seed_triangle(t);
    while (static_cast<int>(cyc.size()) < k && !cyc.empty()) {
        std::uint16_t used = 0;
        for (int v : cyc) used |= static_cast<std::uint16_t>(1u << v);
        const std::size_t len = cyc.size();
        bool grew = false;

        // absorb one vertex between consecutive cycle vertices
        for (int u = 0; u < k && !grew; ++u) {
            if ((used >> u) & 1) continue;
            for (std::size_t i = 0; i < len; ++i) {
                if (t.beats(cyc[i], u) && t.beats(u, cyc[(i + 1) % len])) {
                    cyc.insert(cyc.begin() + i + 1, u);
                    grew = true;
                    break;
                }
            }
        }
        if (grew) continue;

        // every outside vertex now dominates the cycle or is dominated by
        // it; strong connectivity gives an edge y -> x from the dominated
        // side to the dominating side, absorbing two vertices at once
        std::vector<int> dominating, dominated;
        for (int u = 0; u < k; ++u) {
            if ((used >> u) & 1) continue;
            if (t.beats(u, cyc[0])) dominating.push_back(u);
            else dominated.push_back(u);
        }
        for (int y : dominated) {
            for (int x : dominating)
                if (t.beats(y, x)) {
                    // cyc[0] -> y -> x -> cyc[1]
                    cyc.insert(cyc.begin() + 1, x);
                    cyc.insert(cyc.begin() + 1, y);
                    grew = true;
                    break;
                }
            if (grew) break;
        }
        if (!grew) break;  // cannot happen for a strongly connected tournament
    }

    if (static_cast<int>(cyc.size()) != k) {
        if (k > 8) throw std::runtime_error("hamilton_cycle: absorption stalled");
        std::vector<int> seq = {0};
        if (!cycle_dfs(t, seq, 1)) throw std::runtime_error("hamilton_cycle: no cycle found");
        cyc = seq;
    }

    std::vector<int> out;
    for (int v : cyc) out.push_back(t.label(v));
    return out;
}

std::map<int, std::vector<int>> sc_subtournament_chain(const Tournament& t) {
    const int k = t.size();
    if (k < 3 || !is_strongly_connected(t))
        throw std::invalid_argument("sc_subtournament_chain: precondition violated");

    // local Hamilton cycle
    std::vector<int> cyc;
    {
        std::vector<int> labeled = hamilton_cycle(t);
        std::array<int, 16> local{};
        for (int v = 0; v < k; ++v) local[t.label(v)] = v;
        for (int lab : labeled) cyc.push_back(local[lab]);
    }

    std::map<int, std::vector<int>> chain;
    auto record = [&](int level, const std::vector<int>& verts) {
        std::vector<int> labs;
        for (int v : verts) labs.push_back(t.label(v));
        std::sort(labs.begin(), labs.end());
        chain[level] = labs;
    };

    int len = k;
    for (;;) {
        record(len, cyc);
        if (len == 3) break;
        // chord (x_i, x_{i+2}) lets us drop x_{i+1} and keep a Hamilton cycle
        int drop = -1;
        for (int i = 0; i < len && drop < 0; ++i)
            if (t.beats(cyc[i], cyc[(i + 2) % len])) drop = (i + 1) % len;
        if (drop >= 0) {
            cyc.erase(cyc.begin() + drop);
            --len;
            continue;
        }
        // chordless case: every (x_{i+2}, x_i) points backward, so every
        // prefix of the cycle order induces a strongly connected tournament
        for (int l = len - 1; l >= 3; --l)
            record(l, std::vector<int>(cyc.begin(), cyc.begin() + l));
        break;
    }
    return chain;
}

std::uint64_t count_sc_orientations(int k) {
    if (k < 3 || k > 6)
        throw std::invalid_argument("count_sc_orientations: k must be in [3,6]");
    const int m = k * (k - 1) / 2;
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask)
        if (is_strongly_connected(Tournament::from_mask(k, mask))) ++count;
    return count;
}

}  // namespace orient
