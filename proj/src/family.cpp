#include "orient/family.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "orient/graph6.hpp"

namespace orient {

namespace {

std::uint64_t permute_mask(int k, std::uint64_t mask, const std::array<int, 16>& perm) {
    // perm[old] = new; direction is carried along
    std::uint64_t out = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const bool fwd = (mask >> pair_pos(k, i, j)) & 1;
            const int a = perm[i], b = perm[j];
            // oriented i -> j iff fwd; translate to the (min,max) convention
            const bool lo_to_hi = (a < b) == fwd;
            if (lo_to_hi) out |= 1ull << pair_pos(k, std::min(a, b), std::max(a, b));
        }
    return out;
}

}  // namespace

ForbiddenFamily::ForbiddenFamily(int k, FamilyKind kind, std::string name)
    : k_(k), kind_(kind), name_(std::move(name)) {
    if (k < 3 || k > 6) throw std::invalid_argument("ForbiddenFamily: order must be in [3,6]");
    table_.assign(1ull << (k * (k - 1) / 2), 0);
}

ForbiddenFamily ForbiddenFamily::strongly_connected(int k) {
    ForbiddenFamily f(k, FamilyKind::strongly_connected, "s" + std::to_string(k));
    for (std::uint64_t m = 0; m < f.table_.size(); ++m)
        f.table_[m] = is_strongly_connected(Tournament::from_mask(k, m));
    return f;
}

ForbiddenFamily ForbiddenFamily::non_transitive(int k) {
    ForbiddenFamily f(k, FamilyKind::non_transitive, "r" + std::to_string(k));
    for (std::uint64_t m = 0; m < f.table_.size(); ++m)
        f.table_[m] = !is_transitive(Tournament::from_mask(k, m));
    return f;
}

ForbiddenFamily ForbiddenFamily::no_source(int k) {
    ForbiddenFamily f(k, FamilyKind::no_source, "u" + std::to_string(k));
    for (std::uint64_t m = 0; m < f.table_.size(); ++m)
        f.table_[m] = !has_source(Tournament::from_mask(k, m));
    return f;
}

ForbiddenFamily ForbiddenFamily::cyclic_triangle() {
    ForbiddenFamily f = strongly_connected(3);
    f.name_ = "c3";
    return f;
}

ForbiddenFamily ForbiddenFamily::explicit_set(int k, const std::vector<std::uint64_t>& members) {
    ForbiddenFamily f(k, FamilyKind::explicit_set, "explicit" + std::to_string(k));
    // mark the full relabeling orbit of every member; the orbit minimum
    // doubles as a canonical form for the pairwise-distinctness check
    std::vector<std::uint64_t> canon;
    for (std::uint64_t m : members) {
        if (m >= f.table_.size())
            throw std::invalid_argument("explicit_set: member mask out of range for order k");
        std::array<int, 16> p{};
        for (int i = 0; i < k; ++i) p[i] = i;
        std::uint64_t least = ~0ull;
        do {
            const std::uint64_t img = permute_mask(k, m, p);
            f.table_[img] = 1;
            least = std::min(least, img);
        } while (std::next_permutation(p.begin(), p.begin() + k));
        canon.push_back(least);
    }
    std::sort(canon.begin(), canon.end());
    if (std::adjacent_find(canon.begin(), canon.end()) != canon.end())
        throw std::invalid_argument("explicit_set: members must be pairwise non-isomorphic");
    return f;
}

ForbiddenFamily ForbiddenFamily::parse(const std::string& name) {
    if (name == "c3") return cyclic_triangle();
    if (name.size() == 2 && (name[0] == 's' || name[0] == 'r' || name[0] == 'u') &&
        name[1] >= '3' && name[1] <= '6') {
        const int k = name[1] - '0';
        if (name[0] == 's') return strongly_connected(k);
        if (name[0] == 'r') {
            if (k < 4) throw std::invalid_argument("family: r-k needs k >= 4");
            return non_transitive(k);
        }
        if (k != 4) throw std::invalid_argument("family: only u4 is built in");
        return no_source(4);
    }
    if (name.starts_with("explicit:")) {
        const std::string path = name.substr(9);
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("family: cannot open " + path);
        std::vector<std::uint64_t> members;
        int k = -1;
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            const auto colon = line.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("family file: missing ':' in " + line);
            const SmallGraph g = graph6_decode(line.substr(0, colon));
            if (g.m() != g.n() * (g.n() - 1) / 2)
                throw std::invalid_argument("family file: member graph is not complete");
            if (k < 0) k = g.n();
            if (g.n() != k)
                throw std::invalid_argument("family file: members must share one order");
            members.push_back(orientation_bits_from_text(g, line.substr(colon + 1)));
        }
        if (members.empty()) throw std::invalid_argument("family file: no members");
        return explicit_set(k, members);
    }
    throw std::invalid_argument("unknown family name: " + name +
                                " (expected s3..s6, r4..r6, u4, c3, explicit:FILE)");
}

bool ForbiddenFamily::forbidden(const Tournament& t) const {
    if (t.size() != k_) return false;
    return forbidden_mask(t.mask());
}

bool is_family_free(const Orientation& o, const ForbiddenFamily& f) {
    const SmallGraph& g = *o.graph;
    const int k = f.order();
    if (k > g.n()) return true;
    for (std::uint16_t clique : cliques_of_size(g, k)) {
        const auto verts = bits_of(clique);
        std::uint64_t mask = 0;
        int p = 0;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b, ++p) {
                const int e = g.edge_pos(verts[a], verts[b]);
                if ((o.bits >> e) & 1) mask |= 1ull << p;
            }
        if (f.forbidden_mask(mask)) return false;
    }
    return true;
}

}  // namespace orient
