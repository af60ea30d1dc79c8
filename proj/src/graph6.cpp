#include "orient/graph6.hpp"

#include <fstream>

namespace orient {

std::string graph6_encode(const SmallGraph& g) {
    const int n = g.n();
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

SmallGraph graph6_decode(std::string_view s) {
    if (s.empty()) throw Graph6Error("graph6: empty string", 0);
    std::size_t pos = 0;
    if (static_cast<unsigned char>(s[0]) == 126)
        throw Graph6Error("graph6: multi-byte vertex counts exceed the 16-vertex cap", 0);
    const int n = static_cast<unsigned char>(s[0]) - 63;
    if (n < 0 || static_cast<unsigned char>(s[0]) > 126)
        throw Graph6Error("graph6: bad vertex-count byte", 0);
    if (n == 0 || n > SmallGraph::max_vertices)
        throw Graph6Error("graph6: vertex count " + std::to_string(n) + " out of range [1,16]", 0);
    ++pos;

    const int nbits = n * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (s.size() != 1 + nbytes)
        throw Graph6Error("graph6: expected " + std::to_string(1 + nbytes) + " bytes, got " +
                              std::to_string(s.size()),
                          s.size() < 1 + nbytes ? s.size() : 1 + nbytes);

    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (std::size_t b = 0; b < nbytes; ++b, ++pos) {
        const int c = static_cast<unsigned char>(s[pos]) - 63;
        if (c < 0 || c > 63) throw Graph6Error("graph6: byte outside printable range", pos);
        for (int k = 5; k >= 0; --k, ++bit) {
            if (bit >= nbits) {
                if ((c >> k) & 1) throw Graph6Error("graph6: nonzero padding bits", pos);
                continue;
            }
            if ((c >> k) & 1) {
                // invert the column-major position
                int j = 1;
                int rem = bit;
                while (rem >= j) rem -= j, ++j;
                edges.emplace_back(rem, j);
            }
        }
    }
    return SmallGraph::from_edges(n, edges);
}

std::vector<SmallGraph> read_graph6_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::vector<SmallGraph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back(graph6_decode(line));
    }
    return out;
}

}  // namespace orient
