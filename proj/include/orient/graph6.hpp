#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "orient/small_graph.hpp"

namespace orient {

// Malformed graph6 input; offset is the byte position of the first bad byte.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Header-free graph6: N(n) = chr(n+63) for n <= 62, then the upper triangle
// in column-major order ((0,1),(0,2),(1,2),(0,3),...), 6 bits per printable
// byte, zero-padded.
std::string graph6_encode(const SmallGraph& g);
SmallGraph graph6_decode(std::string_view s);

// One graph6 string per line, LF-terminated.  Blank lines are skipped.
std::vector<SmallGraph> read_graph6_lines(const std::string& path);

}  // namespace orient
