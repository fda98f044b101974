#pragma once

#include <iosfwd>
#include <string>

#include "rdlab/graph.hpp"

namespace rdlab {

class Assignment;  // certificates.hpp

/// Edge-list text format: first line `n m`, then m lines `u v`.
/// Labels outside 0..n-1 are tolerated when the file uses exactly n
/// distinct labels; they are remapped onto dense ids in sorted order.
Graph parse_edgelist(std::istream& in);
Graph parse_edgelist(const std::string& text);
std::string to_edgelist(const Graph& g);

/// graph6 byte encoding (header-free, n <= 62 uses the single-byte order
/// prefix). Round-trips bit-exactly with other graph6 tooling.
std::string to_graph6(const Graph& g);
Graph parse_graph6(const std::string& line);

/// Reads a graph in the named format ("edgelist" or "graph6").
Graph parse_graph(const std::string& text, const std::string& format);

}  // namespace rdlab
