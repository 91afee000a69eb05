#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "grksp/graph.hpp"

namespace grksp {

// Edge-list text format:
//   n m directed
//   u v w        (m lines; undirected edges listed once)
// Blank lines and '#' comments are ignored. Weights are written in the
// shortest form that parses back to the same double.
void write_graph(const Graph& g, std::ostream& out);
Graph read_graph(std::istream& in);

void save_graph(const Graph& g, const std::filesystem::path& destination);
Graph load_graph(const std::filesystem::path& source);

// Shortest round-trip decimal form of a double.
std::string format_shortest(double value);

}  // namespace grksp
