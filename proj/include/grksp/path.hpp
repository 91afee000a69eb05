#pragma once

#include <compare>
#include <span>
#include <vector>

#include "grksp/graph.hpp"

namespace grksp {

struct Path {
  std::vector<VertexId> vertices;
  double length = 0.0;

  friend bool operator==(const Path&, const Path&) = default;
};

// Result order: ascending length, then lexicographic vertex sequence.
struct PathOrder {
  bool operator()(const Path& a, const Path& b) const {
    if (a.length != b.length) return a.length < b.length;
    return a.vertices < b.vertices;
  }
};

bool has_loop(std::span<const VertexId> vertices);
inline bool has_loop(const Path& p) { return has_loop(p.vertices); }

// Sum of edge weights accumulated from the first vertex onward. Throws
// std::invalid_argument when consecutive vertices are not joined by an edge.
double path_length(const Graph& g, std::span<const VertexId> vertices);

}  // namespace grksp
