#include "grksp/path.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace grksp {

bool has_loop(std::span<const VertexId> vertices) {
  if (vertices.size() < 16) {
    for (std::size_t i = 1; i < vertices.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j)
        if (vertices[i] == vertices[j]) return true;
    }
    return false;
  }
  std::vector<VertexId> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

double path_length(const Graph& g, std::span<const VertexId> vertices) {
  double length = 0.0;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    const double w = g.weight(vertices[i - 1], vertices[i]);
    if (std::isnan(w))
      throw std::invalid_argument("no edge " + std::to_string(vertices[i - 1]) + " -> " +
                                  std::to_string(vertices[i]));
    length += w;
  }
  return length;
}

}  // namespace grksp
