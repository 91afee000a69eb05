#pragma once

// Shared test graphs and an enumeration oracle that is independent of the
// library's searchers.

#include <algorithm>
#include <functional>
#include <limits>
#include <vector>

#include "grksp/graph.hpp"

namespace grksp::testing {

// Diamond: 0-1-3 (length 2) and 0-2-3 (length 3).
inline Graph diamond() {
  const std::vector<Edge> edges{{0, 1, 1.0}, {1, 3, 1.0}, {0, 2, 1.0}, {2, 3, 2.0}};
  return Graph::build(4, false, edges);
}

// Diamond plus a pendant vertex 4 hanging off vertex 1 with weight 10. The
// by-way path through 4 is 0-1-4-1-3 and contains a loop.
inline Graph pendant() {
  const std::vector<Edge> edges{{0, 1, 1.0}, {1, 3, 1.0}, {0, 2, 1.0}, {2, 3, 2.0}, {1, 4, 10.0}};
  return Graph::build(5, false, edges);
}

inline Graph path3() {
  const std::vector<Edge> edges{{0, 1, 1.0}, {1, 2, 1.0}};
  return Graph::build(3, false, edges);
}

// Every simple path starting at source, reported as (vertices, length with
// the length accumulated from the source).
inline void for_each_simple_path(const Graph& g, VertexId source,
                                 const std::function<void(const std::vector<VertexId>&, double)>& visit) {
  std::vector<VertexId> stack{source};
  std::vector<bool> used(g.vertex_count(), false);
  used[source] = true;
  std::function<void(double)> dfs = [&](double length) {
    visit(stack, length);
    for (const Arc& a : g.out_arcs(stack.back())) {
      if (used[a.to]) continue;
      used[a.to] = true;
      stack.push_back(a.to);
      dfs(length + a.weight);
      stack.pop_back();
      used[a.to] = false;
    }
  };
  dfs(0.0);
}

// Shortest distance from source to every vertex by enumerating simple paths.
inline std::vector<double> enumerated_distances(const Graph& g, VertexId source) {
  std::vector<double> best(g.vertex_count(), std::numeric_limits<double>::infinity());
  for_each_simple_path(g, source, [&](const std::vector<VertexId>& p, double len) {
    best[p.back()] = std::min(best[p.back()], len);
  });
  return best;
}

}  // namespace grksp::testing
