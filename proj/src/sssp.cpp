#include "grksp/sssp.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <utility>

namespace grksp {

ShortestPathTree dijkstra_tree(const Graph& g, VertexId root, TreeDirection direction) {
  const std::size_t n = g.vertex_count();
  if (root >= n) throw std::invalid_argument("dijkstra_tree: root out of range");
  ShortestPathTree tree;
  tree.root = root;
  tree.direction = direction;
  tree.dist.assign(n, kInfinity);
  tree.parent.assign(n, kNoVertex);
  std::vector<char> settled(n, 0);

  using Entry = std::pair<double, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  tree.dist[root] = 0.0;
  heap.emplace(0.0, root);
  const bool backward = direction == TreeDirection::backward;
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (settled[u]) continue;
    settled[u] = 1;
    for (const Arc& arc : backward ? g.in_arcs(u) : g.out_arcs(u)) {
      const VertexId w = arc.to;
      if (settled[w]) continue;
      const double candidate = d + arc.weight;
      if (candidate < tree.dist[w]) {
        tree.dist[w] = candidate;
        tree.parent[w] = u;
        heap.emplace(candidate, w);
      } else if (candidate == tree.dist[w] && u < tree.parent[w]) {
        tree.parent[w] = u;
      }
    }
  }
  return tree;
}

std::optional<Path> extract_path(const ShortestPathTree& tree, VertexId v) {
  if (v >= tree.size()) throw std::invalid_argument("extract_path: vertex out of range");
  if (!tree.reachable(v)) return std::nullopt;
  Path path;
  path.length = tree.dist[v];
  for (VertexId x = v; x != kNoVertex; x = tree.parent[x]) path.vertices.push_back(x);
  if (tree.direction == TreeDirection::forward) std::reverse(path.vertices.begin(), path.vertices.end());
  return path;
}

AllPairsTrees::AllPairsTrees(const Graph& g) : directed_(g.directed()) {
  const auto n = static_cast<VertexId>(g.vertex_count());
  forward_.reserve(n);
  for (VertexId r = 0; r < n; ++r) forward_.push_back(dijkstra_tree(g, r, TreeDirection::forward));
  if (directed_) {
    backward_.reserve(n);
    for (VertexId r = 0; r < n; ++r) backward_.push_back(dijkstra_tree(g, r, TreeDirection::backward));
  }
}

}  // namespace grksp
