#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "grksp/graph.hpp"
#include "grksp/path.hpp"

namespace grksp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// forward: shortest paths from the root. backward: shortest paths to the root
// (computed over reversed arcs; identical to forward on undirected graphs).
enum class TreeDirection { forward, backward };

struct ShortestPathTree {
  VertexId root = kNoVertex;
  TreeDirection direction = TreeDirection::forward;
  std::vector<double> dist;
  // For a forward tree, parent[v] precedes v on the path root -> v. For a
  // backward tree, parent[v] follows v on the path v -> root.
  std::vector<VertexId> parent;

  std::size_t size() const { return dist.size(); }
  bool reachable(VertexId v) const { return dist[v] != kInfinity; }
};

// Dijkstra with a binary heap and lazy deletion. Equal-distance relaxations
// keep the smaller parent id.
ShortestPathTree dijkstra_tree(const Graph& g, VertexId root,
                               TreeDirection direction = TreeDirection::forward);

// Root -> v for forward trees, v -> root for backward trees; nullopt when v
// is unreachable. The returned length is dist[v].
std::optional<Path> extract_path(const ShortestPathTree& tree, VertexId v);

// Shortest-path trees from every root, computed once and then read-only.
// Undirected graphs keep a single tree per root that serves both directions.
class AllPairsTrees {
 public:
  explicit AllPairsTrees(const Graph& g);

  const ShortestPathTree& tree(VertexId root, TreeDirection direction) const {
    if (!directed_ || direction == TreeDirection::forward) return forward_[root];
    return backward_[root];
  }
  std::size_t vertex_count() const { return forward_.size(); }
  std::size_t tree_count() const { return forward_.size() + backward_.size(); }

 private:
  bool directed_;
  std::vector<ShortestPathTree> forward_;
  std::vector<ShortestPathTree> backward_;
};

}  // namespace grksp
