#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace grksp {

using VertexId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

struct Arc {
  VertexId to;
  double weight;

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct Edge {
  VertexId u;
  VertexId v;
  double weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable weighted graph in compressed sparse row form. Adjacency lists are
// sorted by neighbor id. Undirected graphs store every edge in both
// directions and share one adjacency for outgoing and incoming arcs.
class Graph {
 public:
  Graph() = default;

  // Validates and builds. Throws std::invalid_argument on self-loops,
  // out-of-range ids, non-positive or non-finite weights and duplicate edges.
  static Graph build(std::size_t vertex_count, bool directed, std::span<const Edge> edges);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  // m: undirected edges are counted once.
  std::size_t edge_count() const { return directed_ ? arcs_.size() : arcs_.size() / 2; }
  bool directed() const { return directed_; }

  std::span<const Arc> out_arcs(VertexId v) const {
    return {arcs_.data() + offsets_[v], arcs_.data() + offsets_[v + 1]};
  }
  // Arcs of the reversed graph: (u, w) listed under v iff (u -> v, w) is an edge.
  std::span<const Arc> in_arcs(VertexId v) const {
    if (!directed_) return out_arcs(v);
    return {in_arcs_.data() + in_offsets_[v], in_arcs_.data() + in_offsets_[v + 1]};
  }
  std::size_t out_degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  // Weight of edge u -> v, or NaN when absent. O(log degree).
  double weight(VertexId u, VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;

  // Canonical edge list: sorted by (u, v); undirected edges appear once with u < v.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphAssembler;

  bool directed_ = false;
  std::vector<std::size_t> offsets_;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> in_offsets_;
  std::vector<Arc> in_arcs_;
};

// Unchecked construction path for callers that already guarantee the Graph
// invariants (generators, induced subgraphs). Arcs may be added in any order.
class GraphAssembler {
 public:
  GraphAssembler(std::size_t vertex_count, bool directed);

  // Undirected: adds both directions.
  void add_edge(VertexId u, VertexId v, double weight);
  Graph finish() &&;

 private:
  std::size_t n_;
  bool directed_;
  std::vector<Edge> arcs_;
};

}  // namespace grksp
