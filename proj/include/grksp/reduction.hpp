#pragma once

#include <span>
#include <vector>

#include "grksp/graph.hpp"
#include "grksp/ksp.hpp"
#include "grksp/path.hpp"
#include "grksp/sssp.hpp"

namespace grksp {

// A vertex together with the length of the shortest source -> target path
// forced through it: dist_from_source[v] + dist_to_target[v].
struct BywayEntry {
  VertexId vertex;
  double distance;

  friend bool operator==(const BywayEntry&, const BywayEntry&) = default;
};

// One entry per vertex reachable from the source and reaching the target,
// in vertex id order. Empty when the target is unreachable.
std::vector<BywayEntry> byway_distances(const ShortestPathTree& from_source,
                                        const ShortestPathTree& to_target);

// Tree path source -> v followed by tree path v -> target, v listed once.
// May repeat vertices. Throws std::invalid_argument if v is unreachable on
// either side.
Path byway_path(const ShortestPathTree& from_source, const ShortestPathTree& to_target, VertexId v);

struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> to_original;  // local id -> original id, ascending
  std::vector<VertexId> to_local;     // original id -> local id or kNoVertex
};

// Subgraph on the given vertices with every edge of g joining two of them.
// Local ids follow ascending original ids.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> kept);

struct ReducedGraph {
  std::vector<VertexId> kept;  // ascending original ids
  InducedSubgraph sub;
  // Fewer than k loop-less by-way paths exist; the whole graph is kept.
  bool insufficient = false;
  // Loop-less by-way paths accepted before the scan stopped.
  std::size_t loopless_found = 0;

  std::size_t size() const { return kept.size(); }
};

// Materializes every by-way path, removes duplicates, sorts them and keeps
// the vertices of all paths up to the k-th loop-less one.
ReducedGraph reduce_primitive(const Graph& g, std::size_t k, VertexId source, VertexId target,
                              const ShortestPathTree& from_source, const ShortestPathTree& to_target);

// Scans entries in (distance, vertex) order. A loop-less by-way path
// contributes all its vertices and retires the entries of every vertex on
// it; a path with a loop contributes only its own vertex.
ReducedGraph reduce_speeded(const Graph& g, std::size_t k, VertexId source, VertexId target,
                            const ShortestPathTree& from_source, const ShortestPathTree& to_target);

struct ReductionStats {
  double t_sssp_s = 0.0;
  double t_reduce_s = 0.0;
  double t_search_s = 0.0;
  std::size_t n_reduced = 0;
  bool insufficient = false;

  double total_s() const { return t_sssp_s + t_reduce_s + t_search_s; }
};

struct GrOutcome {
  KspResult result;
  ReductionStats stats;
};

// Reduce, then run engine on the reduced graph and map the paths back.
// With precomputed trees the shortest-path phase is a lookup.
GrOutcome gr(const Graph& g, std::size_t k, VertexId source, VertexId target, const KspEngine& engine,
             const AllPairsTrees* precomputed = nullptr);

}  // namespace grksp
