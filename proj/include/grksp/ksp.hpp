#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "grksp/graph.hpp"
#include "grksp/path.hpp"

namespace grksp {

struct KspQuery {
  VertexId source = 0;
  VertexId target = 0;
  std::size_t k = 1;
};

// Loop-less source -> target paths sorted by PathOrder. Path lengths are
// always accumulated from the source so results from different searchers
// compare bit-equal.
struct KspResult {
  KspQuery query;
  std::vector<Path> paths;

  std::vector<double> lengths() const;
};

// Switches for the searchers' prunings. The loop check is not a pruning and
// is always on.
struct SearchOptions {
  // Suppress a new path at w once enough finalized paths to w exist.
  bool count_pruning = true;
  // Per-vertex bounded queue of the k best generated paths.
  bool vertex_queue_pruning = true;
  // k_bidirectional only: cut partial paths whose best possible completion
  // cannot beat the current k-th composed path.
  bool termination_pruning = true;
  // When true, the count and queue prunings only count paths whose vertex
  // set is contained in the candidate's and which precede it in result
  // order. That keeps both prunings exact for loop-less paths. When false
  // they count every path, which can discard prefixes that are needed.
  bool dominance_checked = true;
};

inline constexpr std::size_t kBruteForceDefaultLimit = 14;

// Exhaustive DFS over all simple paths; the reference oracle. Throws
// std::invalid_argument when n exceeds max_vertices.
KspResult brute_force_ksp(const Graph& g, std::size_t k, VertexId source, VertexId target,
                          std::size_t max_vertices = kBruteForceDefaultLimit);

KspResult k_dijkstra(const Graph& g, std::size_t k, VertexId source, VertexId target,
                     const SearchOptions& options = {});

KspResult k_bidirectional(const Graph& g, std::size_t k, VertexId source, VertexId target,
                          const SearchOptions& options = {});

// Any searcher with the KspResult contract.
using KspEngine = std::function<KspResult(const Graph&, std::size_t, VertexId, VertexId)>;

}  // namespace grksp
