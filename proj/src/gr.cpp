#include <chrono>
#include <optional>

#include "grksp/reduction.hpp"
#include "ksp_common.hpp"

namespace grksp {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

GrOutcome gr(const Graph& g, std::size_t k, VertexId source, VertexId target, const KspEngine& engine,
             const AllPairsTrees* precomputed) {
  detail::validate_query(g, k, source, target);
  GrOutcome outcome;

  auto start = Clock::now();
  std::optional<ShortestPathTree> own_from, own_to;
  const ShortestPathTree* from_source;
  const ShortestPathTree* to_target;
  if (precomputed) {
    from_source = &precomputed->tree(source, TreeDirection::forward);
    to_target = &precomputed->tree(target, TreeDirection::backward);
  } else {
    own_from = dijkstra_tree(g, source, TreeDirection::forward);
    own_to = dijkstra_tree(g, target, TreeDirection::backward);
    from_source = &*own_from;
    to_target = &*own_to;
  }
  outcome.stats.t_sssp_s = seconds_since(start);

  start = Clock::now();
  ReducedGraph reduced = reduce_speeded(g, k, source, target, *from_source, *to_target);
  outcome.stats.t_reduce_s = seconds_since(start);
  outcome.stats.n_reduced = reduced.size();
  outcome.stats.insufficient = reduced.insufficient;

  start = Clock::now();
  if (reduced.insufficient) {
    outcome.result = engine(g, k, source, target);
  } else {
    const auto& to_local = reduced.sub.to_local;
    outcome.result = engine(reduced.sub.graph, k, to_local[source], to_local[target]);
    for (Path& p : outcome.result.paths)
      for (VertexId& v : p.vertices) v = reduced.sub.to_original[v];
  }
  outcome.stats.t_search_s = seconds_since(start);
  outcome.result.query = {source, target, k};
  return outcome;
}

}  // namespace grksp
