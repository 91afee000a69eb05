#include "grksp/ksp.hpp"
#include "ksp_common.hpp"

namespace grksp {

using detail::kNoLabel;
using detail::LabelId;

KspResult k_dijkstra(const Graph& g, std::size_t k, VertexId source, VertexId target,
                     const SearchOptions& options) {
  detail::validate_query(g, k, source, target);
  KspResult result{{source, target, k}, {}};

  detail::LabelStore store(g.vertex_count(), true);
  detail::LabelHeap heap(store);
  detail::VertexPruner pruner(g.vertex_count(), k, options);
  heap.push(store.add(source, kNoLabel, 0.0, 0.0));

  std::vector<VertexId> chain;
  while (!heap.empty() && result.paths.size() < k) {
    const LabelId id = heap.pop();
    const VertexId v = store[id].vertex;
    if (v == target) {
      store.chain(id, chain);
      result.paths.push_back({{chain.rbegin(), chain.rend()}, store[id].length});
      continue;
    }
    if (pruner.redundant_on_pop(store, id)) continue;
    pruner.finalize(v, id);
    for (const Arc& arc : g.out_arcs(v)) {
      if (store.chain_contains(id, arc.to)) continue;
      const LabelId next = store.add(arc.to, id, store[id].length + arc.weight, arc.weight);
      if (pruner.reject_new(store, next)) {
        store.drop_last();
        continue;
      }
      heap.push(next);
    }
  }
  return result;
}

}  // namespace grksp
