#include "grksp/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ksp_common.hpp"

namespace grksp {

namespace {

void check_trees(const Graph& g, std::size_t k, VertexId source, VertexId target,
                 const ShortestPathTree& from_source, const ShortestPathTree& to_target) {
  detail::validate_query(g, k, source, target);
  if (from_source.size() != g.vertex_count() || to_target.size() != g.vertex_count())
    throw std::invalid_argument("shortest-path trees do not match the graph");
  // On undirected graphs a tree serves both directions.
  const bool directed = g.directed();
  if (from_source.root != source || (directed && from_source.direction != TreeDirection::forward))
    throw std::invalid_argument("expected a forward tree rooted at the source");
  if (to_target.root != target || (directed && to_target.direction != TreeDirection::backward))
    throw std::invalid_argument("expected a backward tree rooted at the target");
}

ReducedGraph keep_everything(const Graph& g, std::size_t loopless_found) {
  ReducedGraph r;
  r.kept.resize(g.vertex_count());
  std::iota(r.kept.begin(), r.kept.end(), VertexId{0});
  r.sub = {g, r.kept, r.kept};
  r.insufficient = true;
  r.loopless_found = loopless_found;
  return r;
}

ReducedGraph finish(const Graph& g, std::vector<VertexId> kept, std::size_t loopless_found) {
  std::sort(kept.begin(), kept.end());
  ReducedGraph r;
  r.sub = induced_subgraph(g, kept);
  r.kept = std::move(kept);
  r.loopless_found = loopless_found;
  return r;
}

}  // namespace

std::vector<BywayEntry> byway_distances(const ShortestPathTree& from_source,
                                        const ShortestPathTree& to_target) {
  if (from_source.size() != to_target.size())
    throw std::invalid_argument("byway_distances: trees have different sizes");
  std::vector<BywayEntry> entries;
  if (!from_source.reachable(to_target.root)) return entries;
  entries.reserve(from_source.size());
  for (std::size_t v = 0; v < from_source.size(); ++v) {
    const auto id = static_cast<VertexId>(v);
    if (from_source.reachable(id) && to_target.reachable(id))
      entries.push_back({id, from_source.dist[v] + to_target.dist[v]});
  }
  return entries;
}

Path byway_path(const ShortestPathTree& from_source, const ShortestPathTree& to_target, VertexId v) {
  if (v >= from_source.size() || !from_source.reachable(v) || !to_target.reachable(v))
    throw std::invalid_argument("byway_path: vertex " + std::to_string(v) +
                                " is not on any source -> target path");
  Path path;
  path.length = from_source.dist[v] + to_target.dist[v];
  for (VertexId x = v; x != kNoVertex; x = from_source.parent[x]) path.vertices.push_back(x);
  std::reverse(path.vertices.begin(), path.vertices.end());
  for (VertexId x = to_target.parent[v]; x != kNoVertex; x = to_target.parent[x])
    path.vertices.push_back(x);
  return path;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> kept) {
  const std::size_t n = g.vertex_count();
  InducedSubgraph sub;
  sub.to_original.assign(kept.begin(), kept.end());
  std::sort(sub.to_original.begin(), sub.to_original.end());
  sub.to_original.erase(std::unique(sub.to_original.begin(), sub.to_original.end()), sub.to_original.end());
  if (sub.to_original.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
  if (sub.to_original.back() >= n) throw std::invalid_argument("induced_subgraph: vertex out of range");

  sub.to_local.assign(n, kNoVertex);
  for (std::size_t i = 0; i < sub.to_original.size(); ++i)
    sub.to_local[sub.to_original[i]] = static_cast<VertexId>(i);

  GraphAssembler assembler(sub.to_original.size(), g.directed());
  for (std::size_t i = 0; i < sub.to_original.size(); ++i) {
    const VertexId u = sub.to_original[i];
    for (const Arc& a : g.out_arcs(u)) {
      const VertexId local = sub.to_local[a.to];
      if (local == kNoVertex || (!g.directed() && a.to < u)) continue;
      assembler.add_edge(static_cast<VertexId>(i), local, a.weight);
    }
  }
  sub.graph = std::move(assembler).finish();
  return sub;
}

ReducedGraph reduce_primitive(const Graph& g, std::size_t k, VertexId source, VertexId target,
                              const ShortestPathTree& from_source, const ShortestPathTree& to_target) {
  check_trees(g, k, source, target, from_source, to_target);
  std::vector<Path> paths;
  for (const BywayEntry& e : byway_distances(from_source, to_target)) {
    Path p = byway_path(from_source, to_target, e.vertex);
    p.length = e.distance;
    paths.push_back(std::move(p));
  }

  // Identical vertex sequences collapse to one path carrying the smallest
  // of their by-way distances.
  std::sort(paths.begin(), paths.end(), [](const Path& a, const Path& b) {
    if (a.vertices != b.vertices) return a.vertices < b.vertices;
    return a.length < b.length;
  });
  paths.erase(std::unique(paths.begin(), paths.end(),
                          [](const Path& a, const Path& b) { return a.vertices == b.vertices; }),
              paths.end());
  std::sort(paths.begin(), paths.end(), PathOrder{});

  std::size_t loopless = 0;
  std::size_t last = 0;
  for (; last < paths.size(); ++last) {
    if (!has_loop(paths[last]) && ++loopless == k) break;
  }
  if (loopless < k) return keep_everything(g, loopless);

  std::vector<VertexId> kept;
  std::vector<char> in_kept(g.vertex_count(), 0);
  for (std::size_t i = 0; i <= last; ++i) {
    for (VertexId v : paths[i].vertices) {
      if (!in_kept[v]) {
        in_kept[v] = 1;
        kept.push_back(v);
      }
    }
  }
  return finish(g, std::move(kept), loopless);
}

ReducedGraph reduce_speeded(const Graph& g, std::size_t k, VertexId source, VertexId target,
                            const ShortestPathTree& from_source, const ShortestPathTree& to_target) {
  check_trees(g, k, source, target, from_source, to_target);
  auto entries = byway_distances(from_source, to_target);
  // Usually only a small prefix of the order is consumed, so pop from a heap
  // instead of sorting everything.
  const auto later = [](const BywayEntry& a, const BywayEntry& b) {
    return a.distance != b.distance ? a.distance > b.distance : a.vertex > b.vertex;
  };
  std::make_heap(entries.begin(), entries.end(), later);

  const std::size_t n = g.vertex_count();
  std::vector<char> removed(n, 0);
  std::vector<char> in_kept(n, 0);
  std::vector<std::uint32_t> stamp(n, 0);
  std::vector<VertexId> kept;
  auto keep = [&](VertexId v) {
    if (!in_kept[v]) {
      in_kept[v] = 1;
      kept.push_back(v);
    }
  };

  std::size_t loopless = 0;
  std::uint32_t epoch = 0;
  for (auto end = entries.end(); end != entries.begin(); --end) {
    std::pop_heap(entries.begin(), end, later);
    const VertexId v = (end - 1)->vertex;
    if (removed[v]) continue;
    ++epoch;
    for (VertexId x = v; x != kNoVertex; x = from_source.parent[x]) stamp[x] = epoch;
    bool loop = false;
    for (VertexId x = to_target.parent[v]; x != kNoVertex && !loop; x = to_target.parent[x])
      loop = stamp[x] == epoch;
    if (loop) {
      keep(v);
      removed[v] = 1;
      continue;
    }
    for (VertexId x = v; x != kNoVertex; x = from_source.parent[x]) {
      keep(x);
      removed[x] = 1;
    }
    for (VertexId x = to_target.parent[v]; x != kNoVertex; x = to_target.parent[x]) {
      keep(x);
      removed[x] = 1;
    }
    if (++loopless == k) break;
  }
  if (loopless < k) return keep_everything(g, loopless);
  return finish(g, std::move(kept), loopless);
}

}  // namespace grksp
