#include <algorithm>
#include <stdexcept>
#include <string>

#include "grksp/ksp.hpp"
#include "ksp_common.hpp"

namespace grksp {

std::vector<double> KspResult::lengths() const {
  std::vector<double> out;
  out.reserve(paths.size());
  for (const Path& p : paths) out.push_back(p.length);
  return out;
}

namespace detail {

void validate_query(const Graph& g, std::size_t k, VertexId source, VertexId target) {
  const std::size_t n = g.vertex_count();
  if (source >= n || target >= n) throw std::invalid_argument("source or target out of range");
  if (source == target) throw std::invalid_argument("source and target must differ");
  if (k == 0) throw std::invalid_argument("k must be at least 1");
}

}  // namespace detail

namespace {

struct Enumerator {
  const Graph& g;
  VertexId target;
  std::vector<char> on_path;
  std::vector<VertexId> stack;
  std::vector<Path> found;

  void visit(VertexId v, double length) {
    if (v == target) {
      found.push_back({stack, length});
      return;
    }
    for (const Arc& a : g.out_arcs(v)) {
      if (on_path[a.to]) continue;
      on_path[a.to] = 1;
      stack.push_back(a.to);
      visit(a.to, length + a.weight);
      stack.pop_back();
      on_path[a.to] = 0;
    }
  }
};

}  // namespace

KspResult brute_force_ksp(const Graph& g, std::size_t k, VertexId source, VertexId target,
                          std::size_t max_vertices) {
  detail::validate_query(g, k, source, target);
  if (g.vertex_count() > max_vertices)
    throw std::invalid_argument("brute_force_ksp: graph has " + std::to_string(g.vertex_count()) +
                                " vertices, limit is " + std::to_string(max_vertices));
  Enumerator e{g, target, std::vector<char>(g.vertex_count(), 0), {source}, {}};
  e.on_path[source] = 1;
  e.visit(source, 0.0);
  std::sort(e.found.begin(), e.found.end(), PathOrder{});
  if (e.found.size() > k) e.found.resize(k);
  return {{source, target, k}, std::move(e.found)};
}

}  // namespace grksp
