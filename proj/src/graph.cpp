#include "grksp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace grksp {

namespace {

void build_csr(std::size_t n, std::span<const Edge> arcs, bool reversed,
               std::vector<std::size_t>& offsets, std::vector<Arc>& out) {
  offsets.assign(n + 1, 0);
  for (const Edge& e : arcs) ++offsets[(reversed ? e.v : e.u) + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  out.resize(arcs.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : arcs) {
    const VertexId from = reversed ? e.v : e.u;
    const VertexId to = reversed ? e.u : e.v;
    out[cursor[from]++] = Arc{to, e.weight};
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
              out.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]),
              [](const Arc& a, const Arc& b) { return a.to < b.to; });
  }
}

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ", " + std::to_string(e.weight) + ")";
}

}  // namespace

GraphAssembler::GraphAssembler(std::size_t vertex_count, bool directed)
    : n_(vertex_count), directed_(directed) {}

void GraphAssembler::add_edge(VertexId u, VertexId v, double weight) {
  arcs_.push_back({u, v, weight});
  if (!directed_) arcs_.push_back({v, u, weight});
}

Graph GraphAssembler::finish() && {
  Graph g;
  g.directed_ = directed_;
  build_csr(n_, arcs_, false, g.offsets_, g.arcs_);
  if (directed_) build_csr(n_, arcs_, true, g.in_offsets_, g.in_arcs_);
  return g;
}

Graph Graph::build(std::size_t vertex_count, bool directed, std::span<const Edge> edges) {
  if (vertex_count == 0) throw std::invalid_argument("graph needs at least one vertex");
  if (vertex_count >= kNoVertex) throw std::invalid_argument("vertex count too large");
  GraphAssembler assembler(vertex_count, directed);
  for (const Edge& e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count)
      throw std::invalid_argument("vertex id out of range in edge " + edge_text(e));
    if (e.u == e.v) throw std::invalid_argument("self-loop " + edge_text(e));
    if (!std::isfinite(e.weight) || !(e.weight > 0.0))
      throw std::invalid_argument("weight must be finite and positive in edge " + edge_text(e));
    assembler.add_edge(e.u, e.v, e.weight);
  }
  Graph g = std::move(assembler).finish();
  for (std::size_t v = 0; v < vertex_count; ++v) {
    const auto arcs = g.out_arcs(static_cast<VertexId>(v));
    for (std::size_t i = 1; i < arcs.size(); ++i) {
      if (arcs[i].to == arcs[i - 1].to)
        throw std::invalid_argument("duplicate edge between " + std::to_string(v) + " and " +
                                    std::to_string(arcs[i].to));
    }
  }
  return g;
}

double Graph::weight(VertexId u, VertexId v) const {
  const auto arcs = out_arcs(u);
  const auto it = std::lower_bound(arcs.begin(), arcs.end(), v,
                                   [](const Arc& a, VertexId id) { return a.to < id; });
  if (it == arcs.end() || it->to != v) return std::numeric_limits<double>::quiet_NaN();
  return it->weight;
}

bool Graph::has_edge(VertexId u, VertexId v) const { return !std::isnan(weight(u, v)); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count());
  for (std::size_t u = 0; u < vertex_count(); ++u) {
    for (const Arc& a : out_arcs(static_cast<VertexId>(u))) {
      if (directed_ || u < a.to) result.push_back({static_cast<VertexId>(u), a.to, a.weight});
    }
  }
  return result;
}

}  // namespace grksp
