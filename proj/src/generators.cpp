#include "grksp/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace grksp {

Graph gen_hypercube(int dim, RngSeed seed) {
  if (dim < 1 || dim > kMaxHypercubeDim)
    throw std::invalid_argument("hypercube dimension must be in [1, " +
                                std::to_string(kMaxHypercubeDim) + "]");
  const std::size_t n = std::size_t{1} << dim;
  Rng rng(seed);
  GraphAssembler assembler(n, false);
  for (std::size_t u = 0; u < n; ++u) {
    for (int bit = 0; bit < dim; ++bit) {
      const std::size_t v = u ^ (std::size_t{1} << bit);
      if (u < v)
        assembler.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v), rng.uniform_open01());
    }
  }
  return std::move(assembler).finish();
}

Graph gen_scale_free(std::size_t n, std::size_t m0, RngSeed seed) {
  if (m0 < 1 || m0 > n) throw std::invalid_argument("scale-free graph needs 1 <= m0 <= n");
  if (n >= kNoVertex) throw std::invalid_argument("vertex count too large");
  Rng rng(seed);
  GraphAssembler assembler(n, false);
  // Every edge contributes both endpoints, so a uniform pick from this list
  // selects a vertex with probability proportional to its degree.
  std::vector<VertexId> endpoints;
  endpoints.reserve(2 * (m0 * (m0 - 1) / 2 + (n - m0) * m0));
  for (VertexId u = 0; u < m0; ++u) {
    for (VertexId v = u + 1; v < m0; ++v) {
      assembler.add_edge(u, v, rng.uniform_open01());
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<VertexId> chosen;
  chosen.reserve(m0);
  for (std::size_t v = m0; v < n; ++v) {
    chosen.clear();
    while (chosen.size() < m0) {
      // Only a single isolated seed vertex (m0 = 1) has no degree mass yet.
      const VertexId candidate = endpoints.empty()
                                     ? static_cast<VertexId>(rng.below(v))
                                     : endpoints[rng.below(endpoints.size())];
      if (std::find(chosen.begin(), chosen.end(), candidate) == chosen.end())
        chosen.push_back(candidate);
    }
    for (VertexId target : chosen) {
      assembler.add_edge(static_cast<VertexId>(v), target, rng.uniform_open01());
      endpoints.push_back(static_cast<VertexId>(v));
      endpoints.push_back(target);
    }
  }
  return std::move(assembler).finish();
}

Graph gen_random(std::size_t n, double edge_probability, RngSeed seed, bool directed) {
  if (n == 0) throw std::invalid_argument("graph needs at least one vertex");
  Rng rng(seed);
  GraphAssembler assembler(n, directed);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = directed ? 0 : u + 1; v < n; ++v) {
      if (u == v) continue;
      if (rng.uniform_open01() < edge_probability)
        assembler.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v), rng.uniform_open01());
    }
  }
  return std::move(assembler).finish();
}

}  // namespace grksp
