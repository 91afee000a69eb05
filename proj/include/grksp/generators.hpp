#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "grksp/graph.hpp"

namespace grksp {

struct RngSeed {
  std::uint64_t value = 1;
};

// The engine is std::mt19937_64, whose output sequence is fixed by the
// standard. The draws below avoid the implementation-defined std
// distributions so generated graphs are bit-identical across toolchains.
class Rng {
 public:
  explicit Rng(RngSeed seed) : engine_(seed.value) {}

  // Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform_open01() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

  // Uniform integer in [0, bound). bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

inline constexpr int kMaxHypercubeDim = 24;

// 2^dim vertices, edges between ids differing in one bit, weights in (0, 1).
Graph gen_hypercube(int dim, RngSeed seed);

// Preferential attachment: complete graph on m0 seed vertices, then every
// further vertex attaches to m0 distinct existing vertices chosen with
// probability proportional to their current degree. Weights in (0, 1).
Graph gen_scale_free(std::size_t n, std::size_t m0, RngSeed seed);

// G(n, p) with weights in (0, 1); used by the differential test suites.
Graph gen_random(std::size_t n, double edge_probability, RngSeed seed, bool directed = false);

}  // namespace grksp
