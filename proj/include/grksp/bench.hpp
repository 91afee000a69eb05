#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grksp/graph.hpp"

namespace grksp {

enum class Family { hypercube, scalefree };
enum class Algorithm { kdij, kbidij, gr_kdij, gr_kbidij, brute };

std::string_view to_string(Family f);
std::string_view to_string(Algorithm a);
std::optional<Family> parse_family(std::string_view text);
std::optional<Algorithm> parse_algorithm(std::string_view text);

// Scale-free seed clique size: a fixed m0 or floor(sqrt(n)).
struct DensityRule {
  bool sqrt_n = false;
  std::size_t m0 = 2;

  std::size_t m0_for(std::size_t n) const;
};

struct BenchConfig {
  Family family = Family::hypercube;
  std::vector<std::size_t> sizes;  // vertex counts; powers of two for hypercubes
  DensityRule density;
  std::optional<std::size_t> fixed_k;  // default k = floor(sqrt(n))
  std::vector<Algorithm> algorithms;
  std::vector<std::uint64_t> seeds;
  bool apsp = false;
  std::size_t repetitions = 3;

  std::size_t k_for(std::size_t n) const;
};

struct BenchRecord {
  Family family = Family::hypercube;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  Algorithm algorithm = Algorithm::kdij;
  double t_sssp_s = 0.0;
  double t_reduce_s = 0.0;
  double t_search_s = 0.0;
  double t_total_s = 0.0;
  std::size_t n_reduced = 0;
  double reduction_rate = 0.0;
  std::size_t paths_found = 0;

  // Not written to CSV.
  std::vector<double> lengths;
  std::string error;
};

// Hypercube: vertex 0 and its bitwise complement. Scale-free: 0 and n - 1.
std::pair<VertexId, VertexId> select_endpoints(const Graph& g, Family family);

Graph generate(Family family, std::size_t n, const DensityRule& density, std::uint64_t seed);

// One record per (size, seed, algorithm), sorted in that order. Timings are
// those of the repetition with the median total time. Failing cells carry an
// error message and do not stop the run.
std::vector<BenchRecord> run_benchmark(const BenchConfig& cfg);

// Descriptions of cells whose path lengths disagree with another algorithm
// on the same graph (tolerance 1e-9). Empty when all agree.
std::vector<std::string> agreement_problems(const std::vector<BenchRecord>& records);

inline constexpr std::string_view kCsvHeader =
    "family,n,m,k,seed,algo,t_sssp_s,t_reduce_s,t_search_s,t_total_s,n_reduced,reduction_rate,paths_found";

// Records with an error are skipped.
void write_csv(const std::vector<BenchRecord>& records, std::ostream& out);
void write_csv(const std::vector<BenchRecord>& records, const std::filesystem::path& destination);
std::vector<BenchRecord> read_csv(std::istream& in);

}  // namespace grksp
