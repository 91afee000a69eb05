// grksp: generate benchmark graphs, run k-shortest loop-less path searches,
// reduce graphs and run the benchmark harness.
//
// Exit status: 0 on success, 2 on usage errors, 1 on runtime errors.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "grksp/bench.hpp"
#include "grksp/generators.hpp"
#include "grksp/graph_io.hpp"
#include "grksp/ksp.hpp"
#include "grksp/reduction.hpp"
#include "grksp/sssp.hpp"

namespace {

using namespace grksp;

constexpr int kUsageError = 2;
constexpr int kRuntimeError = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("GRKSP_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("GRKSP_SEED is not an unsigned integer: ") + env);
    }
  }
  return 1;
}

std::string format_length(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.9g", value);
  return buffer;
}

void write_paths(const KspResult& result, std::ostream& out) {
  for (const Path& p : result.paths) {
    out << format_length(p.length);
    for (VertexId v : p.vertices) out << ' ' << v;
    out << '\n';
  }
}

// Writes to the file when a path is given, to stdout otherwise.
template <typename Fn>
void with_output(const std::string& destination, Fn&& fn) {
  if (destination.empty() || destination == "-") {
    fn(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(destination);
  if (!out) throw std::runtime_error("cannot open " + destination + " for writing");
  fn(out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + destination);
}

Family family_from(const std::string& name) {
  const auto f = parse_family(name);
  if (!f) throw UsageError("unknown family '" + name + "' (hypercube|scalefree)");
  return *f;
}

Algorithm algorithm_from(const std::string& name) {
  const auto a = parse_algorithm(name);
  if (!a) throw UsageError("unknown algorithm '" + name + "' (kdij|kbidij|gr-kdij|gr-kbidij|brute)");
  return *a;
}

void check_endpoints(const Graph& g, VertexId s, VertexId t) {
  if (s >= g.vertex_count() || t >= g.vertex_count())
    throw UsageError("source and target must be below " + std::to_string(g.vertex_count()));
  if (s == t) throw UsageError("source and target must differ");
}

KspResult run_search(Algorithm algo, const Graph& g, std::size_t k, VertexId s, VertexId t) {
  const KspEngine kdij = [](const Graph& h, std::size_t kk, VertexId a, VertexId b) { return k_dijkstra(h, kk, a, b); };
  const KspEngine kbidij = [](const Graph& h, std::size_t kk, VertexId a, VertexId b) {
    return k_bidirectional(h, kk, a, b);
  };
  switch (algo) {
    case Algorithm::kdij:
      return k_dijkstra(g, k, s, t);
    case Algorithm::kbidij:
      return k_bidirectional(g, k, s, t);
    case Algorithm::gr_kdij:
      return gr(g, k, s, t, kdij).result;
    case Algorithm::gr_kbidij:
      return gr(g, k, s, t, kbidij).result;
    case Algorithm::brute:
      return brute_force_ksp(g, k, s, t);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-shortest loop-less paths with graph reduction"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::vector<std::uint64_t> seeds;
  try {
    seed = default_seed();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  seeds = {seed};

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a benchmark graph as an edge list");
  std::string gen_family = "hypercube";
  std::size_t gen_n = 0;
  int gen_dim = 0;
  std::size_t gen_m0 = 2;
  bool gen_dense = false;
  std::string gen_out;
  gen->add_option("--family", gen_family, "hypercube | scalefree")->capture_default_str();
  gen->add_option("--n", gen_n, "Vertex count (power of two for hypercubes)");
  gen->add_option("--dim", gen_dim, "Hypercube dimension (alternative to --n)");
  gen->add_option("--m0", gen_m0, "Scale-free seed clique size")->capture_default_str();
  gen->add_flag("--dense", gen_dense, "Scale-free with m0 = floor(sqrt(n))");
  gen->add_option("--seed", seed, "RNG seed (default from GRKSP_SEED, else 1)");
  gen->add_option("--out", gen_out, "Output file (stdout when omitted)");

  // ksp
  auto* ksp = app.add_subcommand("ksp", "Find k shortest loop-less paths");
  std::string ksp_graph, ksp_algo = "gr-kbidij", ksp_out;
  std::size_t ksp_k = 1;
  VertexId ksp_s = 0, ksp_t = 0;
  ksp->add_option("--graph", ksp_graph, "Edge-list file")->required();
  ksp->add_option("--algo", ksp_algo, "kdij | kbidij | gr-kdij | gr-kbidij | brute")->capture_default_str();
  ksp->add_option("--k", ksp_k, "Number of paths")->required()->check(CLI::PositiveNumber);
  ksp->add_option("--source", ksp_s, "Source vertex")->required();
  ksp->add_option("--target", ksp_t, "Target vertex")->required();
  ksp->add_option("--out", ksp_out, "Output file (stdout when omitted)");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Write the reduced subgraph and print reduction stats");
  std::string red_graph, red_out;
  std::size_t red_k = 1;
  VertexId red_s = 0, red_t = 0;
  bool red_primitive = false;
  reduce->add_option("--graph", red_graph, "Edge-list file")->required();
  reduce->add_option("--k", red_k, "Number of paths")->required()->check(CLI::PositiveNumber);
  reduce->add_option("--source", red_s, "Source vertex")->required();
  reduce->add_option("--target", red_t, "Target vertex")->required();
  reduce->add_option("--out", red_out, "Subgraph edge-list file (local ids)")->required();
  reduce->add_flag("--primitive", red_primitive, "Use the deduplicating reduction");

  // bench
  auto* bench = app.add_subcommand("bench", "Run the benchmark harness and write CSV");
  std::string bench_family = "hypercube", bench_csv;
  std::vector<std::size_t> bench_sizes;
  std::vector<std::string> bench_algos{"kdij", "kbidij", "gr-kdij", "gr-kbidij"};
  std::size_t bench_m0 = 2, bench_k = 0, bench_reps = 3;
  bool bench_dense = false, bench_apsp = false;
  bench->add_option("--family", bench_family, "hypercube | scalefree")->capture_default_str();
  bench->add_option("--sizes", bench_sizes, "Vertex counts")->required()->delimiter(',');
  bench->add_option("--m0", bench_m0, "Scale-free seed clique size")->capture_default_str();
  bench->add_flag("--dense", bench_dense, "Scale-free with m0 = floor(sqrt(n))");
  bench->add_option("--k", bench_k, "Fixed k (default floor(sqrt(n)))");
  bench->add_option("--algos", bench_algos, "Algorithms")->delimiter(',')->capture_default_str();
  bench->add_option("--seeds", seeds, "Seeds (default from GRKSP_SEED, else 1)")->delimiter(',');
  bench->add_option("--reps", bench_reps, "Repetitions per cell (median reported)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench->add_flag("--apsp", bench_apsp, "Precompute all-pairs trees per graph");
  bench->add_option("--csv", bench_csv, "CSV output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*gen) {
      const Family family = family_from(gen_family);
      Graph g;
      if (family == Family::hypercube) {
        if (gen_dim == 0 && gen_n == 0) throw UsageError("gen: give --dim or --n");
        g = gen_dim != 0 ? gen_hypercube(gen_dim, RngSeed{seed})
                         : generate(Family::hypercube, gen_n, {}, seed);
      } else {
        if (gen_n == 0) throw UsageError("gen: scalefree needs --n");
        g = generate(Family::scalefree, gen_n, DensityRule{gen_dense, gen_m0}, seed);
      }
      with_output(gen_out, [&](std::ostream& out) { write_graph(g, out); });
    } else if (*ksp) {
      const Graph g = load_graph(ksp_graph);
      check_endpoints(g, ksp_s, ksp_t);
      const KspResult result = run_search(algorithm_from(ksp_algo), g, ksp_k, ksp_s, ksp_t);
      with_output(ksp_out, [&](std::ostream& out) { write_paths(result, out); });
    } else if (*reduce) {
      const Graph g = load_graph(red_graph);
      check_endpoints(g, red_s, red_t);
      const auto from = dijkstra_tree(g, red_s, TreeDirection::forward);
      const auto to = dijkstra_tree(g, red_t, TreeDirection::backward);
      const ReducedGraph r = red_primitive ? reduce_primitive(g, red_k, red_s, red_t, from, to)
                                           : reduce_speeded(g, red_k, red_s, red_t, from, to);
      save_graph(r.sub.graph, red_out);
      const bool has_path = from.reachable(red_t);
      std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count() << " n_reduced=" << r.size()
                << " m_reduced=" << r.sub.graph.edge_count() << " reduction_rate="
                << format_length(static_cast<double>(r.size()) / static_cast<double>(g.vertex_count()))
                << " loopless_found=" << r.loopless_found << " insufficient=" << (r.insufficient ? 1 : 0)
                << " source_local=" << (has_path ? std::to_string(r.sub.to_local[red_s]) : "-")
                << " target_local=" << (has_path ? std::to_string(r.sub.to_local[red_t]) : "-") << '\n';
    } else if (*bench) {
      BenchConfig cfg;
      cfg.family = family_from(bench_family);
      cfg.sizes = bench_sizes;
      cfg.density = DensityRule{bench_dense, bench_m0};
      if (bench_k > 0) cfg.fixed_k = bench_k;
      for (const auto& name : bench_algos) cfg.algorithms.push_back(algorithm_from(name));
      cfg.seeds = seeds;
      cfg.apsp = bench_apsp;
      cfg.repetitions = bench_reps;
      const auto records = run_benchmark(cfg);
      int status = 0;
      for (const BenchRecord& r : records) {
        if (!r.error.empty()) {
          std::cerr << "warning: n=" << r.n << " seed=" << r.seed << " " << to_string(r.algorithm)
                    << " failed: " << r.error << '\n';
          status = kRuntimeError;
        }
      }
      for (const auto& problem : agreement_problems(records)) std::cerr << "warning: " << problem << '\n';
      with_output(bench_csv, [&](std::ostream& out) { write_csv(records, out); });
      return status;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return 0;
}
