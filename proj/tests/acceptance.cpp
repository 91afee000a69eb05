// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "grksp/bench.hpp"
#include "grksp/generators.hpp"
#include "grksp/ksp.hpp"
#include "grksp/reduction.hpp"
#include "grksp/sssp.hpp"

using namespace grksp;
namespace fs = std::filesystem;

namespace {

constexpr double kLengthTolerance = 1e-9;
constexpr std::size_t kRandomGraphs = 200;
constexpr double kCorrectnessBudgetS = 60.0;
constexpr std::uint64_t kTimingSeeds = 5;

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string fmt(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.4g", value);
  return buffer;
}

bool same_paths(const KspResult& a, const KspResult& b) {
  if (a.paths.size() != b.paths.size()) return false;
  for (std::size_t i = 0; i < a.paths.size(); ++i) {
    if (a.paths[i].vertices != b.paths[i].vertices) return false;
    const double scale = std::max(1.0, std::abs(b.paths[i].length));
    if (std::abs(a.paths[i].length - b.paths[i].length) > kLengthTolerance * scale) return false;
  }
  return true;
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return values[values.size() / 2];
}

struct RandomCase {
  std::uint64_t seed;
  Graph g;
  std::size_t k;
  VertexId s, t;
};

// Seeded corpus: n in [4, 12], edge probability 0.5, k in [1, 8].
std::vector<RandomCase> random_corpus() {
  std::vector<RandomCase> cases;
  for (std::uint64_t seed = 1; seed <= kRandomGraphs; ++seed) {
    Rng rng(RngSeed{seed});
    const std::size_t n = 4 + rng.below(9);
    const std::size_t k = 1 + rng.below(8);
    const auto s = static_cast<VertexId>(rng.below(n));
    auto t = static_cast<VertexId>(rng.below(n - 1));
    if (t >= s) ++t;
    cases.push_back({seed, gen_random(n, 0.5, RngSeed{seed}), k, s, t});
  }
  return cases;
}

KspResult run_kdij(const Graph& g, std::size_t k, VertexId s, VertexId t) { return k_dijkstra(g, k, s, t); }
KspResult run_kbidij(const Graph& g, std::size_t k, VertexId s, VertexId t) { return k_bidirectional(g, k, s, t); }

Verdict criterion1(const std::vector<RandomCase>& corpus) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const std::pair<const char*, KspEngine> engines[] = {
      {"kdij", run_kdij},
      {"kbidij", run_kbidij},
      {"gr-kdij", [](const Graph& g, std::size_t k, VertexId s, VertexId t) { return gr(g, k, s, t, run_kdij).result; }},
      {"gr-kbidij",
       [](const Graph& g, std::size_t k, VertexId s, VertexId t) { return gr(g, k, s, t, run_kbidij).result; }},
  };
  for (const RandomCase& c : corpus) {
    const KspResult expected = brute_force_ksp(c.g, c.k, c.s, c.t);
    for (const auto& [name, engine] : engines)
      if (!same_paths(engine(c.g, c.k, c.s, c.t), expected))
        v.fail(std::string(name) + " differs on seed " + std::to_string(c.seed));
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed >= kCorrectnessBudgetS) v.fail("took " + fmt(elapsed) + " s");
  if (v.pass) v.detail = std::to_string(corpus.size()) + " graphs in " + fmt(elapsed) + " s";
  return v;
}

using Reducer = ReducedGraph (*)(const Graph&, std::size_t, VertexId, VertexId, const ShortestPathTree&,
                                 const ShortestPathTree&);

// Brute force on the reduced graph, mapped back, equals brute force on g.
bool preserves_paths(const RandomCase& c, const ReducedGraph& r) {
  const KspResult expected = brute_force_ksp(c.g, c.k, c.s, c.t);
  KspResult reduced = brute_force_ksp(r.sub.graph, c.k, r.sub.to_local[c.s], r.sub.to_local[c.t]);
  for (Path& p : reduced.paths)
    for (VertexId& x : p.vertices) x = r.sub.to_original[x];
  return same_paths(reduced, expected);
}

Verdict criteria2and3(const std::vector<RandomCase>& corpus, Verdict& smaller) {
  Verdict v;
  std::size_t reduced_cases = 0;
  for (const RandomCase& c : corpus) {
    const auto from = dijkstra_tree(c.g, c.s, TreeDirection::forward);
    const auto to = dijkstra_tree(c.g, c.t, TreeDirection::backward);
    if (!from.reachable(c.t)) continue;
    const ReducedGraph speeded = reduce_speeded(c.g, c.k, c.s, c.t, from, to);
    const ReducedGraph primitive = reduce_primitive(c.g, c.k, c.s, c.t, from, to);
    if (!speeded.insufficient) ++reduced_cases;
    if (!preserves_paths(c, speeded)) v.fail("speeded reduction loses paths on seed " + std::to_string(c.seed));
    if (!preserves_paths(c, primitive))
      smaller.fail("primitive reduction loses paths on seed " + std::to_string(c.seed));
    if (speeded.size() > primitive.size())
      smaller.fail("speeded keeps more vertices on seed " + std::to_string(c.seed));
  }
  if (v.pass) v.detail = std::to_string(reduced_cases) + " proper reductions checked";
  if (smaller.pass) smaller.detail = "all " + std::to_string(corpus.size()) + " graphs";
  return v;
}

Verdict criterion4() {
  Verdict v;
  const Graph p5 = testing::pendant();
  const auto from = dijkstra_tree(p5, 0, TreeDirection::forward);
  const auto to = dijkstra_tree(p5, 3, TreeDirection::backward);
  for (Reducer reduce : {Reducer{reduce_speeded}, Reducer{reduce_primitive}}) {
    const auto r1 = reduce(p5, 1, 0, 3, from, to);
    const auto r2 = reduce(p5, 2, 0, 3, from, to);
    const auto r3 = reduce(p5, 3, 0, 3, from, to);
    if (r1.insufficient || r1.kept != std::vector<VertexId>{0, 1, 3}) v.fail("k=1 kept set");
    if (r2.insufficient || r2.kept != std::vector<VertexId>{0, 1, 2, 3}) v.fail("k=2 kept set");
    if (!r3.insufficient || r3.size() != 5) v.fail("k=3 not insufficient");
  }
  return v;
}

BenchConfig cube_config(std::vector<std::size_t> sizes, std::vector<Algorithm> algorithms) {
  BenchConfig cfg;
  cfg.family = Family::hypercube;
  cfg.sizes = std::move(sizes);
  cfg.algorithms = std::move(algorithms);
  for (std::uint64_t s = 1; s <= kTimingSeeds; ++s) cfg.seeds.push_back(s);
  return cfg;
}

const BenchRecord& find(const std::vector<BenchRecord>& records, std::size_t n, std::uint64_t seed, Algorithm a) {
  for (const BenchRecord& r : records)
    if (r.n == n && r.seed == seed && r.algorithm == a) return r;
  throw std::runtime_error("missing bench record");
}

Verdict criterion5() {
  Verdict v;
  BenchConfig cfg = cube_config({64, 256, 1024}, {Algorithm::gr_kbidij});
  cfg.repetitions = 1;
  const auto records = run_benchmark(cfg);
  std::vector<double> means;
  for (std::size_t n : cfg.sizes) {
    double sum = 0.0;
    for (std::uint64_t seed : cfg.seeds) sum += find(records, n, seed, Algorithm::gr_kbidij).reduction_rate;
    means.push_back(sum / static_cast<double>(cfg.seeds.size()));
  }
  v.detail = "mean rates " + fmt(means[0]) + " " + fmt(means[1]) + " " + fmt(means[2]);
  if (!(means[0] > means[1] && means[1] > means[2])) v.fail("not strictly decreasing: " + v.detail);
  if (means[2] > 0.35) v.fail("rate at n=1024 above 0.35: " + v.detail);
  return v;
}

Verdict criteria6and7(Verdict& reduce_cost) {
  Verdict v;
  BenchConfig cfg = cube_config({1024}, {Algorithm::kdij, Algorithm::gr_kdij});
  cfg.seeds = {1};
  cfg.fixed_k = 32;
  const auto records = run_benchmark(cfg);
  const double plain = find(records, 1024, 1, Algorithm::kdij).t_total_s;
  const double reduced = find(records, 1024, 1, Algorithm::gr_kdij).t_total_s;
  v.detail = "gr " + fmt(reduced) + " s vs " + fmt(plain) + " s";
  if (!(reduced <= 0.5 * plain)) v.fail(v.detail);

  // Reduction against shortest-path cost, summed over seeds to damp noise
  // in sub-millisecond phases.
  BenchConfig phases = cube_config({1024}, {Algorithm::gr_kbidij});
  double sssp = 0.0, reduce = 0.0;
  for (const BenchRecord& r : run_benchmark(phases)) {
    sssp += r.t_sssp_s;
    reduce += r.t_reduce_s;
  }
  reduce_cost.detail = "t_reduce/t_sssp = " + fmt(reduce / sssp);
  if (!(reduce <= 0.2 * sssp)) reduce_cost.fail(reduce_cost.detail);
  return v;
}

Verdict criterion8() {
  Verdict v;
  std::vector<double> costs;
  for (std::size_t k : {8, 64}) {
    BenchConfig cfg = cube_config({4096}, {Algorithm::gr_kbidij});
    cfg.seeds = {1};
    cfg.fixed_k = k;
    const BenchRecord& r = run_benchmark(cfg).front();
    costs.push_back(r.t_sssp_s + r.t_reduce_s);
  }
  const double ratio = std::max(costs[0], costs[1]) / std::min(costs[0], costs[1]);
  v.detail = "k=8 " + fmt(costs[0]) + " s, k=64 " + fmt(costs[1]) + " s";
  if (!(ratio <= 1.5)) v.fail(v.detail);
  return v;
}

Verdict criterion9() {
  Verdict v;
  const Graph g = gen_hypercube(10, RngSeed{1});
  const AllPairsTrees store(g);
  const std::size_t k = 32;
  const VertexId s = 0, t = 1023;
  std::vector<double> cached, uncached;
  for (int rep = 0; rep < 3; ++rep) {
    for (const KspEngine& engine : {KspEngine{run_kdij}, KspEngine{run_kbidij}}) {
      const auto plain = gr(g, k, s, t, engine);
      const auto fast = gr(g, k, s, t, engine, &store);
      if (!same_paths(fast.result, plain.result) || fast.stats.n_reduced != plain.stats.n_reduced)
        v.fail("cached trees change the result");
      uncached.push_back(plain.stats.t_sssp_s);
      cached.push_back(fast.stats.t_sssp_s);
    }
  }
  // Other queries on the same store.
  for (VertexId other : {VertexId{5}, VertexId{700}})
    if (!same_paths(gr(g, 8, other, 3, run_kbidij, &store).result, gr(g, 8, other, 3, run_kbidij).result))
      v.fail("cached trees change the result");
  const double a = median(cached), b = median(uncached);
  if (v.pass) v.detail = "t_sssp " + fmt(a) + " s cached vs " + fmt(b) + " s";
  if (!(a <= 0.05 * b)) v.fail("t_sssp " + fmt(a) + " s cached vs " + fmt(b) + " s");
  return v;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// CSV text with the four timing columns blanked.
std::string without_timings(const std::string& csv) {
  std::istringstream in(csv);
  std::string out;
  for (std::string line; std::getline(in, line);) {
    std::istringstream fields(line);
    std::size_t column = 0;
    for (std::string cell; std::getline(fields, cell, ','); ++column) out += column >= 6 && column <= 9 ? "" : cell + ",";
    out += '\n';
  }
  return out;
}

bool run_cli(const std::string& args) {
  const std::string command = "'" GRKSP_CLI_PATH "' " + args + " >/dev/null";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) && WEXITSTATUS(status) == 0;
}

Verdict criterion10() {
  Verdict v;
  const fs::path dir = fs::temp_directory_path() / ("grksp_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const auto at = [&](const char* name) { return "'" + (dir / name).string() + "'"; };

  const std::string bench = "bench --family scalefree --sizes 64,128 --m0 2 --seeds 1,2,3 --reps 1 --csv ";
  if (!run_cli(bench + at("a.csv")) || !run_cli(bench + at("b.csv"))) v.fail("bench failed");
  const std::string a = slurp(dir / "a.csv"), b = slurp(dir / "b.csv");
  if (a.empty() || without_timings(a) != without_timings(b)) v.fail("bench CSV differs beyond timings");

  for (const std::string gen : {"gen --family hypercube --n 256 --seed 7 --out ",
                                "gen --family scalefree --n 300 --dense --seed 7 --out "}) {
    if (!run_cli(gen + at("g1.txt")) || !run_cli(gen + at("g2.txt"))) v.fail("gen failed");
    const std::string g1 = slurp(dir / "g1.txt");
    if (g1.empty() || g1 != slurp(dir / "g2.txt")) v.fail("gen output differs for one seed");
  }
  fs::remove_all(dir);
  return v;
}

}  // namespace

int main() {
  int failures = 0;
  const auto report = [&](int id, const char* what, const Verdict& v) {
    std::printf("criterion %d: %s  %s%s%s\n", id, v.pass ? "PASS" : "FAIL", what, v.detail.empty() ? "" : ": ",
                v.detail.c_str());
    std::fflush(stdout);
    if (!v.pass) ++failures;
  };
  const auto guarded = [](const std::function<Verdict()>& check) {
    try {
      return check();
    } catch (const std::exception& e) {
      Verdict v;
      v.fail(std::string("threw: ") + e.what());
      return v;
    }
  };

  const auto corpus = random_corpus();
  report(1, "searchers match brute force on random graphs", guarded([&] { return criterion1(corpus); }));
  Verdict smaller;
  const Verdict preserved = guarded([&] { return criteria2and3(corpus, smaller); });
  report(2, "speeded reduction preserves the k shortest paths", preserved);
  report(3, "speeded keeps no more vertices than primitive", smaller);
  report(4, "pendant instance reductions", guarded(criterion4));
  report(5, "hypercube reduction rate falls with n", guarded(criterion5));
  Verdict reduce_cost;
  const Verdict speedup = guarded([&] { return criteria6and7(reduce_cost); });
  report(6, "gr(kdij) at most half of kdij on hypercube 1024", speedup);
  report(7, "reduction at most 0.2 of shortest-path time", reduce_cost);
  report(8, "reduction cost insensitive to k on hypercube 4096", guarded(criterion8));
  report(9, "all-pairs store gives identical results and cheap lookups", guarded(criterion9));
  report(10, "bench and gen are reproducible", guarded(criterion10));
  return failures == 0 ? 0 : 1;
}
