#include "grksp/bench.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "grksp/generators.hpp"
#include "grksp/ksp.hpp"
#include "grksp/reduction.hpp"
#include "grksp/sssp.hpp"

namespace grksp {

namespace {

constexpr std::pair<Family, std::string_view> kFamilies[] = {
    {Family::hypercube, "hypercube"},
    {Family::scalefree, "scalefree"},
};

constexpr std::pair<Algorithm, std::string_view> kAlgorithms[] = {
    {Algorithm::kdij, "kdij"},       {Algorithm::kbidij, "kbidij"}, {Algorithm::gr_kdij, "gr-kdij"},
    {Algorithm::gr_kbidij, "gr-kbidij"}, {Algorithm::brute, "brute"},
};

using Clock = std::chrono::steady_clock;

KspResult run_kdij(const Graph& g, std::size_t k, VertexId s, VertexId t) { return k_dijkstra(g, k, s, t); }
KspResult run_kbidij(const Graph& g, std::size_t k, VertexId s, VertexId t) { return k_bidirectional(g, k, s, t); }

struct Timed {
  KspResult result;
  ReductionStats stats;
};

Timed run_once(Algorithm algo, const Graph& g, std::size_t k, VertexId s, VertexId t,
               const AllPairsTrees* store) {
  switch (algo) {
    case Algorithm::gr_kdij: {
      auto out = gr(g, k, s, t, run_kdij, store);
      return {std::move(out.result), out.stats};
    }
    case Algorithm::gr_kbidij: {
      auto out = gr(g, k, s, t, run_kbidij, store);
      return {std::move(out.result), out.stats};
    }
    default:
      break;
  }
  const auto start = Clock::now();
  KspResult result = algo == Algorithm::kdij     ? k_dijkstra(g, k, s, t)
                     : algo == Algorithm::kbidij ? k_bidirectional(g, k, s, t)
                                                 : brute_force_ksp(g, k, s, t);
  Timed out{std::move(result), {}};
  out.stats.t_search_s = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

bool is_gr(Algorithm a) { return a == Algorithm::gr_kdij || a == Algorithm::gr_kbidij; }

std::string format_g6(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6g", value);
  return buffer;
}

}  // namespace

std::string_view to_string(Family f) {
  for (const auto& [value, name] : kFamilies)
    if (value == f) return name;
  return "?";
}

std::string_view to_string(Algorithm a) {
  for (const auto& [value, name] : kAlgorithms)
    if (value == a) return name;
  return "?";
}

std::optional<Family> parse_family(std::string_view text) {
  for (const auto& [value, name] : kFamilies)
    if (name == text) return value;
  return std::nullopt;
}

std::optional<Algorithm> parse_algorithm(std::string_view text) {
  for (const auto& [value, name] : kAlgorithms)
    if (name == text) return value;
  return std::nullopt;
}

std::size_t DensityRule::m0_for(std::size_t n) const {
  if (!sqrt_n) return m0;
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(static_cast<double>(n))));
}

std::size_t BenchConfig::k_for(std::size_t n) const {
  if (fixed_k) return *fixed_k;
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(static_cast<double>(n))));
}

std::pair<VertexId, VertexId> select_endpoints(const Graph& g, Family family) {
  const std::size_t n = g.vertex_count();
  if (family == Family::hypercube && !std::has_single_bit(n))
    throw std::invalid_argument("hypercube vertex count must be a power of two");
  return {0, static_cast<VertexId>(n - 1)};
}

Graph generate(Family family, std::size_t n, const DensityRule& density, std::uint64_t seed) {
  if (family == Family::hypercube) {
    if (n < 2 || !std::has_single_bit(n))
      throw std::invalid_argument("hypercube size must be a power of two >= 2, got " + std::to_string(n));
    return gen_hypercube(std::countr_zero(n), RngSeed{seed});
  }
  const std::size_t m0 = density.m0_for(n);
  return gen_scale_free(n, m0, RngSeed{seed});
}

std::vector<BenchRecord> run_benchmark(const BenchConfig& cfg) {
  if (cfg.repetitions == 0) throw std::invalid_argument("repetitions must be at least 1");
  std::vector<Algorithm> algorithms = cfg.algorithms;
  std::sort(algorithms.begin(), algorithms.end());
  algorithms.erase(std::unique(algorithms.begin(), algorithms.end()), algorithms.end());
  std::vector<std::size_t> sizes = cfg.sizes;
  std::sort(sizes.begin(), sizes.end());
  std::vector<std::uint64_t> seeds = cfg.seeds;
  std::sort(seeds.begin(), seeds.end());

  std::vector<BenchRecord> records;
  for (std::size_t n : sizes) {
    for (std::uint64_t seed : seeds) {
      BenchRecord base;
      base.family = cfg.family;
      base.n = n;
      base.seed = seed;
      base.k = cfg.k_for(n);

      Graph g;
      std::string setup_error;
      try {
        g = generate(cfg.family, n, cfg.density, seed);
        base.m = g.edge_count();
      } catch (const std::exception& e) {
        setup_error = e.what();
      }
      std::unique_ptr<AllPairsTrees> store;
      if (setup_error.empty() && cfg.apsp) store = std::make_unique<AllPairsTrees>(g);

      for (Algorithm algo : algorithms) {
        BenchRecord record = base;
        record.algorithm = algo;
        if (!setup_error.empty()) {
          record.error = setup_error;
          records.push_back(std::move(record));
          continue;
        }
        try {
          const auto [s, t] = select_endpoints(g, cfg.family);
          std::vector<Timed> runs;
          for (std::size_t rep = 0; rep < cfg.repetitions; ++rep)
            runs.push_back(run_once(algo, g, record.k, s, t, store.get()));
          std::sort(runs.begin(), runs.end(),
                    [](const Timed& a, const Timed& b) { return a.stats.total_s() < b.stats.total_s(); });
          const Timed& median = runs[runs.size() / 2];
          record.t_sssp_s = median.stats.t_sssp_s;
          record.t_reduce_s = median.stats.t_reduce_s;
          record.t_search_s = median.stats.t_search_s;
          record.t_total_s = median.stats.total_s();
          if (is_gr(algo)) {
            record.n_reduced = median.stats.n_reduced;
            record.reduction_rate = static_cast<double>(median.stats.n_reduced) / static_cast<double>(n);
          }
          record.paths_found = median.result.paths.size();
          record.lengths = median.result.lengths();
        } catch (const std::exception& e) {
          record.error = e.what();
        }
        records.push_back(std::move(record));
      }
    }
  }
  return records;
}

std::vector<std::string> agreement_problems(const std::vector<BenchRecord>& records) {
  std::vector<std::string> problems;
  std::map<std::tuple<std::size_t, std::uint64_t, std::size_t>, const BenchRecord*> reference;
  for (const BenchRecord& r : records) {
    if (!r.error.empty()) continue;
    const auto key = std::make_tuple(r.n, r.seed, r.k);
    const auto [it, inserted] = reference.emplace(key, &r);
    if (inserted) continue;
    const BenchRecord& ref = *it->second;
    bool same = ref.lengths.size() == r.lengths.size();
    for (std::size_t i = 0; same && i < r.lengths.size(); ++i)
      same = std::abs(ref.lengths[i] - r.lengths[i]) <= 1e-9 * std::max(1.0, std::abs(ref.lengths[i]));
    if (!same)
      problems.push_back("n=" + std::to_string(r.n) + " seed=" + std::to_string(r.seed) + ": " +
                         std::string(to_string(r.algorithm)) + " disagrees with " +
                         std::string(to_string(ref.algorithm)));
  }
  return problems;
}

void write_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const BenchRecord& r : records) {
    if (!r.error.empty()) continue;
    out << to_string(r.family) << ',' << r.n << ',' << r.m << ',' << r.k << ',' << r.seed << ','
        << to_string(r.algorithm) << ',' << format_g6(r.t_sssp_s) << ',' << format_g6(r.t_reduce_s) << ','
        << format_g6(r.t_search_s) << ',' << format_g6(r.t_total_s) << ',' << r.n_reduced << ','
        << format_g6(r.reduction_rate) << ',' << r.paths_found << '\n';
  }
}

void write_csv(const std::vector<BenchRecord>& records, const std::filesystem::path& destination) {
  std::ofstream out(destination);
  if (!out) throw std::runtime_error("cannot open " + destination.string() + " for writing");
  write_csv(records, out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + destination.string());
}

std::vector<BenchRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw std::runtime_error("csv: unexpected header");
  std::vector<BenchRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream fields(line);
    for (std::string cell; std::getline(fields, cell, ',');) f.push_back(cell);
    if (f.size() != 13) throw std::runtime_error("csv: expected 13 fields in '" + line + "'");
    BenchRecord r;
    const auto family = parse_family(f[0]);
    const auto algo = parse_algorithm(f[5]);
    if (!family || !algo) throw std::runtime_error("csv: unknown family or algorithm in '" + line + "'");
    r.family = *family;
    r.algorithm = *algo;
    try {
      r.n = std::stoull(f[1]);
      r.m = std::stoull(f[2]);
      r.k = std::stoull(f[3]);
      r.seed = std::stoull(f[4]);
      r.t_sssp_s = std::stod(f[6]);
      r.t_reduce_s = std::stod(f[7]);
      r.t_search_s = std::stod(f[8]);
      r.t_total_s = std::stod(f[9]);
      r.n_reduced = std::stoull(f[10]);
      r.reduction_rate = std::stod(f[11]);
      r.paths_found = std::stoull(f[12]);
    } catch (const std::exception&) {
      throw std::runtime_error("csv: malformed number in '" + line + "'");
    }
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace grksp
