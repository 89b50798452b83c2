#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "smw/branch_decomposition.hpp"
#include "smw/cut_functions.hpp"
#include "smw/error.hpp"
#include "smw/generators.hpp"
#include "smw/graph.hpp"
#include "smw/hc_solver.hpp"
#include "smw/io.hpp"
#include "smw/oracles.hpp"
#include "smw/sm_pipeline.hpp"
#include "smw/split_decomposition.hpp"

namespace smw::cli {

namespace {

struct Globals {
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

BranchDecomposition load_decomposition(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  // Accept the full output of `decompose` as well as a bare decomposition.
  if (doc.is_object() && doc.contains("branch_decomposition")) return branch_decomposition_from_json(doc["branch_decomposition"]);
  return branch_decomposition_from_json(doc);
}

std::size_t sm_width_of(const Graph& g, const BranchDecomposition& bd) { return f_width(bd, sm_function(g)); }

int cmd_decompose(const std::string& file, bool exact, std::ostream& out) {
  const Graph g = read_edge_list_file(file);
  if (!g.is_connected()) throw InvalidInput("graph must be connected");
  const BranchDecomposition bd = exact ? exact_best_decomposition(sm_function(g), 12).decomposition
                                       : approx_sm_decomposition(g);
  Json doc;
  doc["split_decomposition"] = split_decomposition_json(split_decompose(g));
  doc["branch_decomposition"] = branch_decomposition_json(bd);
  doc["width_certificate"] = width_certificate(g, bd);
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_width(const std::string& file, bool exact, std::ostream& out) {
  const Graph g = read_edge_list_file(file);
  if (!g.is_connected()) throw InvalidInput("graph must be connected");
  const std::size_t w = exact ? brute_sm_width(g) : sm_width_of(g, approx_sm_decomposition(g));
  out << "sm-width " << w << '\n';
  return kExitOk;
}

int cmd_hc(const std::string& file, const std::string& dec_path, const std::string& trace_path, bool no_trim,
           const Globals& gl, std::ostream& out) {
  const Graph g = read_edge_list_file(file);
  SolveOptions opts;
  opts.seed = gl.seed;
  opts.trimming = !no_trim;
  HcResult r;
  if (g.vertex_count() >= 3 && g.is_connected()) {
    const BranchDecomposition bd = dec_path.empty() ? approx_sm_decomposition(g) : load_decomposition(dec_path);
    r = solve_hc(g, bd, opts);
  }
  if (!trace_path.empty()) {
    std::ofstream t(trace_path);
    if (!t) throw InvalidInput("cannot write " + trace_path);
    t << node_trace_json(r).dump(2) << '\n';
  }
  if (!r.hamiltonian) {
    out << "NOT HAMILTONIAN\n";
    return kExitNo;
  }
  if (!r.witness || !is_hamiltonian_cycle(g, *r.witness)) throw std::logic_error("solver returned an invalid witness");
  out << "HAMILTONIAN\n";
  for (const auto& e : g.edge_list(*r.witness)) out << e.u << ' ' << e.v << '\n';
  return kExitOk;
}

int cmd_verify(const std::string& file, const Globals& gl, std::ostream& out) {
  const Graph g = read_edge_list_file(file);
  if (!g.is_connected()) throw InvalidInput("graph must be connected");
  const std::size_t n = g.vertex_count();
  if (n > 20) throw Refused("verify refused: " + std::to_string(n) + " vertices exceed limit 20");
  bool all_ok = true;
  auto report = [&](const std::string& name, std::optional<bool> ok) {
    out << name << ": " << (!ok ? "skipped" : *ok ? "ok" : "FAIL") << '\n';
    if (ok && !*ok) all_ok = false;
  };

  const SplitDecomposition dec = split_decompose(g);
  bool primes_ok = true;
  for (const auto& p : dec.primes())
    if (p.vertex_count() >= 4 && !is_prime_exhaustive(p)) primes_ok = false;
  const Graph back = dec.recompose();
  report("split-recompose", back.vertices() == g.vertices() && back.edges() == g.edges());
  report("split-primes", primes_ok);

  const BranchDecomposition bd = approx_sm_decomposition(g);
  const std::size_t approx = sm_width_of(g, bd);
  if (n <= 12) {
    report("approx-factor-18", approx <= 18 * brute_sm_width(g));
  } else {
    report("approx-factor-18", std::nullopt);
  }

  struct Trim {
    VertexSet home;
    std::vector<Certificate> in, out;
  };
  std::vector<Trim> trims;
  SolveOptions opts;
  opts.seed = gl.seed;
  if (n <= 8)
    opts.trace = [&](const TraceEvent& e) {
      if (e.kind == TraceEvent::Kind::kTrim) trims.push_back({e.home, *e.input, *e.output});
    };
  const HcResult r = solve_hc(g, bd, opts);
  const BruteHc b = brute_hc(g);
  report("hc-agrees", r.hamiltonian == b.hamiltonian);
  report("hc-witness", r.hamiltonian ? std::optional<bool>(r.witness && is_hamiltonian_cycle(g, *r.witness))
                                     : std::nullopt);
  if (n <= 8) {
    const auto cycles = all_hamiltonian_cycles(g);
    bool ok = true;
    for (const auto& t : trims) {
      std::unordered_set<EdgeSet, BitsHash> big(t.in.begin(), t.in.end());
      if (!verify_preservation(g, t.home, [&](const EdgeSet& s) { return big.count(s) > 0; }, t.out, cycles))
        ok = false;
    }
    report("trim-preservation", ok);
  } else {
    report("trim-preservation", std::nullopt);
  }
  return all_ok ? kExitOk : kExitNo;
}

struct BenchRow {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> smw_exact;
  std::size_t smw_approx = 0;
  std::size_t max_family = 0;
  long long millis = 0;
};

BenchRow bench_row(std::size_t n, std::uint64_t seed, double p, std::size_t band, std::size_t exact_limit,
                   bool timing) {
  std::mt19937_64 rng(seed);
  const Graph g = band > 0 ? banded_graph(n, band, rng) : random_connected_graph(n, p, rng);
  BenchRow row{n, seed, std::nullopt, 0, 0, 0};
  const auto t0 = std::chrono::steady_clock::now();
  const BranchDecomposition bd = band > 0 ? caterpillar(g.vertices()) : approx_sm_decomposition(g);
  SolveOptions opts;
  opts.seed = seed;
  const HcResult r = solve_hc(g, bd, opts);
  const auto t1 = std::chrono::steady_clock::now();
  row.max_family = r.max_family;
  row.smw_approx = sm_width_of(g, bd);
  if (n <= exact_limit) row.smw_exact = brute_sm_width(g, exact_limit);
  if (timing) row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return row;
}

int cmd_bench(const std::vector<std::size_t>& sizes, std::size_t samples, double p, std::size_t band,
              std::size_t exact_limit, bool timing, const std::string& out_path, const Globals& gl,
              std::ostream& out) {
  if (p <= 0.0 || p > 1.0) throw InvalidInput("--p must lie in (0, 1]");
  for (auto n : sizes)
    if (n == 0 || (band > 0 && n <= band)) throw InvalidInput("bad --n " + std::to_string(n));
  struct Task {
    std::size_t n;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (auto n : sizes)
    for (std::size_t s = 0; s < samples; ++s) tasks.push_back({n, gl.seed + s});
  std::vector<BenchRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        rows[i] = bench_row(tasks[i].n, tasks[i].seed, p, band, exact_limit, timing);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < std::max(1U, gl.jobs); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw InvalidInput("cannot write " + out_path);
  }
  std::ostream& csv = out_path.empty() ? out : file;
  csv << "n,seed,smw_exact,smw_approx,max_family,millis\n";
  for (const auto& r : rows)
    csv << r.n << ',' << r.seed << ',' << (r.smw_exact ? std::to_string(*r.smw_exact) : "NA") << ','
        << r.smw_approx << ',' << r.max_family << ',' << r.millis << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hamiltonian cycle by split-matching-width decompositions", "smw"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_option("--seed", gl.seed, "seed for the field projection and for bench sampling");
  app.add_option("--jobs", gl.jobs, "worker threads (bench)")->check(CLI::PositiveNumber);

  std::string file;
  bool exact = false;
  bool approx = false;

  auto* decompose = app.add_subcommand("decompose", "sm decomposition as JSON with its width certificate");
  decompose->add_option("file", file, "edge list")->required();
  decompose->add_flag("--exact", exact, "optimal decomposition (at most 12 vertices)");

  auto* width = app.add_subcommand("width", "print the sm-width");
  width->add_option("file", file, "edge list")->required();
  auto* wx = width->add_flag("--exact", exact, "exact oracle");
  auto* wa = width->add_flag("--approx", approx, "pipeline decomposition (default)");
  wx->excludes(wa);

  std::string dec_path, trace_path;
  bool no_trim = false;
  auto* hc = app.add_subcommand("hc", "decide Hamiltonicity");
  hc->add_option("file", file, "edge list")->required();
  hc->add_option("--decomposition", dec_path, "branch decomposition JSON");
  hc->add_option("--trace", trace_path, "write per-node family sizes as JSON");
  hc->add_flag("--no-trim", no_trim, "keep full certificate families");

  auto* verify = app.add_subcommand("verify", "check this input against the brute-force oracles");
  verify->add_option("file", file, "edge list")->required();

  std::vector<std::size_t> sizes;
  std::size_t samples = 10;
  double p = 0.5;
  std::size_t band = 0;
  std::size_t exact_limit = 10;
  bool no_timing = false;
  std::string out_path;
  auto* bench = app.add_subcommand("bench", "sampled sweep, CSV on stdout");
  bench->add_option("--n", sizes, "graph sizes")->required();
  bench->add_option("--samples", samples, "graphs per size");
  bench->add_option("--p", p, "edge probability of random graphs");
  bench->add_option("--bandwidth", band, "banded graphs with cut cover k, solved on the linear order");
  bench->add_option("--exact-limit", exact_limit, "largest n for the exact width column");
  bench->add_flag("--no-timing", no_timing, "write 0 in the millis column");
  bench->add_option("-o,--output", out_path, "CSV file instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    if (*decompose) return cmd_decompose(file, exact, out);
    if (*width) return cmd_width(file, exact, out);
    if (*hc) return cmd_hc(file, dec_path, trace_path, no_trim, gl, out);
    if (*verify) return cmd_verify(file, gl, out);
    return cmd_bench(sizes, samples, p, band, exact_limit, !no_timing, out_path, gl, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const Refused& e) {
    err << "refused: " << e.what() << '\n';
    return kExitRefused;
  }
}

}  // namespace smw::cli
