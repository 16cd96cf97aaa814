#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "disksssp/geometry.hpp"
#include "disksssp/instance.hpp"
#include "disksssp/oracle.hpp"
#include "disksssp/result.hpp"
#include "disksssp/sssp_arbitrary.hpp"
#include "disksssp/sssp_bounded.hpp"
#include "generators.hpp"
#include "json.hpp"

using namespace disksssp;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t env_seed() {
  const char* s = std::getenv("DISK_SSSP_SEED");
  return s ? std::strtoull(s, nullptr, 10) : 0;
}

DiskInstance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

struct SolveOutcome {
  SsspResult res;
  double ms = 0.0;
  std::int64_t rounds = 0;
};

SolveOutcome run_algo(const std::string& algo, const DiskInstance& inst) {
  SolveOutcome out;
  const auto t0 = std::chrono::steady_clock::now();
  if (algo == "bounded") {
    BoundedSolver solver(inst);
    out.res = solver.run();
    out.rounds = solver.stats().vertex_rounds + solver.stats().alarm_rounds;
  } else if (algo == "arbitrary") {
    ArbitrarySolver solver(inst);
    out.res = solver.run();
    out.rounds = solver.stats().vertex_rounds + solver.stats().up_rounds +
                 solver.stats().down_rounds;
  } else if (algo == "oracle") {
    out.res = solve_oracle(inst);
    out.rounds = inst.n();
  } else {
    throw UsageError("unknown algorithm '" + algo + "'");
  }
  out.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
               .count();
  return out;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int cmd_solve(const std::string& algo, const std::string& in_path, const std::string& out_path,
              bool as_json) {
  DiskInstance inst = read_instance(in_path);
  SolveOutcome out = run_algo(algo, inst);
  std::string text;
  if (as_json) {
    nlohmann::json j;
    j["algo"] = algo;
    j["n"] = inst.n();
    j["source"] = inst.source;
    j["ms"] = out.ms;
    j["rounds"] = out.rounds;
    j["checksum"] = std::to_string(dist_checksum(out.res.dist));
    j["dist"] = out.res.dist;  // unreachable vertices serialize as null
    j["prev"] = out.res.prev;
    text = j.dump(2) + "\n";
  } else {
    text = format_result(out.res);
  }
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write '" + out_path + "'");
    f << text;
  }
  return 0;
}

int cmd_gen(const GeneratorSpec& spec, const std::string& out_path) {
  DiskInstance inst = generate(spec);
  write_instance_file(inst, out_path);
  return 0;
}

int cmd_verify(const std::string& in_path, const std::string& algos_csv) {
  DiskInstance inst = read_instance(in_path);
  std::vector<std::string> algos = split_csv(algos_csv);
  if (algos.empty()) throw UsageError("--algos needs at least one algorithm");
  for (const std::string& a : algos)
    if (a != "bounded" && a != "arbitrary" && a != "oracle")
      throw UsageError("unknown algorithm '" + a + "'");
  bool have_oracle = false;
  for (const std::string& a : algos) have_oracle |= a == "oracle";
  if (!have_oracle && inst.n() <= kDefaultOracleCap) algos.push_back("oracle");

  bool agree = true;
  std::vector<SolveOutcome> outs;
  for (const std::string& a : algos) {
    outs.push_back(run_algo(a, inst));
    const SsspResult& res = outs.back().res;
    for (const std::string& err : validate_result(inst, res)) {
      std::cout << a << ": invalid result: " << err << "\n";
      agree = false;
    }
    std::cout << a << ": checksum=" << dist_checksum(res.dist) << " ms=" << outs.back().ms
              << "\n";
  }
  for (std::size_t i = 1; i < outs.size(); ++i) {
    int shown = 0;
    for (int v = 0; v < inst.n(); ++v)
      if (!near_eq(outs[0].res.dist[v], outs[i].res.dist[v])) {
        agree = false;
        if (shown++ < 5)
          std::cout << "disagree on vertex " << v << ": " << algos[0] << "="
                    << format_double(outs[0].res.dist[v]) << " " << algos[i] << "="
                    << format_double(outs[i].res.dist[v]) << "\n";
      }
  }
  std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
  return agree ? 0 : 1;
}

std::int64_t count_edges(const DiskInstance& inst) {
  std::int64_t m = 0;
  for (int u = 0; u < inst.n(); ++u)
    for (int w = u + 1; w < inst.n(); ++w)
      m += is_edge(inst.vertices[u], inst.vertices[w]);
  return m;
}

int cmd_bench(const std::string& suite_path, const std::string& csv_path) {
  std::ifstream suite(suite_path);
  if (!suite) throw std::runtime_error("cannot open '" + suite_path + "'");

  const bool fresh = [&] {
    std::ifstream existing(csv_path);
    return !existing || existing.peek() == std::ifstream::traits_type::eof();
  }();
  std::ofstream csv(csv_path, std::ios::app);
  if (!csv) throw std::runtime_error("cannot write '" + csv_path + "'");
  if (fresh) csv << "algo,n,psi,seed,ms,edges,checksum\n";

  // Fitted constants for the pair-population bound: the smallest C with
  // sum <= C * n * log2(n) over every arbitrary-algo record of this run.
  double c_small = 0.0, c_large = 0.0;
  bool saw_arbitrary = false;

  std::string line;
  int lineno = 0;
  while (std::getline(suite, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string algo;
    GeneratorSpec spec;
    if (!(fields >> algo)) continue;  // blank or comment-only line
    if (!(fields >> spec.kind >> spec.n >> spec.psi >> spec.seed))
      throw std::runtime_error("suite line " + std::to_string(lineno) +
                               ": expected 'algo kind n psi seed [side]'");
    fields >> spec.side;  // optional; keeps its default when absent

    DiskInstance inst = generate(spec);
    SolveOutcome out;
    if (algo == "arbitrary") {
      // Run through the solver object so the pair populations are observable.
      const auto t0 = std::chrono::steady_clock::now();
      ArbitrarySolver solver(inst);
      out.res = solver.run();
      out.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                   .count();
      const auto tot = solver.paths().totals();
      if (inst.n() >= 2) {
        const double scale = inst.n() * std::log2(static_cast<double>(inst.n()));
        c_small = std::max(c_small, static_cast<double>(tot.small_in_pairs) / scale);
        c_large = std::max(
            c_large, static_cast<double>(tot.large_in_pairs + tot.post_in_pairs) / scale);
      }
      saw_arbitrary = true;
    } else {
      out = run_algo(algo, inst);
    }
    const std::int64_t edges = inst.n() <= 8192 ? count_edges(inst) : -1;
    char ms_buf[32];
    std::snprintf(ms_buf, sizeof ms_buf, "%.3f", out.ms);
    std::ostringstream row;
    row << algo << ',' << spec.n << ',' << format_double(spec.psi) << ',' << spec.seed << ','
        << ms_buf << ',' << edges << ',' << dist_checksum(out.res.dist);
    csv << row.str() << "\n";
    std::cout << row.str() << "\n";
  }
  if (saw_arbitrary) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "# fitted_C_small=%.4f fitted_C_large=%.4f", c_small,
                  c_large);
    csv << buf << "\n";
    std::cout << buf << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact single-source shortest paths on disk graphs"};
  app.require_subcommand(1);

  std::string algo, in_path, out_path;
  bool as_json = false;
  CLI::App* solve = app.add_subcommand("solve", "solve one instance file");
  solve->add_option("--algo", algo, "bounded | arbitrary | oracle")
      ->required()
      ->check(CLI::IsMember({"bounded", "arbitrary", "oracle"}));
  solve->add_option("--in", in_path, "instance file")->required();
  solve->add_option("--out", out_path, "write result here instead of stdout");
  solve->add_flag("--json", as_json, "emit a JSON object instead of result lines");

  GeneratorSpec spec;
  spec.seed = env_seed();
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "generate a random instance file");
  gen->add_option("--kind", spec.kind, "uniform-square | clustered | clique | path-chain")
      ->required()
      ->check(CLI::IsMember({"uniform-square", "clustered", "clique", "path-chain"}));
  gen->add_option("--n", spec.n, "vertex count")
      ->required()
      ->check(CLI::Range(1, std::numeric_limits<int>::max()));
  gen->add_option("--psi", spec.psi, "radius scale (>= 1)")
      ->check(CLI::Range(1.0, 1e300));
  gen->add_option("--seed", spec.seed, "RNG seed (default: $DISK_SSSP_SEED or 0)");
  gen->add_option("--side", spec.side, "placement area side")->check(CLI::PositiveNumber);
  gen->add_option("--out", gen_out, "output instance file")->required();

  std::string verify_in, verify_algos = "bounded,arbitrary";
  CLI::App* verify = app.add_subcommand("verify", "cross-check solvers on one instance");
  verify->add_option("--in", verify_in, "instance file")->required();
  verify->add_option("--algos", verify_algos, "comma-separated solvers (oracle joins when small)");

  std::string suite_path, csv_path;
  CLI::App* bench = app.add_subcommand("bench", "run a benchmark suite");
  bench->add_option("--suite", suite_path, "suite file: 'algo kind n psi seed [side]' lines")
      ->required();
  bench->add_option("--csv", csv_path, "append records to this CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*solve) return cmd_solve(algo, in_path, out_path, as_json);
    if (*gen) return cmd_gen(spec, gen_out);
    if (*verify) return cmd_verify(verify_in, verify_algos);
    if (*bench) return cmd_bench(suite_path, csv_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
