#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "difr/cover.hpp"
#include "difr/io.hpp"
#include "difr/oracle.hpp"
#include "difr/ptas.hpp"
#include "difr/reductions.hpp"
#include "difr/rules.hpp"
#include "difr/structured.hpp"
#include "difr/treewidth.hpp"

using namespace difr;

namespace {

constexpr int kExitOk = 0, kExitError = 1, kExitNegative = 2;

struct Outcome {
  std::string solver;
  Recoloring recoloring;
  std::vector<std::pair<std::string, std::string>> extra;
};

struct SolveOptions {
  std::string algo = "auto";
  std::string p;
  double epsilon = 1.0;
  std::string demand_file;
  std::string decomposition_file;
  std::string output;
  std::string input;
};

std::string join_ids(const std::vector<Vertex>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? " " : "") + std::to_string(ids[i]);
  return out;
}

int exit_code_for(const Error& e) {
  return e.code() == ErrorCode::Infeasible || e.code() == ErrorCode::StructureMismatch ? kExitNegative
                                                                                        : kExitError;
}

std::string auto_choice(const Instance& inst) {
  if (is_directed_cycle(inst)) return "cycle";
  if (is_underlying_cycle(inst)) return "ucycle";
  if (is_outward_grid(inst)) return "outgrid";
  if (is_underlying_forest(inst)) return "tree";
  if (inst.p().above_half() && inst.max_out_degree() <= 2) return "highp";
  if (heuristic_decomposition(underlying_graph(inst)).width() <= 8) return "treewidth";
  return "cover";
}

Outcome run_solver(const std::string& algo, const Instance& inst, const DemandSet& demand,
                   const SolveOptions& opt) {
  Outcome out{algo, {}, {}};
  if (algo == "auto") {
    auto result = run_solver(auto_choice(inst), inst, demand, opt);
    result.extra.insert(result.extra.begin(), {"dispatch", "auto"});
    return result;
  }
  if (algo == "oracle") {
    auto r = brute_force_min_recoloring(inst, demand);
    if (!r) fail(ErrorCode::Infeasible, "oracle found no recoloring");
    out.recoloring = *r;
  } else if (algo == "cover") {
    out.recoloring = solve_by_cover(inst, demand);
  } else if (algo == "cycle") {
    out.recoloring = solve_directed_cycle(inst, demand);
  } else if (algo == "ucycle") {
    out.recoloring = solve_underlying_cycle(inst, demand);
  } else if (algo == "outgrid") {
    const auto r = analyze_outward_grid(inst, demand);
    out.recoloring = r.recoloring;
    out.extra.push_back({"forced", std::to_string(r.forced.size())});
    out.extra.push_back({"matching", std::to_string(r.matching_size)});
  } else if (algo == "tree") {
    out.recoloring = solve_directed_tree(inst, demand);
  } else if (algo == "highp") {
    out.recoloring = high_p_bounded_outdegree_solve(inst, demand);
  } else if (algo == "treewidth") {
    if (!opt.decomposition_file.empty()) {
      int vertices = 0;
      const auto td = read_td(read_file(opt.decomposition_file), &vertices);
      if (vertices != inst.size())
        fail(ErrorCode::InvalidInput, "decomposition is for " + std::to_string(vertices) + " vertices");
      validate_decomposition(underlying_graph(inst), td);
      out.recoloring = solve_by_treewidth(inst, demand, make_nice(td));
      out.extra.push_back({"width", std::to_string(td.width())});
    } else {
      out.extra.push_back({"width", std::to_string(heuristic_decomposition(underlying_graph(inst)).width())});
      out.recoloring = solve_by_treewidth(inst, demand);
    }
  } else if (algo == "ptas") {
    if (!demand.is_all()) fail(ErrorCode::PreconditionViolated, "ptas solves the full demand only");
    const auto r = baker_solve(inst, opt.epsilon);
    out.recoloring = r.recoloring;
    std::ostringstream eps;
    eps << opt.epsilon;
    out.extra.push_back({"epsilon", eps.str()});
    out.extra.push_back({"k", std::to_string(r.k)});
    out.extra.push_back({"shift", std::to_string(r.shift)});
  } else {
    fail(ErrorCode::InvalidInput, "unknown algorithm '" + algo + "'");
  }
  return out;
}

struct Loaded {
  Instance instance;
  DemandSet demand;
};

Loaded load(const std::string& path, const std::string& p, const std::string& demand_file) {
  auto file = parse_instance(read_file(path));
  Instance inst = p.empty() ? file.instance : file.instance.with_p(Ratio::parse(p));
  DemandSet demand = file.demand.value_or(DemandSet::all(inst.size()));
  if (!demand_file.empty())
    demand = DemandSet::of(inst.size(), parse_solution(read_file(demand_file), inst.size()).flipped());
  return {std::move(inst), std::move(demand)};
}

int cmd_solve(const SolveOptions& opt) {
  const auto [inst, demand] = load(opt.input, opt.p, opt.demand_file);
  const auto start = std::chrono::steady_clock::now();
  const Outcome out = run_solver(opt.algo, inst, demand, opt);
  const auto micros =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  const auto check = verify(inst, out.recoloring, demand);
  std::cout << "solver: " << out.solver << "\n";
  for (const auto& [k, v] : out.extra) std::cout << k << ": " << v << "\n";
  std::cout << "p: " << inst.p().str() << "\n"
            << "n: " << inst.size() << "\n"
            << "size: " << out.recoloring.size() << "\n"
            << "flipped: " << join_ids(out.recoloring.flipped()) << "\n"
            << "verified: " << (check.valid ? "yes" : "no") << "\n"
            << "micros: " << micros << "\n";
  if (!opt.output.empty()) write_file(opt.output, emit_solution(out.recoloring));
  if (!check.valid) {
    std::cerr << "error: solver output failed verification\n";
    return kExitError;
  }
  return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& solution, const std::string& p,
               const std::string& demand_file) {
  const auto [inst, demand] = load(input, p, demand_file);
  const auto flips = parse_solution(read_file(solution), inst.size());
  const auto check = verify(inst, flips, demand);
  if (check.valid) {
    std::cout << "valid\nsize: " << flips.size() << "\n";
    return kExitOk;
  }
  std::cout << "invalid\n";
  if (!check.bad_flips.empty()) std::cout << "blue flips: " << join_ids(check.bad_flips) << "\n";
  std::cout << "violators: " << join_ids(check.violators) << "\n";
  return kExitNegative;
}

void emit(const std::string& output, const std::string& text) {
  if (output.empty())
    std::cout << text;
  else
    write_file(output, text);
}

int cmd_reduce(const std::string& what, const std::string& input, const std::string& p,
               const std::string& output) {
  if (what == "hitting-set") {
    const auto hs = parse_hitting_set(read_file(input));
    const auto r = reduce_hitting_set(hs, p.empty() ? kHalf : Ratio::parse(p));
    emit(output, emit_instance(r.instance));
    std::cerr << "budget: " << r.budget << "\ndummies: " << r.dummy_count
              << "\nmax_deficiency: " << r.max_deficiency << "\n";
  } else {
    const auto f = parse_formula(read_file(input));
    const auto r = reduce_rectilinear_3sat(f);
    emit(output, emit_instance(r.instance));
    std::cerr << "budget: " << r.budget << "\n";
    for (std::size_t x = 0; x < f.names.size(); ++x) std::cerr << "ell " << f.names[x] << ": " << r.ell[x] << "\n";
    std::cerr << "max_deficiency: " << r.max_deficiency << "\n";
  }
  return kExitOk;
}

struct BenchRow {
  std::string instance, solver, p;
  int size = 0;
  bool verified = false;
  long long micros = 0;
};

int cmd_bench(const std::string& suite, const std::string& out_path, int count, std::uint64_t seed) {
  struct Case {
    std::string name;
    Instance instance;
    std::vector<std::string> solvers;
  };
  std::vector<Case> cases;
  const Ratio ps[] = {Ratio(1, 3), kHalf, Ratio(2, 3)};
  if (suite == "oracle-equivalence") {
    const std::pair<std::string, std::string> classes[] = {
        {"directed_cycle", "cycle"}, {"underlying_cycle", "ucycle"},
        {"outward_grid", "outgrid"}, {"directed_tree", "tree"}, {"generic", "cover"}};
    for (const auto& [kind, solver] : classes)
      for (int i = 0; i < count; ++i) {
        GenerateParams g;
        g.kind = kind;
        g.seed = seed + i;
        g.p = ps[i % 3];
        g.n = kind == "outward_grid" ? 3 : 8 + i % 5;
        g.cols = kind == "outward_grid" ? 3 + i % 2 : 0;
        cases.push_back({kind + "-" + std::to_string(i), generate_random(g), {solver, "oracle"}});
      }
  } else if (suite == "grids") {
    for (int i = 0; i < count; ++i) {
      GenerateParams g;
      g.kind = "planar_grid";
      g.seed = seed + i;
      g.n = 3 + i % 3;
      cases.push_back({"grid-" + std::to_string(i), generate_random(g), {"treewidth", "cover", "ptas"}});
    }
  } else {
    fail(ErrorCode::InvalidInput, "unknown suite '" + suite + "' (oracle-equivalence, grids)");
  }

  std::vector<BenchRow> rows;
  int mismatches = 0, failures = 0;
  SolveOptions opt;
  for (const auto& c : cases) {
    const auto demand = DemandSet::all(c.instance.size());
    std::map<std::string, int> sizes;
    for (const auto& solver : c.solvers) {
      const auto start = std::chrono::steady_clock::now();
      const auto out = run_solver(solver, c.instance, demand, opt);
      const auto micros =
          std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
      const bool ok = verify(c.instance, out.recoloring, demand).valid;
      failures += !ok;
      sizes[solver] = out.recoloring.size();
      rows.push_back({c.name, solver, c.instance.p().str(), out.recoloring.size(), ok, micros});
    }
    if (sizes.count("oracle") && sizes.begin()->second != sizes.rbegin()->second) ++mismatches;
  }
  std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.instance, a.solver) < std::tie(b.instance, b.solver);
  });
  std::string csv(kBenchHeader);
  csv += '\n';
  for (const auto& r : rows)
    csv += r.instance + "," + r.solver + "," + r.p + "," + std::to_string(r.size) + "," +
           (r.verified ? "1" : "0") + "," + std::to_string(r.micros) + "\n";
  emit(out_path, csv);
  std::cerr << "cases: " << cases.size() << "\nmismatches: " << mismatches << "\nunverified: " << failures << "\n";
  return mismatches == 0 && failures == 0 ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum recolorings that remove p-illusion from two-colored digraphs"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* s = app.add_subcommand("solve", "Solve an instance and verify the result");
  s->add_option("--algo", solve.algo, "Solver")
      ->check(CLI::IsMember({"auto", "oracle", "cover", "cycle", "ucycle", "outgrid", "tree", "highp",
                             "treewidth", "ptas"}));
  s->add_option("--p", solve.p, "Override the threshold, NUM/DEN");
  s->add_option("--epsilon", solve.epsilon, "PTAS accuracy")->check(CLI::PositiveNumber);
  s->add_option("--demand", solve.demand_file, "File of demanded vertex ids");
  s->add_option("--decomposition", solve.decomposition_file, "Tree decomposition in .td format");
  s->add_option("--output", solve.output, "Write the flipped ids here");
  s->add_option("input", solve.input, "Instance file")->required();

  std::string v_input, v_solution, v_p, v_demand;
  auto* v = app.add_subcommand("verify", "Check a solution file");
  v->add_option("--solution", v_solution, "Flipped ids, one per line")->required();
  v->add_option("--p", v_p, "Override the threshold");
  v->add_option("--demand", v_demand, "File of demanded vertex ids");
  v->add_option("input", v_input, "Instance file")->required();

  GenerateParams gen;
  std::string g_p = "1/2", g_output;
  auto* g = app.add_subcommand("generate", "Write a seeded random instance");
  g->add_option("--kind", gen.kind, "Instance class")->check(CLI::IsMember(generator_kinds()));
  g->add_option("--n", gen.n, "Vertices, or rows for grid kinds");
  g->add_option("--cols", gen.cols, "Columns for grid kinds (default: square)");
  g->add_option("--red", gen.red, "Probability that a vertex is red");
  g->add_option("--p", g_p, "Threshold NUM/DEN");
  g->add_option("--seed", gen.seed, "Random seed");
  g->add_option("--output", g_output, "Output file (default: stdout)");

  std::string r_what, r_input, r_p, r_output;
  auto* r = app.add_subcommand("reduce", "Build an instance from a hitting set or formula");
  r->add_option("source", r_what, "hitting-set or 3sat")->required()->check(CLI::IsMember({"hitting-set", "3sat"}));
  r->add_option("input", r_input, "Source file")->required();
  r->add_option("--p", r_p, "Threshold for hitting-set (default 1/2)");
  r->add_option("--output", r_output, "Output file (default: stdout)");

  std::string b_suite = "oracle-equivalence", b_out;
  int b_count = 20;
  std::uint64_t b_seed = 1;
  auto* b = app.add_subcommand("bench", "Run a solver suite and write CSV");
  b->add_option("--suite", b_suite, "oracle-equivalence or grids");
  b->add_option("--out", b_out, "CSV file (default: stdout)");
  b->add_option("--count", b_count, "Instances per class")->check(CLI::Range(1, 100000));
  b->add_option("--seed", b_seed, "First seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }

  try {
    if (*s) return cmd_solve(solve);
    if (*v) return cmd_verify(v_input, v_solution, v_p, v_demand);
    if (*g) {
      gen.p = Ratio::parse(g_p);
      emit(g_output, emit_instance(generate_random(gen)));
      return kExitOk;
    }
    if (*r) return cmd_reduce(r_what, r_input, r_p, r_output);
    if (*b) return cmd_bench(b_suite, b_out, b_count, b_seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
