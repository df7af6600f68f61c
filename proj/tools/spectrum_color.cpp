// spectrum-color: solve, bound, verify and benchmark spectrum coloring instances.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "spectrum_color/bench.hpp"
#include "spectrum_color/bounds.hpp"
#include "spectrum_color/errors.hpp"
#include "spectrum_color/harmony.hpp"
#include "spectrum_color/io.hpp"
#include "spectrum_color/oracle.hpp"
#include "spectrum_color/solvers.hpp"

namespace sc = spectrum_color;

namespace {

constexpr int kExitInfeasible = 2;
constexpr int kExitError = 1;

struct InstanceArgs {
  std::string graph_path;
  std::string matrix_path;
  bool expdecay = false;
  std::string base = "2";
  int size = 0;
};

void add_instance_options(CLI::App* cmd, InstanceArgs& args) {
  cmd->add_option("--graph", args.graph_path, "graph file (p edge n m / e u v)")->required();
  auto* matrix = cmd->add_option("--matrix", args.matrix_path, "interference matrix CSV");
  auto* decay = cmd->add_flag("--expdecay", args.expdecay, "use W(i,j) = 1 / base^|i-j|");
  matrix->excludes(decay);
  cmd->add_option("--base", args.base, "decay base (default 2)")->needs(decay);
  cmd->add_option("--size", args.size, "decay spectrum size")->needs(decay);
}

struct Instance {
  sc::Graph graph;
  sc::Spectrum<sc::Rational> spectrum;
};

// `min_size` lets the decay spectrum grow to the parameter in use.
Instance load_instance(const InstanceArgs& args, int min_size) {
  sc::Graph graph = sc::read_graph_file(args.graph_path);
  if (args.expdecay) {
    const int size = std::max({args.size, min_size, 1});
    return {std::move(graph), sc::make_exp_decay_spectrum(size, sc::parse_rational(args.base))};
  }
  if (args.matrix_path.empty()) throw sc::InvalidParameter("need --matrix or --expdecay");
  return {std::move(graph), sc::read_matrix_file(args.matrix_path)};
}

struct SolveArgs {
  InstanceArgs instance;
  std::string strategy = "dsatur";
  std::uint64_t seed = 1;
  bool deterministic = false;
  std::string format = "csv";
  sc::HarmonyParams harmony;
};

void add_solve_options(CLI::App* cmd, SolveArgs& args, std::vector<std::string> strategies) {
  add_instance_options(cmd, args.instance);
  cmd->add_option("--strategy", args.strategy)->check(CLI::IsMember(strategies));
  cmd->add_option("--seed", args.seed);
  cmd->add_flag("--deterministic", args.deterministic, "break DSATUR ties by lowest index");
  cmd->add_option("--format", args.format)->check(CLI::IsMember({"csv", "text"}));
  cmd->add_option("--hms", args.harmony.memory_size, "harmony memory size");
  cmd->add_option("--hmcr", args.harmony.memory_consider_rate, "memory considering rate");
  cmd->add_option("--par", args.harmony.pitch_adjust_rate, "pitch adjusting rate");
  cmd->add_option("--evals", args.harmony.max_evaluations, "evaluation budget");
}

void print_report(const sc::SolveReport& report, const std::string& format) {
  if (format == "csv") {
    std::cout << sc::report_csv_header() << '\n' << sc::to_csv_record(report) << '\n';
  } else {
    std::cout << sc::to_pretty_text(report);
  }
}

int run_solve_tsc(const SolveArgs& args, int k) {
  const Instance inst = load_instance(args.instance, k);
  const sc::RngSeed seed{args.seed};
  const auto tie = args.deterministic ? sc::TieBreak::kLowestIndex : sc::TieBreak::kRandom;
  sc::SolveReport report;
  if (args.strategy == "dsatur") {
    report = sc::tsc_dsatur(inst.graph, inst.spectrum, k, seed, tie);
  } else if (args.strategy == "random") {
    report = sc::random_coloring(inst.graph, inst.spectrum, k, seed);
  } else if (args.strategy == "balanced") {
    report = sc::balanced_coloring(inst.graph, inst.spectrum, k, seed);
  } else {
    sc::HarmonyParams params = args.harmony;
    params.seed = seed;
    report = sc::harmony_tsc(inst.graph, inst.spectrum, k, params);
  }
  print_report(report, args.format);
  return 0;
}

int run_solve_csc(const SolveArgs& args, const std::string& t_text) {
  const sc::Rational t = sc::parse_rational(t_text);
  // A decay spectrum is sized to at least n so every vertex could get its own color.
  const int n = sc::read_graph_file(args.instance.graph_path).order();
  const Instance sized = load_instance(args.instance, n);
  const sc::RngSeed seed{args.seed};
  const auto tie = args.deterministic ? sc::TieBreak::kLowestIndex : sc::TieBreak::kRandom;
  sc::SolveReport report;
  if (args.strategy == "dsatur") {
    report = sc::csc_dsatur(sized.graph, sized.spectrum, t, seed, tie);
  } else if (args.strategy == "random") {
    report = sc::iterative_csc(sized.graph, sized.spectrum, t, sc::random_inner_solver(), seed);
  } else {
    sc::HarmonyParams params = args.harmony;
    params.seed = seed;
    report = sc::harmony_csc(sized.graph, sized.spectrum, t, params);
  }
  print_report(report, args.format);
  return report.feasible ? 0 : kExitInfeasible;
}

void print_bound(const sc::BoundReport& report, bool integral) {
  auto both = [](const sc::Rational& x) {
    return sc::to_string(x) + " (" + std::to_string(sc::to_double(x)) + ")";
  };
  std::cout << "max_degree " << report.max_degree << '\n'
            << "norm " << both(report.norm) << '\n'
            << "gcd " << (report.gcd == 0 ? std::string("undefined") : both(report.gcd)) << '\n'
            << "bound " << (integral ? sc::to_string(report.value) : both(report.value)) << '\n'
            << "precondition " << (report.precondition_holds ? "true" : "false") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Threshold and chromatic spectrum coloring"};
  app.require_subcommand(1);

  SolveArgs tsc_args;
  int tsc_k = 0;
  auto* solve_tsc = app.add_subcommand("solve-tsc", "minimize the max vertex interference");
  add_solve_options(solve_tsc, tsc_args, {"dsatur", "random", "harmony", "balanced"});
  solve_tsc->add_option("--k", tsc_k, "number of colors")->required();

  SolveArgs csc_args;
  std::string csc_t;
  auto* solve_csc = app.add_subcommand("solve-csc", "minimize colors under a threshold");
  add_solve_options(solve_csc, csc_args, {"dsatur", "random", "harmony"});
  solve_csc->add_option("--t", csc_t, "threshold (integer, decimal or a/b)")->required();

  InstanceArgs bound_args;
  std::optional<int> bound_k;
  std::optional<std::string> bound_t;
  auto* bound = app.add_subcommand("bound", "theoretical upper bounds");
  add_instance_options(bound, bound_args);
  auto* bk = bound->add_option("--k", bound_k);
  auto* bt = bound->add_option("--t", bound_t);
  bk->excludes(bt);

  InstanceArgs oracle_args;
  std::string oracle_problem;
  int oracle_k = 0;
  std::string oracle_t;
  std::uint64_t oracle_cap = sc::kDefaultEnumerationCap;
  auto* oracle = app.add_subcommand("oracle", "exact optimum by exhaustive search");
  add_instance_options(oracle, oracle_args);
  oracle->add_option("--problem", oracle_problem)
      ->required()
      ->check(CLI::IsMember({"tsc", "csc"}));
  oracle->add_option("--k", oracle_k);
  oracle->add_option("--t", oracle_t);
  oracle->add_option("--cap", oracle_cap, "max complete colorings");

  std::string bench_problem;
  std::string bench_config;
  std::string bench_out;
  std::string bench_format = "csv";
  std::string bench_series;
  auto* bench = app.add_subcommand("bench", "random-graph experiments");
  bench->add_option("--problem", bench_problem)->required()->check(CLI::IsMember({"tsc", "csc"}));
  bench->add_option("--config", bench_config, "key = value file (defaults if omitted)");
  bench->add_option("--out", bench_out, "report file (stdout if omitted)");
  bench->add_option("--format", bench_format)->check(CLI::IsMember({"csv", "markdown"}));
  bench->add_option("--series", bench_series, "also write the np vs best average series");

  std::string gen_name;
  int gen_n = 0;
  std::string gen_p;
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("gen-graph", "write a named or random graph");
  auto* gname = gen->add_option("--name", gen_name, "paw, cycle(m), complete(m), star(m), path(m)");
  auto* gn = gen->add_option("--n", gen_n);
  gen->add_option("--p", gen_p)->needs(gn);
  gen->add_option("--seed", gen_seed);
  gname->excludes(gn);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_tsc) return run_solve_tsc(tsc_args, tsc_k);
    if (*solve_csc) return run_solve_csc(csc_args, csc_t);
    if (*bound) {
      if (bound_t) {
        const auto t = sc::parse_rational(*bound_t);
        const Instance inst = load_instance(bound_args, 0);
        print_bound(sc::csc_bound_report(inst.graph, inst.spectrum, t), true);
      } else {
        if (!bound_k) throw sc::InvalidParameter("bound needs --k or --t");
        const Instance inst = load_instance(bound_args, *bound_k);
        print_bound(sc::tsc_bound_report(inst.graph, inst.spectrum, *bound_k), false);
      }
      return 0;
    }
    if (*oracle) {
      if (oracle_problem == "tsc") {
        const Instance inst = load_instance(oracle_args, oracle_k);
        const auto r = sc::exact_tsc(inst.graph, inst.spectrum, oracle_k, oracle_cap);
        std::cout << "T " << sc::to_string(r.optimum) << '\n';
        std::cout << "witness ";
        for (auto c : r.witness.colors()) std::cout << c << ' ';
        std::cout << "\nenumerated " << r.enumerated << '\n';
        return 0;
      }
      if (oracle_t.empty()) throw sc::InvalidParameter("oracle --problem csc needs --t");
      const int n = sc::read_graph_file(oracle_args.graph_path).order();
      const Instance inst = load_instance(oracle_args, n);
      const auto r = sc::exact_csc(inst.graph, inst.spectrum, sc::parse_rational(oracle_t),
                                   oracle_cap);
      if (!r.feasible) {
        std::cout << "infeasible\nenumerated " << r.enumerated << '\n';
        return kExitInfeasible;
      }
      std::cout << "chi " << sc::to_string(r.optimum) << "\nwitness ";
      for (auto c : r.witness.colors()) std::cout << c << ' ';
      std::cout << "\nenumerated " << r.enumerated << '\n';
      return 0;
    }
    if (*bench) {
      const sc::BenchConfig config =
          bench_config.empty() ? sc::BenchConfig{} : sc::read_bench_config_file(bench_config);
      const auto problem = bench_problem == "tsc" ? sc::Problem::kTsc : sc::Problem::kCsc;
      const auto rows = sc::run_bench(config, problem);
      const auto format =
          bench_format == "csv" ? sc::ReportFormat::kCsv : sc::ReportFormat::kMarkdown;
      for (const auto& row : rows) {
        if (row.random_exceeds_bound) {
          std::cerr << "note: random average exceeds the bound for n=" << row.category.n
                    << " p=" << sc::to_double(row.category.p) << '\n';
        }
      }
      if (bench_out.empty()) {
        sc::emit_report(rows, format, std::cout);
      } else {
        std::ofstream out(bench_out);
        if (!out) throw std::ios_base::failure("cannot open '" + bench_out + "'");
        sc::emit_report(rows, format, out);
      }
      if (!bench_series.empty()) {
        std::ofstream out(bench_series);
        if (!out) throw std::ios_base::failure("cannot open '" + bench_series + "'");
        out << sc::emit_series(rows);
      }
      return 0;
    }
    if (*gen) {
      if (!gen_name.empty()) {
        sc::write_graph(std::cout, sc::named_graph(gen_name));
      } else {
        const double p = gen_p.empty() ? 0.5 : sc::to_double(sc::parse_rational(gen_p));
        sc::write_graph(std::cout, sc::gen_er_graph(gen_n, p, sc::RngSeed{gen_seed}));
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}
