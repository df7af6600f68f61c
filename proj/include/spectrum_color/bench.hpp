#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spectrum_color/graph.hpp"
#include "spectrum_color/harmony.hpp"
#include "spectrum_color/rational.hpp"
#include "spectrum_color/report.hpp"

namespace spectrum_color {

/// Erdos-Renyi G(n, p): every pair joined independently with probability p.
Graph gen_er_graph(int n, double p, RngSeed seed);

/// "paw", "cycle(m)", "complete(m)", "star(m)" (m leaves), "path(m)".
/// The paw is the triangle {1, 2, 3} with pendant 0 attached to 1.
Graph named_graph(std::string_view name);

enum class Problem { kTsc, kCsc };
enum class Strategy { kRandom, kDsatur, kHarmony };
enum class StdMode {
  kPooled,    ///< sample std over all graph x repetition runs
  kPerGraph,  ///< mean over graphs of the per-graph sample std
};

std::string_view to_string(Strategy strategy);
Strategy parse_strategy(std::string_view name);

struct GraphCategory {
  int n = 60;
  /// Exact so that t = fraction * n * p is exact.
  Rational p;
  int graphs_per_category = 10;
  int repetitions = 20;
  RngSeed master_seed{1};
};

struct ExperimentOptions {
  std::vector<Strategy> strategies{Strategy::kRandom, Strategy::kDsatur, Strategy::kHarmony};
  HarmonyParams harmony;
  int csc_attempts_per_k = kDefaultAttemptsPerK;
  StdMode std_mode = StdMode::kPooled;
  /// 0 = hardware concurrency.
  unsigned workers = 0;
};

struct StrategyStats {
  Strategy strategy = Strategy::kRandom;
  Rational mean;
  double std = 0.0;
  /// CSC runs that found no coloring; they count as n colors.
  int failures = 0;
};

struct ExperimentRow {
  GraphCategory category;
  Problem problem = Problem::kTsc;
  /// k for TSC, the threshold fraction of n * p for CSC.
  Rational parameter;
  std::vector<StrategyStats> stats;
  /// Mean over the category's graphs of the per-graph bound.
  Rational bound;
  /// 100 * (bound - best mean) / bound, unrounded.
  double gap_pct = 0.0;
  /// Random baseline above the bound (observed in practice for k = 11).
  bool random_exceeds_bound = false;

  const StrategyStats* find(Strategy strategy) const;
  Rational best_mean() const;
};

/// Per-graph seed: derive(master, n, p, graph index). Per-run seed:
/// derive(graph seed, strategy, repetition). Strategies share graphs.
RngSeed graph_seed(const GraphCategory& category, int graph_index);
RngSeed run_seed(RngSeed graph, Strategy strategy, int repetition);

ExperimentRow run_tsc_experiment(const GraphCategory& category, int k,
                                 const ExperimentOptions& options);
ExperimentRow run_csc_experiment(const GraphCategory& category, const Rational& t_fraction,
                                 const ExperimentOptions& options);

/// Exact mean and sample standard deviation (divisor N-1; 0 when N < 2).
struct Aggregate {
  Rational mean;
  double std = 0.0;
};
Aggregate aggregate(std::span<const Rational> samples);

enum class ReportFormat { kCsv, kMarkdown };

/// CSV: `n,p,param,strategy,avg,std,bound,gap_pct`, one line per strategy
/// of each row, values rounded to one decimal. Markdown: one table row per
/// experiment row, laid out like the published result tables.
std::string emit_report(std::span<const ExperimentRow> rows, ReportFormat format);
/// Throws std::ios_base::failure if the sink fails.
void emit_report(std::span<const ExperimentRow> rows, ReportFormat format, std::ostream& out);

/// `np,param,strategy,best_avg` series for plotting best average vs n*p.
std::string emit_series(std::span<const ExperimentRow> rows);

/// key = value configuration; `#` starts a comment. Keys: n, p, k,
/// t_fractions, graphs_per_category, repetitions, master_seed, strategies,
/// hms, hmcr, par, evals, csc_attempts_per_k, std_mode, workers.
struct BenchConfig {
  std::vector<int> n_values{60, 70, 80};
  std::vector<std::string> p_values{"0.1", "0.3", "0.5", "0.7", "0.9"};
  std::vector<int> k_values{4, 6, 11};
  std::vector<std::string> t_fractions{"0.25", "0.5", "0.75"};
  int graphs_per_category = 10;
  int repetitions = 20;
  std::uint64_t master_seed = 1;
  ExperimentOptions options;
};

BenchConfig parse_bench_config(std::istream& in);
BenchConfig read_bench_config_file(const std::string& path);

/// Rows ordered by parameter, then n, then p.
std::vector<ExperimentRow> run_bench(const BenchConfig& config, Problem problem);

}  // namespace spectrum_color
