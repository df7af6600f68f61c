#include "spectrum_color/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <iomanip>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "spectrum_color/bounds.hpp"
#include "spectrum_color/errors.hpp"
#include "spectrum_color/harmony.hpp"
#include "spectrum_color/solvers.hpp"

namespace spectrum_color {

Graph gen_er_graph(int n, double p, RngSeed seed) {
  if (n < 0) throw InvalidParameter("negative vertex count");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameter("edge probability must lie in [0, 1]");
  Engine rng(seed.value);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (uniform_unit(rng) < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

namespace {

int parse_size_argument(std::string_view name, std::string_view family) {
  // family(m)
  const auto open = name.find('(');
  const auto close = name.rfind(')');
  if (open == std::string_view::npos || close != name.size() - 1 || close <= open + 1) {
    throw InvalidParameter("expected " + std::string(family) + "(m), got '" + std::string(name) +
                           "'");
  }
  const std::string digits(name.substr(open + 1, close - open - 1));
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      digits.size() > 6) {
    throw InvalidParameter("bad size in '" + std::string(name) + "'");
  }
  return std::stoi(digits);
}

}  // namespace

Graph named_graph(std::string_view name) {
  if (name == "paw") return Graph(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
  const std::string_view family = name.substr(0, name.find('('));
  std::vector<Edge> edges;
  if (family == "cycle") {
    const int m = parse_size_argument(name, family);
    if (m < 3) throw InvalidParameter("cycle needs at least 3 vertices");
    for (int i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m);
    return Graph(m, std::move(edges));
  }
  if (family == "complete") {
    const int m = parse_size_argument(name, family);
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) edges.emplace_back(i, j);
    }
    return Graph(m, std::move(edges));
  }
  if (family == "star") {
    const int m = parse_size_argument(name, family);
    for (int i = 1; i <= m; ++i) edges.emplace_back(0, i);
    return Graph(m + 1, std::move(edges));
  }
  if (family == "path") {
    const int m = parse_size_argument(name, family);
    for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
    return Graph(m, std::move(edges));
  }
  throw InvalidParameter("unknown graph name '" + std::string(name) + "'");
}

std::string_view to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::kRandom: return "random";
    case Strategy::kDsatur: return "dsatur";
    case Strategy::kHarmony: return "harmony";
  }
  return "?";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "random") return Strategy::kRandom;
  if (name == "dsatur") return Strategy::kDsatur;
  if (name == "harmony") return Strategy::kHarmony;
  throw InvalidParameter("unknown strategy '" + std::string(name) + "'");
}

const StrategyStats* ExperimentRow::find(Strategy strategy) const {
  for (const auto& s : stats) {
    if (s.strategy == strategy) return &s;
  }
  return nullptr;
}

Rational ExperimentRow::best_mean() const {
  if (stats.empty()) return Rational(0);
  Rational best = stats.front().mean;
  for (const auto& s : stats) best = std::min(best, s.mean);
  return best;
}

RngSeed graph_seed(const GraphCategory& category, int graph_index) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  return RngSeed{derive_seed({category.master_seed.value, static_cast<std::uint64_t>(category.n),
                              numerator(category.p).convert_to<std::uint64_t>(),
                              denominator(category.p).convert_to<std::uint64_t>(),
                              static_cast<std::uint64_t>(graph_index)})};
}

RngSeed run_seed(RngSeed graph, Strategy strategy, int repetition) {
  return RngSeed{derive_seed({graph.value, static_cast<std::uint64_t>(strategy) + 1,
                              static_cast<std::uint64_t>(repetition)})};
}

Aggregate aggregate(std::span<const Rational> samples) {
  Aggregate out;
  if (samples.empty()) return out;
  Rational sum(0);
  Rational squares(0);
  for (const auto& x : samples) {
    sum += x;
    squares += x * x;
  }
  const Rational count(static_cast<long long>(samples.size()));
  out.mean = sum / count;
  if (samples.size() > 1) {
    const Rational variance = (squares - count * out.mean * out.mean) / (count - 1);
    out.std = std::sqrt(std::max(0.0, to_double(variance)));
  }
  return out;
}

namespace {

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = count;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

struct Sampled {
  Rational value;
  bool failed = false;
};

using Runner = std::function<Sampled(const Graph&, Strategy, RngSeed)>;

ExperimentRow run_experiment(const GraphCategory& category, Problem problem,
                             const Rational& parameter, const ExperimentOptions& options,
                             const std::function<Rational(const Graph&)>& bound_of,
                             const Runner& runner) {
  if (category.graphs_per_category < 1 || category.repetitions < 1) {
    throw InvalidParameter("graphs_per_category and repetitions must be positive");
  }
  if (category.p < 0 || category.p > 1) throw InvalidParameter("p must lie in [0, 1]");
  if (options.strategies.empty()) throw InvalidParameter("no strategies selected");
  const int graphs = category.graphs_per_category;
  const int reps = category.repetitions;
  const auto strategies = options.strategies;
  const double p = to_double(category.p);

  std::vector<Graph> sample_graphs;
  std::vector<RngSeed> seeds;
  Rational bound_sum(0);
  for (int g = 0; g < graphs; ++g) {
    seeds.push_back(graph_seed(category, g));
    sample_graphs.push_back(gen_er_graph(category.n, p, seeds.back()));
    bound_sum += bound_of(sample_graphs.back());
  }

  const std::size_t per_strategy = static_cast<std::size_t>(graphs) * reps;
  std::vector<Sampled> results(strategies.size() * per_strategy);
  parallel_for(results.size(), options.workers, [&](std::size_t job) {
    const std::size_t s = job / per_strategy;
    const int g = static_cast<int>((job % per_strategy) / reps);
    const int r = static_cast<int>(job % reps);
    results[job] = runner(sample_graphs[g], strategies[s], run_seed(seeds[g], strategies[s], r));
  });

  ExperimentRow row;
  row.category = category;
  row.problem = problem;
  row.parameter = parameter;
  row.bound = bound_sum / Rational(graphs);
  for (std::size_t s = 0; s < strategies.size(); ++s) {
    std::vector<Rational> values;
    StrategyStats stats;
    stats.strategy = strategies[s];
    for (std::size_t i = 0; i < per_strategy; ++i) {
      const auto& sample = results[s * per_strategy + i];
      values.push_back(sample.value);
      stats.failures += sample.failed ? 1 : 0;
    }
    const Aggregate pooled = aggregate(values);
    stats.mean = pooled.mean;
    stats.std = pooled.std;
    if (options.std_mode == StdMode::kPerGraph) {
      double total = 0.0;
      for (int g = 0; g < graphs; ++g) {
        total += aggregate(std::span<const Rational>(values).subspan(
                               static_cast<std::size_t>(g) * reps, reps))
                     .std;
      }
      stats.std = total / graphs;
    }
    row.stats.push_back(stats);
  }
  if (row.bound != 0) {
    row.gap_pct = to_double(Rational(100) * (row.bound - row.best_mean()) / row.bound);
  }
  if (const auto* random = row.find(Strategy::kRandom)) {
    row.random_exceeds_bound = random->mean > row.bound;
  }
  return row;
}

HarmonyParams seeded(HarmonyParams params, RngSeed seed) {
  params.seed = seed;
  return params;
}

}  // namespace

ExperimentRow run_tsc_experiment(const GraphCategory& category, int k,
                                 const ExperimentOptions& options) {
  const Spectrum<Rational> spectrum = make_exp_decay_spectrum(k, Rational(2));
  return run_experiment(
      category, Problem::kTsc, Rational(k), options,
      [&](const Graph& g) { return tsc_bound(g, spectrum, k); },
      [&](const Graph& g, Strategy strategy, RngSeed seed) -> Sampled {
        switch (strategy) {
          case Strategy::kRandom: return {random_coloring(g, spectrum, k, seed).max_interference};
          case Strategy::kDsatur: return {tsc_dsatur(g, spectrum, k, seed).max_interference};
          case Strategy::kHarmony:
            return {harmony_tsc(g, spectrum, k, seeded(options.harmony, seed)).max_interference};
        }
        return {};
      });
}

ExperimentRow run_csc_experiment(const GraphCategory& category, const Rational& t_fraction,
                                 const ExperimentOptions& options) {
  if (t_fraction < 0) throw InvalidParameter("threshold fraction must be non-negative");
  const Spectrum<Rational> spectrum = make_exp_decay_spectrum(category.n, Rational(2));
  const Rational t = t_fraction * Rational(category.n) * category.p;
  const Rational n(category.n);
  auto colors = [&](const SolveReport& report, int value) -> Sampled {
    if (!report.feasible) return {n, true};
    return {Rational(value)};
  };
  return run_experiment(
      category, Problem::kCsc, t_fraction, options,
      [&](const Graph& g) { return Rational(csc_bound(g, spectrum, t)); },
      [&](const Graph& g, Strategy strategy, RngSeed seed) -> Sampled {
        switch (strategy) {
          case Strategy::kRandom: {
            const auto r = iterative_csc(g, spectrum, t, random_inner_solver(), seed,
                                         options.csc_attempts_per_k);
            return colors(r, r.palette);
          }
          case Strategy::kDsatur: {
            const auto r = csc_dsatur(g, spectrum, t, seed);
            return colors(r, r.distinct_colors);
          }
          case Strategy::kHarmony: {
            const auto r = harmony_csc(g, spectrum, t, seeded(options.harmony, seed),
                                       options.csc_attempts_per_k);
            return colors(r, r.palette);
          }
        }
        return {};
      });
}

namespace {

std::string decimal(double value, int places) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(places) << value;
  std::string s = out.str();
  if (s == "-0.0") s = "0.0";
  return s;
}

std::string plain(const Rational& value) {
  std::ostringstream out;
  out << to_double(value);
  return out.str();
}

std::string strategy_title(Problem problem, Strategy strategy) {
  switch (strategy) {
    case Strategy::kRandom: return "Random";
    case Strategy::kDsatur: return problem == Problem::kTsc ? "TSC-DSATUR" : "CSC-DSATUR";
    case Strategy::kHarmony: return "Harmony";
  }
  return "?";
}

void emit_csv(std::span<const ExperimentRow> rows, std::ostream& out) {
  out << "n,p,param,strategy,avg,std,bound,gap_pct\n";
  for (const auto& row : rows) {
    for (const auto& s : row.stats) {
      out << row.category.n << ',' << plain(row.category.p) << ',' << plain(row.parameter) << ','
          << to_string(s.strategy) << ',' << decimal(to_double(s.mean), 1) << ','
          << decimal(s.std, 1) << ',' << decimal(to_double(row.bound), 1) << ','
          << decimal(row.gap_pct, 1) << '\n';
    }
  }
}

void emit_markdown(std::span<const ExperimentRow> rows, std::ostream& out) {
  std::size_t i = 0;
  while (i < rows.size()) {
    // One table per (problem, parameter, strategy set).
    std::size_t j = i;
    while (j < rows.size() && rows[j].problem == rows[i].problem &&
           rows[j].parameter == rows[i].parameter &&
           rows[j].stats.size() == rows[i].stats.size()) {
      ++j;
    }
    const auto& head = rows[i];
    const bool tsc = head.problem == Problem::kTsc;
    if (i != 0) out << '\n';
    if (tsc) {
      out << "### TSC, k = " << plain(head.parameter)
          << ": maximum vertex interference (avg, std)\n\n";
    } else {
      out << "### CSC, t = " << plain(head.parameter)
          << " np: number of colors (avg, std)\n\n";
    }
    out << "Std is the sample std over all graph x repetition runs of a category unless "
           "configured per graph. Gap is computed before rounding. `!` marks rows where the "
           "random baseline exceeds the bound.\n\n";
    out << "| n | p | Bound |";
    for (const auto& s : head.stats) {
      const auto title = strategy_title(head.problem, s.strategy);
      out << ' ' << title << " avg | " << title << " std |";
    }
    out << " Gap (%) |\n|---|---|---|";
    for (std::size_t s = 0; s < head.stats.size(); ++s) out << "---|---|";
    out << "---|\n";
    for (std::size_t r = i; r < j; ++r) {
      const auto& row = rows[r];
      const Rational best = row.best_mean();
      out << "| " << row.category.n << " | " << plain(row.category.p) << " | "
          << decimal(to_double(row.bound), tsc ? 1 : 0) << (row.random_exceeds_bound ? " !" : "")
          << " |";
      for (const auto& s : row.stats) {
        const std::string avg = decimal(to_double(s.mean), 1);
        out << ' ' << (s.mean == best ? "**" + avg + "**" : avg) << " | " << decimal(s.std, 1)
            << " |";
      }
      out << ' ' << decimal(row.gap_pct, 1) << " |\n";
    }
    i = j;
  }
}

}  // namespace

void emit_report(std::span<const ExperimentRow> rows, ReportFormat format, std::ostream& out) {
  out.exceptions(std::ios::badbit | std::ios::failbit);
  if (format == ReportFormat::kCsv) {
    emit_csv(rows, out);
  } else {
    emit_markdown(rows, out);
  }
  out.flush();
}

std::string emit_report(std::span<const ExperimentRow> rows, ReportFormat format) {
  std::ostringstream out;
  emit_report(rows, format, out);
  return out.str();
}

std::string emit_series(std::span<const ExperimentRow> rows) {
  std::ostringstream out;
  out << "np,param,strategy,best_avg\n";
  for (const auto& row : rows) {
    if (row.stats.empty()) continue;
    const Rational best = row.best_mean();
    const auto it = std::find_if(row.stats.begin(), row.stats.end(),
                                 [&](const StrategyStats& s) { return s.mean == best; });
    out << plain(Rational(row.category.n) * row.category.p) << ',' << plain(row.parameter) << ','
        << to_string(it->strategy) << ',' << decimal(to_double(best), 4) << '\n';
  }
  return out.str();
}

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::istringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

long long parse_integer(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ParseError("config key '" + key + "': expected an integer, got '" + value + "'");
  }
}

double parse_real(const std::string& key, const std::string& value) {
  try {
    return to_double(parse_rational(value));
  } catch (const ParseError&) {
    throw ParseError("config key '" + key + "': expected a number, got '" + value + "'");
  }
}

}  // namespace

BenchConfig parse_bench_config(std::istream& in) {
  BenchConfig config;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    auto int_list = [&] {
      std::vector<int> out;
      for (const auto& item : split_list(value)) {
        out.push_back(static_cast<int>(parse_integer(key, item)));
      }
      return out;
    };
    auto rational_list = [&] {
      auto items = split_list(value);
      for (const auto& item : items) {
        try {
          (void)parse_rational(item);
        } catch (const ParseError&) {
          throw ParseError("config key '" + key + "': bad value '" + item + "'");
        }
      }
      return items;
    };
    if (key == "n") {
      config.n_values = int_list();
    } else if (key == "p") {
      config.p_values = rational_list();
    } else if (key == "k") {
      config.k_values = int_list();
    } else if (key == "t_fractions") {
      config.t_fractions = rational_list();
    } else if (key == "graphs_per_category") {
      config.graphs_per_category = static_cast<int>(parse_integer(key, value));
    } else if (key == "repetitions") {
      config.repetitions = static_cast<int>(parse_integer(key, value));
    } else if (key == "master_seed") {
      config.master_seed = static_cast<std::uint64_t>(parse_integer(key, value));
    } else if (key == "strategies") {
      config.options.strategies.clear();
      for (const auto& item : split_list(value)) {
        try {
          config.options.strategies.push_back(parse_strategy(item));
        } catch (const InvalidParameter& e) {
          throw ParseError(std::string("config key 'strategies': ") + e.what());
        }
      }
    } else if (key == "hms") {
      config.options.harmony.memory_size = static_cast<int>(parse_integer(key, value));
    } else if (key == "hmcr") {
      config.options.harmony.memory_consider_rate = parse_real(key, value);
    } else if (key == "par") {
      config.options.harmony.pitch_adjust_rate = parse_real(key, value);
    } else if (key == "evals") {
      config.options.harmony.max_evaluations = parse_integer(key, value);
    } else if (key == "csc_attempts_per_k") {
      config.options.csc_attempts_per_k = static_cast<int>(parse_integer(key, value));
    } else if (key == "std_mode") {
      if (value == "pooled") {
        config.options.std_mode = StdMode::kPooled;
      } else if (value == "per_graph") {
        config.options.std_mode = StdMode::kPerGraph;
      } else {
        throw ParseError("config key 'std_mode': expected pooled or per_graph");
      }
    } else if (key == "workers") {
      config.options.workers = static_cast<unsigned>(parse_integer(key, value));
    } else {
      throw ParseError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  config.options.harmony.validate();
  return config;
}

BenchConfig read_bench_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_bench_config(in);
}

std::vector<ExperimentRow> run_bench(const BenchConfig& config, Problem problem) {
  std::vector<ExperimentRow> rows;
  const auto parameters =
      problem == Problem::kTsc
          ? [&] {
              std::vector<std::string> ks;
              for (int k : config.k_values) ks.push_back(std::to_string(k));
              return ks;
            }()
          : config.t_fractions;
  for (const auto& parameter : parameters) {
    for (int n : config.n_values) {
      for (const auto& p : config.p_values) {
        GraphCategory category;
        category.n = n;
        category.p = parse_rational(p);
        category.graphs_per_category = config.graphs_per_category;
        category.repetitions = config.repetitions;
        category.master_seed = RngSeed{config.master_seed};
        if (problem == Problem::kTsc) {
          rows.push_back(run_tsc_experiment(category, std::stoi(parameter), config.options));
        } else {
          rows.push_back(run_csc_experiment(category, parse_rational(parameter), config.options));
        }
      }
    }
  }
  return rows;
}

}  // namespace spectrum_color
