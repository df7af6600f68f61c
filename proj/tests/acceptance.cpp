// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when all pass).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spectrum_color/bench.hpp"
#include "spectrum_color/bounds.hpp"
#include "spectrum_color/harmony.hpp"
#include "spectrum_color/oracle.hpp"
#include "spectrum_color/solvers.hpp"
#include "support.hpp"

using namespace spectrum_color;
using test_support::q;
using Clock = std::chrono::steady_clock;

namespace {

// Tolerances.
constexpr double kCaseStudySeconds = 1.0;
constexpr int kSweepInstances = 600;
constexpr double kTsc4BudgetSeconds = 600.0;
constexpr double kDsaturRelTol = 0.15;
constexpr double kRandomRelTol = 0.10;
constexpr double kBoundRelTol = 0.05;
constexpr double kHarmonyRelTol = 0.15;
constexpr double kSaturatedColors = 3.0;
constexpr double kSaturatedColorsTol = 0.2;
constexpr double kSaturatedGap = 40.0;
constexpr double kSaturatedGapTol = 2.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x, int places = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, x);
  return buf;
}

bool within_rel(double actual, double expected, double tol) {
  return std::abs(actual - expected) <= tol * std::abs(expected);
}

// Reference per-category averages for TSC with k = 4:
// n, p, bound, random, dsatur, harmony-style metaheuristic.
struct Tsc4Reference {
  int n;
  const char* p;
  double bound, random, dsatur, harmony;
};
constexpr Tsc4Reference kTsc4[] = {
    {60, "0.1", 6.7, 6.7, 4.1, 4.5},     {60, "0.3", 14.9, 14.6, 10.9, 11.5},
    {60, "0.5", 21.0, 20.9, 17.8, 17.3}, {60, "0.7", 27.3, 26.9, 23.4, 23.1},
    {60, "0.9", 32.5, 32.1, 28.8, 28.1}, {70, "0.1", 7.4, 7.6, 4.8, 5.2},
    {70, "0.3", 17.1, 16.7, 13.1, 13.4}, {70, "0.5", 25.1, 24.6, 20.6, 20.7},
    {70, "0.7", 32.0, 31.7, 27.4, 27.1}, {70, "0.9", 37.7, 37.5, 33.5, 32.8},
    {80, "0.1", 8.3, 8.5, 5.7, 5.8},     {80, "0.3", 19.1, 18.8, 15.3, 15.1},
    {80, "0.5", 28.6, 28.3, 24.1, 23.4}, {80, "0.7", 35.8, 35.5, 30.6, 30.4},
    {80, "0.9", 43.4, 42.9, 38.0, 37.8},
};

// Rows of the k = 4 bench are reused by the trend check.
std::vector<ExperimentRow> g_tsc4_rows;

Outcome case_study() {
  Outcome out;
  const Graph paw = named_graph("paw");
  auto start = Clock::now();
  const auto tsc = exact_tsc(paw, make_exp_decay_spectrum(3, Rational(2)), 3);
  const double t1 = seconds_since(start);
  start = Clock::now();
  const auto csc = exact_csc(paw, make_exp_decay_spectrum(4, Rational(2)), q(1));
  const double t2 = seconds_since(start);
  out.pass = tsc.optimum == 1 && csc.feasible && csc.optimum == 1 * 3 &&
             t1 < kCaseStudySeconds && t2 < kCaseStudySeconds;
  out.detail = "T3 = " + to_string(tsc.optimum) + " in " + fmt(t1, 4) + " s, chi1 = " +
               to_string(csc.optimum) + " in " + fmt(t2, 4) + " s";
  return out;
}

Outcome bound_exactness() {
  Outcome out;
  const Graph paw = named_graph("paw");
  const auto w3 = make_exp_decay_spectrum(3, Rational(2));
  const auto w4 = make_exp_decay_spectrum(4, Rational(2));
  const Rational tsc = tsc_bound(paw, w3, 3);
  const auto csc = csc_bound_report(paw, w4, q(1));
  const Rational floor_t = csc_threshold_floor(paw, w4);
  out.pass = tsc == 2 && csc.value == 7 && !csc.precondition_holds && floor_t == q(51, 32);
  out.detail = "tsc = " + to_string(tsc) + ", csc = " + to_string(csc.value) +
               ", precondition " + (csc.precondition_holds ? "true" : "false") +
               ", threshold floor = " + to_string(floor_t);
  return out;
}

Outcome tightness() {
  Outcome out;
  const Graph c5 = named_graph("cycle(5)");
  const auto t2 = exact_tsc(c5, make_identity_spectrum(2), 2).optimum;
  const auto tb = tsc_bound(c5, make_identity_spectrum(2), 2);
  const auto chi = exact_csc(c5, make_identity_spectrum(5), q(0));
  const auto cb = csc_bound(c5, make_identity_spectrum(5), q(0));
  out.pass = t2 == 1 && tb == 1 && chi.feasible && chi.optimum == 3 && cb == 3;
  out.detail = "T2 = " + to_string(t2) + " vs bound " + to_string(tb) + ", chi0 = " +
               to_string(chi.optimum) + " vs bound " + cb.str();
  return out;
}

Outcome bound_sweep() {
  std::mt19937_64 rng(2024);
  const double ps[] = {0.2, 0.5, 0.8};
  int tsc_checked = 0, tsc_bad = 0, csc_checked = 0, csc_bad = 0;
  for (int trial = 0; trial < kSweepInstances; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = test_support::random_graph(n, ps[trial % 3], rng);
    const int family = static_cast<int>(rng() % 4);
    const int k = 2 + static_cast<int>(rng() % 3);

    const auto wk = test_support::family_spectrum(family, k, rng);
    ++tsc_checked;
    if (exact_tsc(g, wk, k).optimum > tsc_bound(g, wk, k)) ++tsc_bad;

    const auto wn = test_support::family_spectrum(family, std::max(n, 2), rng);
    const Rational gw = generalized_gcd(wn);
    const Rational lo = std::max(Rational(0), csc_threshold_floor(g, wn));
    // Half the thresholds are multiples of gcd(W), half arbitrary sixteenths.
    Rational t = trial % 2 == 0
                     ? gw * Rational(ceil(lo / gw) + static_cast<long long>(rng() % 4))
                     : lo + Rational(static_cast<long long>(rng() % 48)) / Rational(16);
    if (!csc_precondition(g, wn, t)) continue;
    ++csc_checked;
    const auto chi = exact_csc(g, wn, t);
    if (!chi.feasible || chi.optimum > Rational(csc_bound(g, wn, t))) ++csc_bad;
  }
  Outcome out;
  out.pass = tsc_bad == 0 && csc_bad == 0 && tsc_checked >= 500;
  out.detail = std::to_string(tsc_checked) + " TSC instances (" + std::to_string(tsc_bad) +
               " violations), " + std::to_string(csc_checked) + " CSC instances with the " +
               "precondition (" + std::to_string(csc_bad) + " violations)";
  return out;
}

Outcome balanced_invariants() {
  std::mt19937_64 rng(77);
  int audit = 0, degree_norm = 0, bound = 0;
  for (int trial = 0; trial < kSweepInstances; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 30);
    const Graph g = test_support::random_graph(n, 0.1 + 0.2 * (trial % 5), rng);
    const int k = 2 + static_cast<int>(rng() % 6);
    const auto w = test_support::family_spectrum(trial, k, rng);
    const auto r = balanced_coloring(g, w, k, RngSeed{rng()});
    const Rational norm = inf_norm(w);
    bool balanced = true, degree_norm_ok = true;
    for (Vertex v = 0; v < n; ++v) {
      const Rational own = vertex_interference(g, w, r.coloring, v);
      for (Color j = 1; j <= k; ++j) {
        if (potential_interference(g, w, r.coloring, v, j) < own) balanced = false;
      }
      if (Rational(k) * own > Rational(g.degree(v)) * norm) degree_norm_ok = false;
    }
    audit += balanced ? 0 : 1;
    degree_norm += degree_norm_ok ? 0 : 1;
    bound += r.max_interference <= tsc_bound(g, w, k) ? 0 : 1;
  }
  Outcome out;
  out.pass = audit == 0 && degree_norm == 0 && bound == 0;
  out.detail = std::to_string(kSweepInstances) + " instances; violations: audit " +
               std::to_string(audit) + ", degree-norm " + std::to_string(degree_norm) + ", bound " +
               std::to_string(bound);
  return out;
}

Outcome heuristic_soundness() {
  std::mt19937_64 rng(5150);
  int tsc_bad = 0, csc_bad = 0, threshold_bad = 0, csc_successes = 0;
  for (int trial = 0; trial < kSweepInstances; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = test_support::random_graph(n, 0.2 + 0.3 * (trial % 3), rng);
    const int k = 2 + static_cast<int>(rng() % 3);
    const auto w = test_support::family_spectrum(trial, std::max(n, k), rng);
    const auto opt = exact_tsc(g, w, k);
    if (tsc_dsatur(g, w, k, RngSeed{rng()}).max_interference < opt.optimum) ++tsc_bad;

    const Rational t = Rational(static_cast<long long>(rng() % 24)) / Rational(8);
    const auto chi = exact_csc(g, w, t);
    const auto heur = csc_dsatur(g, w, t, RngSeed{rng()});
    if (heur.feasible) {
      ++csc_successes;
      if (!chi.feasible || heur.distinct_colors < chi.optimum) ++csc_bad;
      if (max_interference(g, w, heur.coloring) > t) ++threshold_bad;
    }
  }
  Outcome out;
  out.pass = tsc_bad == 0 && csc_bad == 0 && threshold_bad == 0;
  out.detail = std::to_string(kSweepInstances) + " instances (" + std::to_string(csc_successes) +
               " CSC successes); violations: tsc " + std::to_string(tsc_bad) + ", csc " +
               std::to_string(csc_bad) + ", threshold " + std::to_string(threshold_bad);
  return out;
}

BenchConfig table_config() {
  BenchConfig config;
  config.n_values = {60, 70, 80};
  config.p_values = {"0.1", "0.3", "0.5", "0.7", "0.9"};
  config.graphs_per_category = 10;
  config.repetitions = 20;
  return config;
}

Outcome tsc4_reproduction() {
  BenchConfig config = table_config();
  config.k_values = {4};
  const auto start = Clock::now();
  g_tsc4_rows = run_bench(config, Problem::kTsc);
  const double elapsed = seconds_since(start);

  Outcome out;
  std::ostringstream misses;
  int checked = 0;
  double worst_d = 0, worst_r = 0, worst_b = 0, worst_h = 0;
  for (const auto& ref : kTsc4) {
    const auto it = std::find_if(g_tsc4_rows.begin(), g_tsc4_rows.end(), [&](const auto& row) {
      return row.category.n == ref.n && row.category.p == parse_rational(ref.p);
    });
    if (it == g_tsc4_rows.end()) {
      out.pass = false;
      misses << " missing row n=" << ref.n << " p=" << ref.p << ';';
      continue;
    }
    ++checked;
    const double bound = to_double(it->bound);
    const double random = to_double(it->find(Strategy::kRandom)->mean);
    const double dsatur = to_double(it->find(Strategy::kDsatur)->mean);
    const double harmony = to_double(it->find(Strategy::kHarmony)->mean);
    auto check = [&](const char* what, double actual, double expected, double tol, double& worst) {
      const double rel = std::abs(actual - expected) / expected;
      worst = std::max(worst, rel);
      if (!within_rel(actual, expected, tol)) {
        out.pass = false;
        misses << ' ' << what << " n=" << ref.n << " p=" << ref.p << ": " << fmt(actual, 1)
               << " vs " << fmt(expected, 1) << ';';
      }
    };
    check("dsatur", dsatur, ref.dsatur, kDsaturRelTol, worst_d);
    check("random", random, ref.random, kRandomRelTol, worst_r);
    check("bound", bound, ref.bound, kBoundRelTol, worst_b);
    check("harmony", harmony, ref.harmony, kHarmonyRelTol, worst_h);
  }
  if (elapsed >= kTsc4BudgetSeconds) out.pass = false;
  out.pass = out.pass && checked == 15;
  out.detail = std::to_string(checked) + " rows in " + fmt(elapsed, 1) +
               " s; worst relative deviation dsatur " + fmt(100 * worst_d, 1) + "%, random " +
               fmt(100 * worst_r, 1) + "%, bound " + fmt(100 * worst_b, 1) + "%, harmony " +
               fmt(100 * worst_h, 1) + "%" + misses.str();
  return out;
}

Outcome csc_saturated_rows() {
  BenchConfig config = table_config();
  config.p_values = {"0.7", "0.9"};
  config.t_fractions = {"0.75"};
  // Iterative harmony runs its full budget on every infeasible color count,
  // which is far outside a desk-scale budget; the check concerns CSC-DSATUR.
  config.options.strategies = {Strategy::kRandom, Strategy::kDsatur};
  const auto start = Clock::now();
  const auto rows = run_bench(config, Problem::kCsc);
  const double elapsed = seconds_since(start);
  Outcome out;
  std::ostringstream detail;
  for (const auto& row : rows) {
    const double colors = to_double(row.find(Strategy::kDsatur)->mean);
    const bool ok = std::abs(colors - kSaturatedColors) <= kSaturatedColorsTol &&
                    std::abs(row.gap_pct - kSaturatedGap) <= kSaturatedGapTol;
    out.pass = out.pass && ok;
    detail << " n=" << row.category.n << " p=" << to_double(row.category.p) << ": "
           << fmt(colors, 1) << " colors, gap " << fmt(row.gap_pct, 1) << "%"
           << (ok ? "" : " (out of range)") << ';';
  }
  out.pass = out.pass && rows.size() == 6;
  out.detail = std::to_string(rows.size()) + " rows in " + fmt(elapsed, 1) + " s;" + detail.str();
  return out;
}

Outcome trends() {
  std::map<int, std::vector<ExperimentRow>> by_k;
  by_k[4] = g_tsc4_rows;
  BenchConfig config = table_config();
  config.k_values = {6, 11};
  // The metaheuristic column only ever ties or trails DSATUR by a small
  // margin at these sizes; the trend is checked on the two fast strategies.
  config.options.strategies = {Strategy::kRandom, Strategy::kDsatur};
  for (auto& row : run_bench(config, Problem::kTsc)) {
    by_k[static_cast<int>(row.parameter.convert_to<double>())].push_back(std::move(row));
  }

  Outcome out;
  std::ostringstream detail;
  for (auto& [k, rows] : by_k) {
    if (rows.size() != 15) {
      out.pass = false;
      detail << " k=" << k << ": " << rows.size() << " rows;";
      continue;
    }
    std::vector<const ExperimentRow*> sorted;
    for (const auto& row : rows) sorted.push_back(&row);
    auto np = [](const ExperimentRow* r) { return Rational(r->category.n) * r->category.p; };
    std::sort(sorted.begin(), sorted.end(), [&](auto a, auto b) { return np(a) < np(b); });
    int np_breaks = 0;
    std::ostringstream where;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (np(sorted[i]) > np(sorted[i - 1]) &&
          !(sorted[i]->best_mean() > sorted[i - 1]->best_mean())) {
        ++np_breaks;
        where << " [np " << to_double(np(sorted[i - 1])) << ": "
              << fmt(to_double(sorted[i - 1]->best_mean())) << ", np "
              << to_double(np(sorted[i])) << ": " << fmt(to_double(sorted[i]->best_mean()))
              << "]";
      }
    }
    int gap_breaks = 0;
    for (int n : {60, 70, 80}) {
      std::vector<const ExperimentRow*> block;
      for (const auto& row : rows) {
        if (row.category.n == n) block.push_back(&row);
      }
      std::sort(block.begin(), block.end(),
                [](auto a, auto b) { return a->category.p < b->category.p; });
      for (std::size_t i = 1; i < block.size(); ++i) {
        if (!(block[i]->gap_pct < block[i - 1]->gap_pct)) ++gap_breaks;
      }
    }
    out.pass = out.pass && np_breaks == 0 && gap_breaks == 0;
    detail << " k=" << k << ": " << np_breaks << " np-order breaks" << where.str() << ", "
           << gap_breaks << " gap-order breaks;";
  }
  out.pass = out.pass && by_k.size() == 3;
  out.detail = detail.str();
  return out;
}

Outcome determinism() {
  BenchConfig config;
  config.n_values = {60};
  config.p_values = {"0.1", "0.5"};
  config.k_values = {4};
  config.t_fractions = {"0.5"};
  config.graphs_per_category = 3;
  config.repetitions = 4;
  config.options.harmony.max_evaluations = 5000;
  const std::string a = emit_report(run_bench(config, Problem::kTsc), ReportFormat::kCsv);
  config.options.workers = 3;
  const std::string b = emit_report(run_bench(config, Problem::kTsc), ReportFormat::kCsv);
  config.options.strategies = {Strategy::kRandom, Strategy::kDsatur};
  const std::string c1 = emit_report(run_bench(config, Problem::kCsc), ReportFormat::kCsv);
  config.options.workers = 1;
  const std::string c2 = emit_report(run_bench(config, Problem::kCsc), ReportFormat::kCsv);
  Outcome out;
  out.pass = a == b && c1 == c2;
  out.detail = "TSC report " + std::to_string(a.size()) + " bytes " +
               (a == b ? "identical" : "differs") + ", CSC report " +
               std::to_string(c1.size()) + " bytes " + (c1 == c2 ? "identical" : "differs");
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"case-study exactness", case_study},
      {"bound exactness", bound_exactness},
      {"tightness instances", tightness},
      {"bound validity sweep", bound_sweep},
      {"balanced-coloring invariants", balanced_invariants},
      {"heuristic soundness", heuristic_soundness},
      {"desk-scale TSC k=4 reproduction", tsc4_reproduction},
      {"desk-scale CSC t=0.75np saturated rows", csc_saturated_rows},
      {"qualitative trends", trends},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failures += outcome.pass ? 0 : 1;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " ("
              << criteria[i].first << "): " << outcome.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << std::endl;
  return failures;
}
