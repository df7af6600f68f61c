#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "spectrum_color/coloring.hpp"
#include "spectrum_color/graph.hpp"
#include "spectrum_color/model.hpp"
#include "spectrum_color/rational.hpp"
#include "spectrum_color/report.hpp"
#include "spectrum_color/rng.hpp"
#include "spectrum_color/spectrum.hpp"

namespace spectrum_color {

/// How DSATUR resolves a tie on (saturation, degree).
enum class TieBreak {
  kRandom,       ///< seeded uniform choice among the tied vertices
  kLowestIndex,  ///< reproducible traces
};

namespace kernels {

inline void check_k(int k, int spectrum_size, int lowest) {
  if (k < lowest || k > spectrum_size) {
    throw InvalidParameter("k = " + std::to_string(k) + " outside " + std::to_string(lowest) +
                           ".." + std::to_string(spectrum_size));
  }
}

/// Uncolored vertex with the most colored neighbors, then the highest degree.
/// Remaining ties go to `tie_break`.
inline Vertex select_saturated(const Graph& graph, const Coloring& coloring,
                               const std::vector<int>& saturation, TieBreak tie_break,
                               Engine& rng, std::vector<Vertex>& tied) {
  tied.clear();
  int best_sat = -1;
  int best_deg = -1;
  for (Vertex v = 0; v < graph.order(); ++v) {
    if (coloring.is_colored(v)) continue;
    const int sat = saturation[v];
    const int deg = graph.degree(v);
    if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
      best_sat = sat;
      best_deg = deg;
      tied.clear();
    }
    if (sat == best_sat && deg == best_deg) tied.push_back(v);
  }
  if (tied.size() == 1 || tie_break == TieBreak::kLowestIndex) return tied.front();
  return tied[uniform_int<std::size_t>(rng, 0, tied.size() - 1)];
}

/// Per-vertex histogram of neighbor colors (k x n). Column v times W gives
/// every potential interference of v at once.
class NeighborColorCounts {
 public:
  NeighborColorCounts(int k, int order) : counts_(Matrix<std::int64_t>::Zero(k, order)) {}

  void add(const Graph& graph, Vertex v, Color c) {
    for (Vertex u : graph.neighbors(v)) ++counts_(c - 1, u);
  }
  void remove(const Graph& graph, Vertex v, Color c) {
    for (Vertex u : graph.neighbors(v)) --counts_(c - 1, u);
  }

  /// (I_v^1, ..., I_v^k) for the k x k prefix `w`.
  template <typename Scalar>
  Vector<Scalar> potentials(const Matrix<Scalar>& w, Vertex v) const {
    return w * counts_.col(v).template cast<Scalar>();
  }

 private:
  Matrix<std::int64_t> counts_;
};

template <typename Scalar>
Eigen::Index first_argmin(const Vector<Scalar>& values) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < values.size(); ++i) {
    if (values(i) < values(best)) best = i;
  }
  return best;
}

template <typename Scalar>
Coloring random_coloring(const Graph& graph, const Spectrum<Scalar>& spectrum, int k,
                         RngSeed seed) {
  check_k(k, spectrum.size(), 1);
  Engine rng(seed.value);
  Coloring coloring(graph.order());
  for (Vertex v = 0; v < graph.order(); ++v) coloring.assign(v, uniform_int(rng, 1, k));
  return coloring;
}

struct BalancedOutcome {
  Coloring coloring;
  std::int64_t moves = 0;
};

/// Random start, then first-improving single-vertex recolors until no vertex
/// can lower its own interference. Every move strictly lowers the edge sum.
template <typename Scalar>
BalancedOutcome balanced_coloring(const Graph& graph, const Spectrum<Scalar>& spectrum, int k,
                                  RngSeed seed) {
  check_k(k, spectrum.size(), 1);
  const Matrix<Scalar> w = spectrum.matrix().topLeftCorner(k, k);
  BalancedOutcome out{kernels::random_coloring(graph, spectrum, k, seed), 0};
  NeighborColorCounts counts(k, graph.order());
  for (Vertex v = 0; v < graph.order(); ++v) counts.add(graph, v, out.coloring.color(v));

  bool moved = true;
  while (moved) {
    moved = false;
    for (Vertex v = 0; v < graph.order() && !moved; ++v) {
      const Vector<Scalar> pot = counts.potentials(w, v);
      const Color current = out.coloring.color(v);
      for (Color j = 1; j <= k; ++j) {
        if (pot(j - 1) < pot(current - 1)) {
          counts.remove(graph, v, current);
          counts.add(graph, v, j);
          out.coloring.assign(v, j);
          ++out.moves;
          moved = true;
          break;
        }
      }
    }
  }
  return out;
}

/// Saturation-ordered greedy: each vertex takes the color in 1..k that
/// minimizes its interference with the already colored neighbors.
template <typename Scalar>
Coloring tsc_dsatur(const Graph& graph, const Spectrum<Scalar>& spectrum, int k, RngSeed seed,
                    TieBreak tie_break) {
  check_k(k, spectrum.size(), 1);
  const Matrix<Scalar> w = spectrum.matrix().topLeftCorner(k, k);
  Engine rng(seed.value);
  Coloring coloring(graph.order());
  std::vector<int> saturation(graph.order(), 0);
  NeighborColorCounts counts(k, graph.order());
  std::vector<Vertex> tied;
  for (int step = 0; step < graph.order(); ++step) {
    const Vertex v = select_saturated(graph, coloring, saturation, tie_break, rng, tied);
    const Color c = static_cast<Color>(first_argmin(counts.potentials(w, v))) + 1;
    coloring.assign(v, c);
    counts.add(graph, v, c);
    for (Vertex u : graph.neighbors(v)) ++saturation[u];
  }
  return coloring;
}

struct CscDsaturOutcome {
  Coloring coloring;  ///< all uncolored when infeasible
  bool feasible = true;
  std::int64_t color_trials = 0;
};

/// Saturation-ordered greedy for a threshold t. A vertex with c of its d
/// neighbors colored may carry at most (c/d) t; a color is accepted only if
/// that holds for the vertex and for each colored neighbor afterwards.
/// Colors are scanned in spectrum order and the first acceptable one wins.
template <typename Scalar>
CscDsaturOutcome csc_dsatur(const Graph& graph, const Spectrum<Scalar>& spectrum,
                            const Rational& t, const Rational& unit, RngSeed seed,
                            TieBreak tie_break) {
  if (t < 0) throw InvalidParameter("threshold must be non-negative");
  const int n = graph.order();
  const int s = spectrum.size();

  // allowance[c] = largest kernel value x with x * unit <= c * t, so that
  // I * d <= allowance[c]  <=>  I <= (c / d) * t.
  std::vector<Scalar> allowance;
  allowance.reserve(graph.max_degree() + 1);
  for (int c = 0; c <= graph.max_degree(); ++c) {
    allowance.push_back(kernel_threshold<Scalar>(Rational(c) * t, unit));
  }
  auto admits = [&](const Scalar& interference, int colored, int degree) {
    if (degree == 0) return true;
    return interference * Scalar(degree) <= allowance[colored];
  };

  Engine rng(seed.value);
  CscDsaturOutcome out{Coloring(n), true, 0};
  std::vector<int> saturation(n, 0);
  std::vector<Scalar> interference(n, Scalar(0));
  std::vector<Vertex> tied;
  for (int step = 0; step < n; ++step) {
    const Vertex v = select_saturated(graph, out.coloring, saturation, tie_break, rng, tied);
    Color chosen = kUncolored;
    Scalar chosen_interference(0);
    for (Color i = 1; i <= s && chosen == kUncolored; ++i) {
      ++out.color_trials;
      Scalar own(0);
      for (Vertex u : graph.neighbors(v)) {
        if (out.coloring.is_colored(u)) own += spectrum.weight(out.coloring.color(u), i);
      }
      if (!admits(own, saturation[v], graph.degree(v))) continue;
      bool neighbors_ok = true;
      for (Vertex u : graph.neighbors(v)) {
        if (!out.coloring.is_colored(u)) continue;
        const Scalar after = interference[u] + spectrum.weight(out.coloring.color(u), i);
        if (!admits(after, saturation[u] + 1, graph.degree(u))) {
          neighbors_ok = false;
          break;
        }
      }
      if (neighbors_ok) {
        chosen = i;
        chosen_interference = own;
      }
    }
    if (chosen == kUncolored) {
      out.coloring.clear_all();
      out.feasible = false;
      return out;
    }
    out.coloring.assign(v, chosen);
    interference[v] = chosen_interference;
    for (Vertex u : graph.neighbors(v)) {
      ++saturation[u];
      if (out.coloring.is_colored(u)) {
        interference[u] += spectrum.weight(out.coloring.color(u), chosen);
      }
    }
  }
  return out;
}

}  // namespace kernels

/// W-balanced k-coloring by local search from a random start.
SolveReport balanced_coloring(const Graph& graph, const Spectrum<Rational>& spectrum, int k,
                              RngSeed seed);

/// TSC-DSATUR with colors 1..k.
SolveReport tsc_dsatur(const Graph& graph, const Spectrum<Rational>& spectrum, int k,
                       RngSeed seed, TieBreak tie_break = TieBreak::kRandom);

/// CSC-DSATUR. Requires |S| >= n. Infeasibility is reported, not thrown;
/// distinct_colors is the achieved color count.
SolveReport csc_dsatur(const Graph& graph, const Spectrum<Rational>& spectrum, const Rational& t,
                       RngSeed seed = {}, TieBreak tie_break = TieBreak::kRandom);

/// Each vertex uniform over 1..k.
SolveReport random_coloring(const Graph& graph, const Spectrum<Rational>& spectrum, int k,
                            RngSeed seed);

/// A k-parameterized colorer driven by iterative_csc. `solve` receives the
/// model of the k-color spectrum prefix.
struct InnerSolver {
  std::string name;
  bool stochastic = true;
  std::function<Coloring(const Graph&, const InterferenceModel&, int k, RngSeed)> solve;
};

InnerSolver random_inner_solver();
/// Exact TSC optimum per k via the brute-force oracle.
InnerSolver exhaustive_inner_solver(std::uint64_t cap = 100'000'000);

inline constexpr int kDefaultAttemptsPerK = 20;

/// Tries k = 1, 2, ... up to min(n, |S|) colors, re-running stochastic inner
/// solvers up to `attempts_per_k` times, and returns the first coloring whose
/// max interference is <= t.
SolveReport iterative_csc(const Graph& graph, const Spectrum<Rational>& spectrum,
                          const Rational& t, const InnerSolver& inner, RngSeed seed,
                          int attempts_per_k = kDefaultAttemptsPerK);

}  // namespace spectrum_color
