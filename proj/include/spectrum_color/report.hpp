#pragma once

#include <cstdint>
#include <string>

#include "spectrum_color/coloring.hpp"
#include "spectrum_color/graph.hpp"
#include "spectrum_color/rational.hpp"
#include "spectrum_color/spectrum.hpp"

namespace spectrum_color {

/// Seed for every stochastic choice a solver makes. Same seed and inputs give
/// bit-identical output.
struct RngSeed {
  std::uint64_t value = 0;
  friend bool operator==(RngSeed, RngSeed) = default;
};

struct SolveReport {
  Coloring coloring;
  Rational max_interference;
  /// Sum of the per-vertex interferences (twice the edge sum).
  Rational sum_interference;
  int distinct_colors = 0;
  /// Colors the solver was allowed to use: k for TSC, |S| for CSC-DSATUR,
  /// the first successful k for iterative CSC.
  int palette = 0;
  std::string strategy;
  RngSeed seed;
  bool feasible = true;
  /// Solver-specific work counter: recolor moves, objective evaluations,
  /// inner attempts.
  std::int64_t iterations = 0;

  friend bool operator==(const SolveReport&, const SolveReport&) = default;
};

/// Builds a report, recomputing the interference figures from the coloring in
/// exact arithmetic. Incomplete colorings report zero interference.
SolveReport make_report(const Graph& graph, const Spectrum<Rational>& spectrum,
                        Coloring coloring, std::string strategy, RngSeed seed, bool feasible,
                        int palette, std::int64_t iterations);

/// strategy,seed,feasible,max_interference,max_interference_decimal,
/// sum_interference,distinct_colors,palette,iterations,coloring
std::string report_csv_header();
std::string to_csv_record(const SolveReport& report);
std::string to_pretty_text(const SolveReport& report);

}  // namespace spectrum_color
