#pragma once

#include <cstdint>

#include "spectrum_color/coloring.hpp"
#include "spectrum_color/graph.hpp"
#include "spectrum_color/rational.hpp"
#include "spectrum_color/spectrum.hpp"

namespace spectrum_color {

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

struct OracleResult {
  /// False only for exact_csc when no coloring meets the threshold.
  bool feasible = true;
  /// T_k for exact_tsc; the integral chi_t for exact_csc.
  Rational optimum;
  Coloring witness;
  /// Complete colorings reached by the search (pruned subtrees not counted).
  std::uint64_t enumerated = 0;
};

/// Exact minimum over all k-colorings (colors 1..k) of the max vertex
/// interference. Throws InstanceTooLarge when k^n exceeds `cap`.
OracleResult exact_tsc(const Graph& graph, const Spectrum<Rational>& spectrum, int k,
                       std::uint64_t cap = kDefaultEnumerationCap);

/// Exact minimum number of distinct spectrum colors over colorings with every
/// vertex interference <= t. Requires |S| >= n; throws InstanceTooLarge when
/// |S|^n exceeds `cap`.
OracleResult exact_csc(const Graph& graph, const Spectrum<Rational>& spectrum, const Rational& t,
                       std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace spectrum_color
