#pragma once

#include "spectrum_color/graph.hpp"
#include "spectrum_color/rational.hpp"
#include "spectrum_color/spectrum.hpp"

namespace spectrum_color {

/// ||W||_inf: the largest row sum.
template <typename Scalar>
Scalar inf_norm(const Spectrum<Scalar>& spectrum) {
  return spectrum.matrix().rowwise().sum().maxCoeff();
}

/// Largest rational g such that every nonzero entry is an integer multiple of
/// g. Throws UndefinedGcd for an all-zero matrix.
Rational generalized_gcd(const Spectrum<Rational>& spectrum);

struct BoundReport {
  /// Threshold (TSC) or color count (CSC, always integral).
  Rational value;
  bool precondition_holds = false;
  Rational norm;
  /// Zero when the matrix has no nonzero entry.
  Rational gcd;
  int max_degree = 0;
};

/// max_degree * ||W||_inf / k, for 2 <= k <= |S|.
Rational tsc_bound(const Graph& graph, const Spectrum<Rational>& spectrum, int k);

/// (max_degree * ||W||_inf - gcd * (|S| - 1)) / |S|: the smallest threshold
/// for which the CSC bound certifies a coloring inside the spectrum.
Rational csc_threshold_floor(const Graph& graph, const Spectrum<Rational>& spectrum);

bool csc_precondition(const Graph& graph, const Spectrum<Rational>& spectrum, const Rational& t);

/// ceil((max_degree * ||W||_inf + g) / (t' + g)) with t' = g * floor(t / g).
/// Returned whether or not the precondition holds.
Integer csc_bound(const Graph& graph, const Spectrum<Rational>& spectrum, const Rational& t);

BoundReport tsc_bound_report(const Graph& graph, const Spectrum<Rational>& spectrum, int k);
BoundReport csc_bound_report(const Graph& graph, const Spectrum<Rational>& spectrum,
                             const Rational& t);

}  // namespace spectrum_color
