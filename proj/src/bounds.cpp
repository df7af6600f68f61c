#include "spectrum_color/bounds.hpp"

#include <string>

#include "spectrum_color/errors.hpp"

namespace spectrum_color {

namespace {

bool has_nonzero(const Spectrum<Rational>& spectrum) {
  return (spectrum.matrix().array() != Rational(0)).any();
}

Rational gcd_or_zero(const Spectrum<Rational>& spectrum) {
  return has_nonzero(spectrum) ? generalized_gcd(spectrum) : Rational(0);
}

}  // namespace

Rational generalized_gcd(const Spectrum<Rational>& spectrum) {
  const auto& w = spectrum.matrix();
  Rational g(0);
  for (Eigen::Index j = 0; j < w.cols(); ++j) {
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
      if (w(i, j) == 0) continue;
      g = g == 0 ? w(i, j) : rational_gcd(g, w(i, j));
    }
  }
  if (g == 0) throw UndefinedGcd("gcd of an all-zero interference matrix is undefined");
  return g;
}

Rational tsc_bound(const Graph& graph, const Spectrum<Rational>& spectrum, int k) {
  if (k < 2 || k > spectrum.size()) {
    throw InvalidParameter("k = " + std::to_string(k) + " outside 2.." +
                           std::to_string(spectrum.size()));
  }
  return Rational(graph.max_degree()) * inf_norm(spectrum) / Rational(k);
}

Rational csc_threshold_floor(const Graph& graph, const Spectrum<Rational>& spectrum) {
  const Rational s(spectrum.size());
  return (Rational(graph.max_degree()) * inf_norm(spectrum) -
          gcd_or_zero(spectrum) * (s - 1)) /
         s;
}

bool csc_precondition(const Graph& graph, const Spectrum<Rational>& spectrum, const Rational& t) {
  return t >= csc_threshold_floor(graph, spectrum);
}

Integer csc_bound(const Graph& graph, const Spectrum<Rational>& spectrum, const Rational& t) {
  if (spectrum.size() < 2) throw InvalidParameter("CSC bound needs a spectrum of size >= 2");
  if (t < 0) throw InvalidParameter("threshold must be non-negative");
  const Rational g = generalized_gcd(spectrum);
  const Rational t_multiple = g * Rational(floor(t / g));
  const Rational ratio =
      (Rational(graph.max_degree()) * inf_norm(spectrum) + g) / (t_multiple + g);
  return ceil(ratio);
}

BoundReport tsc_bound_report(const Graph& graph, const Spectrum<Rational>& spectrum, int k) {
  BoundReport report;
  report.value = tsc_bound(graph, spectrum, k);
  report.precondition_holds = true;
  report.norm = inf_norm(spectrum);
  report.gcd = gcd_or_zero(spectrum);
  report.max_degree = graph.max_degree();
  return report;
}

BoundReport csc_bound_report(const Graph& graph, const Spectrum<Rational>& spectrum,
                             const Rational& t) {
  BoundReport report;
  report.value = Rational(csc_bound(graph, spectrum, t));
  report.precondition_holds = csc_precondition(graph, spectrum, t);
  report.norm = inf_norm(spectrum);
  report.gcd = generalized_gcd(spectrum);
  report.max_degree = graph.max_degree();
  return report;
}

}  // namespace spectrum_color
