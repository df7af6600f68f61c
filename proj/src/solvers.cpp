#include "spectrum_color/solvers.hpp"

#include <algorithm>
#include <string>

#include "spectrum_color/interference.hpp"
#include "spectrum_color/oracle.hpp"

namespace spectrum_color {

SolveReport balanced_coloring(const Graph& graph, const Spectrum<Rational>& spectrum, int k,
                              RngSeed seed) {
  kernels::check_k(k, spectrum.size(), 2);
  const InterferenceModel model(graph, spectrum);
  auto outcome = model.visit([&](const auto& kernel_spectrum, const Rational&) {
    return kernels::balanced_coloring(graph, kernel_spectrum, k, seed);
  });
  return make_report(graph, spectrum, std::move(outcome.coloring), "balanced", seed, true, k,
                     outcome.moves);
}

SolveReport tsc_dsatur(const Graph& graph, const Spectrum<Rational>& spectrum, int k,
                       RngSeed seed, TieBreak tie_break) {
  kernels::check_k(k, spectrum.size(), 2);
  const InterferenceModel model(graph, spectrum);
  auto coloring = model.visit([&](const auto& kernel_spectrum, const Rational&) {
    return kernels::tsc_dsatur(graph, kernel_spectrum, k, seed, tie_break);
  });
  return make_report(graph, spectrum, std::move(coloring), "dsatur", seed, true, k,
                     graph.order());
}

SolveReport csc_dsatur(const Graph& graph, const Spectrum<Rational>& spectrum, const Rational& t,
                       RngSeed seed, TieBreak tie_break) {
  if (spectrum.size() < graph.order()) {
    throw InvalidParameter("CSC needs a spectrum with at least n = " +
                           std::to_string(graph.order()) + " colors, got " +
                           std::to_string(spectrum.size()));
  }
  if (t < 0) throw InvalidParameter("threshold must be non-negative");
  const InterferenceModel model(graph, spectrum);
  auto outcome = model.visit([&](const auto& kernel_spectrum, const Rational& unit) {
    return kernels::csc_dsatur(graph, kernel_spectrum, t, unit, seed, tie_break);
  });
  return make_report(graph, spectrum, std::move(outcome.coloring), "dsatur", seed,
                     outcome.feasible, spectrum.size(), outcome.color_trials);
}

SolveReport random_coloring(const Graph& graph, const Spectrum<Rational>& spectrum, int k,
                            RngSeed seed) {
  auto coloring = kernels::random_coloring(graph, spectrum, k, seed);
  return make_report(graph, spectrum, std::move(coloring), "random", seed, true, k, 1);
}

InnerSolver random_inner_solver() {
  return {"random", true, [](const Graph& graph, const InterferenceModel& model, int k, RngSeed seed) {
            return model.visit([&](const auto& kernel_spectrum, const Rational&) {
              return kernels::random_coloring(graph, kernel_spectrum, k, seed);
            });
          }};
}

InnerSolver exhaustive_inner_solver(std::uint64_t cap) {
  return {"exhaustive", false,
          [cap](const Graph& graph, const InterferenceModel& model, int k, RngSeed) {
            return exact_tsc(graph, model.exact(), k, cap).witness;
          }};
}

SolveReport iterative_csc(const Graph& graph, const Spectrum<Rational>& spectrum,
                          const Rational& t, const InnerSolver& inner, RngSeed seed,
                          int attempts_per_k) {
  if (t < 0) throw InvalidParameter("threshold must be non-negative");
  if (attempts_per_k < 1) throw InvalidParameter("attempts_per_k must be positive");
  if (graph.order() == 0) {
    return make_report(graph, spectrum, Coloring(0), inner.name, seed, true, 0, 0);
  }
  const int k_max = std::min(graph.order(), spectrum.size());
  const int tries = inner.stochastic ? attempts_per_k : 1;
  std::int64_t attempts = 0;
  Coloring last;
  for (int k = 1; k <= k_max; ++k) {
    const InterferenceModel model(graph, spectrum.prefix(k));
    for (int a = 0; a < tries; ++a) {
      const RngSeed attempt_seed{derive_seed({seed.value, static_cast<std::uint64_t>(k),
                                              static_cast<std::uint64_t>(a)})};
      Coloring coloring = inner.solve(graph, model, k, attempt_seed);
      ++attempts;
      const bool ok = model.visit([&](const auto& kernel_spectrum, const Rational& unit) {
        using Scalar = typename std::decay_t<decltype(kernel_spectrum)>::scalar_type;
        return max_interference(graph, kernel_spectrum, coloring) <=
               kernel_threshold<Scalar>(t, unit);
      });
      if (ok) {
        return make_report(graph, spectrum, std::move(coloring), inner.name, seed, true, k,
                           attempts);
      }
      last = std::move(coloring);
    }
  }
  return make_report(graph, spectrum, std::move(last), inner.name, seed, false, k_max, attempts);
}

}  // namespace spectrum_color
