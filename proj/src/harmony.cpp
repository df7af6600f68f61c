#include "spectrum_color/harmony.hpp"

#include <string>

namespace spectrum_color {

void HarmonyParams::validate() const {
  auto rate = [](double r) { return r >= 0.0 && r <= 1.0; };
  if (!rate(memory_consider_rate) || !rate(pitch_adjust_rate)) {
    throw InvalidParameter("harmony rates must lie in [0, 1]");
  }
  if (memory_size < 2) throw InvalidParameter("harmony memory_size must be at least 2");
  if (max_evaluations < memory_size) {
    throw InvalidParameter("harmony max_evaluations (" + std::to_string(max_evaluations) +
                           ") below memory_size (" + std::to_string(memory_size) + ")");
  }
}

SolveReport harmony_tsc(const Graph& graph, const Spectrum<Rational>& spectrum, int k,
                        const HarmonyParams& params) {
  kernels::check_k(k, spectrum.size(), 2);
  params.validate();
  const InterferenceModel model(graph, spectrum);
  auto [coloring, evaluations] = model.visit([&](const auto& kernel_spectrum, const Rational&) {
    auto outcome = kernels::harmony_search(graph, kernel_spectrum, k, params);
    return std::pair{std::move(outcome.best), outcome.evaluations};
  });
  return make_report(graph, spectrum, std::move(coloring), "harmony", params.seed, true, k,
                     evaluations);
}

InnerSolver harmony_inner_solver(const HarmonyParams& params, const Rational& t) {
  params.validate();
  return {"harmony", true,
          [params, t](const Graph& graph, const InterferenceModel& model, int k, RngSeed seed) {
            HarmonyParams run = params;
            run.seed = seed;
            return model.visit([&](const auto& kernel_spectrum, const Rational& unit) {
              using Scalar = typename std::decay_t<decltype(kernel_spectrum)>::scalar_type;
              return kernels::harmony_search(graph, kernel_spectrum, k, run,
                                             std::optional<Scalar>(kernel_threshold<Scalar>(t, unit)))
                  .best;
            });
          }};
}

SolveReport harmony_csc(const Graph& graph, const Spectrum<Rational>& spectrum,
                        const Rational& t, const HarmonyParams& params, int attempts_per_k) {
  return iterative_csc(graph, spectrum, t, harmony_inner_solver(params, t), params.seed,
                       attempts_per_k);
}

}  // namespace spectrum_color
