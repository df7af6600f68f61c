#include "spectrum_color/model.hpp"

namespace spectrum_color {

InterferenceModel::InterferenceModel(const Graph& graph, const Spectrum<Rational>& spectrum)
    : exact_(spectrum) {
  // Largest integer combination any kernel forms: the doubled edge sum, and
  // I * deg in threshold tests.
  const auto delta = static_cast<std::int64_t>(graph.max_degree());
  const auto budget = 2 * static_cast<std::int64_t>(graph.size()) + delta * delta + 1;
  scaled_ = scale_to_integers(spectrum, budget);
}

}  // namespace spectrum_color
