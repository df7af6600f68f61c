#pragma once

#include <string>

#include "spectrum_color/coloring.hpp"
#include "spectrum_color/graph.hpp"
#include "spectrum_color/spectrum.hpp"

namespace spectrum_color {

namespace detail {

template <typename Scalar>
void check_color(const Spectrum<Scalar>& spectrum, Color c) {
  if (c < 1 || c > spectrum.size()) {
    throw InvalidParameter("color " + std::to_string(c) + " outside spectrum 1.." +
                           std::to_string(spectrum.size()));
  }
}

inline void check_shapes(const Graph& graph, const Coloring& coloring) {
  if (coloring.order() != graph.order()) {
    throw InvalidParameter("coloring covers " + std::to_string(coloring.order()) +
                           " vertices, graph has " + std::to_string(graph.order()));
  }
}

template <typename Scalar>
void check_complete(const Graph& graph, const Spectrum<Scalar>& spectrum,
                    const Coloring& coloring) {
  check_shapes(graph, coloring);
  if (!coloring.complete()) throw InvalidState("coloring is not complete");
  for (Color c : coloring.colors()) check_color(spectrum, c);
}

}  // namespace detail

/// I_v^i: the interference at v if v had color i. Uncolored neighbors add 0.
template <typename Scalar>
Scalar potential_interference(const Graph& graph, const Spectrum<Scalar>& spectrum,
                              const Coloring& coloring, Vertex v, Color i) {
  detail::check_shapes(graph, coloring);
  detail::check_color(spectrum, i);
  Scalar total(0);
  for (Vertex u : graph.neighbors(v)) {
    if (!coloring.is_colored(u)) continue;
    detail::check_color(spectrum, coloring.color(u));
    total += spectrum.weight(coloring.color(u), i);
  }
  return total;
}

/// I_v for a colored vertex v.
template <typename Scalar>
Scalar vertex_interference(const Graph& graph, const Spectrum<Scalar>& spectrum,
                           const Coloring& coloring, Vertex v) {
  detail::check_shapes(graph, coloring);
  if (!coloring.is_colored(v)) {
    throw InvalidState("vertex " + std::to_string(v) + " is uncolored");
  }
  return potential_interference(graph, spectrum, coloring, v, coloring.color(v));
}

/// I_v for every vertex of a complete coloring, in one pass over the edges.
template <typename Scalar>
Vector<Scalar> vertex_interferences(const Graph& graph, const Spectrum<Scalar>& spectrum,
                                    const Coloring& coloring) {
  detail::check_complete(graph, spectrum, coloring);
  Vector<Scalar> result = Vector<Scalar>::Zero(graph.order());
  for (const auto& [u, v] : graph.edges()) {
    const Scalar& w = spectrum.weight(coloring.color(u), coloring.color(v));
    result(u) += w;
    result(v) += w;
  }
  return result;
}

template <typename Scalar>
Scalar max_interference(const Graph& graph, const Spectrum<Scalar>& spectrum,
                        const Coloring& coloring) {
  if (graph.order() == 0) {
    detail::check_shapes(graph, coloring);
    return Scalar(0);
  }
  return vertex_interferences(graph, spectrum, coloring).maxCoeff();
}

/// Sum over edges uv of W(c(u), c(v)); half of the vertex-interference sum.
template <typename Scalar>
Scalar sum_edge_interference(const Graph& graph, const Spectrum<Scalar>& spectrum,
                             const Coloring& coloring) {
  detail::check_complete(graph, spectrum, coloring);
  Scalar total(0);
  for (const auto& [u, v] : graph.edges()) {
    total += spectrum.weight(coloring.color(u), coloring.color(v));
  }
  return total;
}

}  // namespace spectrum_color
