#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <type_traits>

#include "spectrum_color/graph.hpp"
#include "spectrum_color/rational.hpp"
#include "spectrum_color/spectrum.hpp"

namespace spectrum_color {

/// Exact kernel representation of a spectrum for a given graph.
///
/// Solver kernels are templated on the scalar type. When every interference
/// sum the kernels can form on this graph fits in 63 bits after scaling by
/// the common denominator, kernels run on std::int64_t; otherwise on
/// Rational. Both routes are exact, so they make identical decisions.
class InterferenceModel {
 public:
  InterferenceModel(const Graph& graph, const Spectrum<Rational>& spectrum);

  const Spectrum<Rational>& exact() const { return exact_; }
  bool is_integer() const { return scaled_.has_value(); }
  int size() const { return exact_.size(); }

  /// Calls f(const Spectrum<Scalar>&, const Rational& unit) with the kernel
  /// spectrum; real interference = kernel value * unit.
  template <typename F>
  decltype(auto) visit(F&& f) const {
    if (scaled_) return f(scaled_->spectrum, scaled_->unit);
    return f(exact_, one_);
  }

 private:
  Spectrum<Rational> exact_;
  std::optional<IntegerSpectrum> scaled_;
  Rational one_{1};
};

/// Largest kernel value v with v * unit <= t. Interference values are
/// compared against thresholds through this, so `I <= t` stays exact on the
/// integer route.
template <typename Scalar>
Scalar kernel_threshold(const Rational& t, const Rational& unit) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return t / unit;
  } else {
    static_assert(std::is_integral_v<Scalar>);
    const Integer scaled = floor(t / unit);
    const Integer limit(std::numeric_limits<Scalar>::max() / 4);
    if (scaled > limit) return limit.convert_to<Scalar>();
    if (scaled < -limit) return Integer(-limit).convert_to<Scalar>();
    return scaled.convert_to<Scalar>();
  }
}

}  // namespace spectrum_color
