#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "spectrum_color/coloring.hpp"
#include "spectrum_color/errors.hpp"
#include "spectrum_color/rational.hpp"

namespace spectrum_color {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Ordered color set 1..s with a symmetric, non-negative s x s interference
/// matrix. Scalar is Rational for exact user-facing work, or std::int64_t for
/// the integer-scaled kernel representation (see IntegerSpectrum).
template <typename Scalar>
class Spectrum {
 public:
  using scalar_type = Scalar;

  Spectrum() = default;
  explicit Spectrum(Matrix<Scalar> weights) : w_(std::move(weights)) { validate(); }

  int size() const { return static_cast<int>(w_.rows()); }

  /// W(a, b) for 1-based colors.
  const Scalar& weight(Color a, Color b) const { return w_(a - 1, b - 1); }
  const Matrix<Scalar>& matrix() const { return w_; }

  /// Spectrum restricted to colors 1..k.
  Spectrum prefix(int k) const {
    if (k < 1 || k > size()) {
      throw InvalidParameter("prefix size " + std::to_string(k) + " outside 1.." +
                             std::to_string(size()));
    }
    return Spectrum(Matrix<Scalar>(w_.topLeftCorner(k, k)));
  }

  friend bool operator==(const Spectrum& a, const Spectrum& b) {
    return a.w_.rows() == b.w_.rows() && a.w_.cols() == b.w_.cols() &&
           (a.w_.array() == b.w_.array()).all();
  }

 private:
  void validate() const {
    if (w_.rows() == 0 || w_.rows() != w_.cols()) {
      throw InvalidParameter("interference matrix must be square and non-empty");
    }
    if (!(w_.array() == w_.transpose().array()).all()) {
      throw InvalidParameter("interference matrix must be symmetric");
    }
    if (!(w_.array() >= Scalar(0)).all()) {
      throw InvalidParameter("interference matrix entries must be non-negative");
    }
  }

  Matrix<Scalar> w_;
};

/// W_ij = base^-|i-j|, exact.
Spectrum<Rational> make_exp_decay_spectrum(int size, const Rational& base);
Spectrum<Rational> make_identity_spectrum(int size);

/// Integer form of a rational spectrum: real weight = integer weight * unit,
/// with unit = 1 / lcm(denominators).
struct IntegerSpectrum {
  Spectrum<std::int64_t> spectrum;
  Rational unit;
};

/// Scales to integers when every entry times `multiplier_budget` stays below
/// 2^62; otherwise nullopt. The budget bounds the largest integer combination
/// (interference sums, threshold products) a kernel will form.
std::optional<IntegerSpectrum> scale_to_integers(const Spectrum<Rational>& spectrum,
                                                 std::int64_t multiplier_budget);

}  // namespace spectrum_color
