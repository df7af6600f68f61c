#include "spectrum_color/spectrum.hpp"

#include <cstdlib>

namespace spectrum_color {

Spectrum<Rational> make_exp_decay_spectrum(int size, const Rational& base) {
  if (size < 1) throw InvalidParameter("spectrum size must be positive");
  if (base <= 1) throw InvalidParameter("decay base must exceed 1, got " + to_string(base));
  Vector<Rational> powers(size);
  powers(0) = 1;
  for (int d = 1; d < size; ++d) powers(d) = powers(d - 1) / base;
  Matrix<Rational> w(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) w(i, j) = powers(std::abs(i - j));
  }
  return Spectrum<Rational>(std::move(w));
}

Spectrum<Rational> make_identity_spectrum(int size) {
  if (size < 1) throw InvalidParameter("spectrum size must be positive");
  return Spectrum<Rational>(Matrix<Rational>::Identity(size, size));
}

std::optional<IntegerSpectrum> scale_to_integers(const Spectrum<Rational>& spectrum,
                                                 std::int64_t multiplier_budget) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const auto& w = spectrum.matrix();
  Integer common(1);
  Rational largest(0);
  for (Eigen::Index j = 0; j < w.cols(); ++j) {
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
      common = boost::multiprecision::lcm(common, denominator(w(i, j)));
      if (w(i, j) > largest) largest = w(i, j);
    }
  }
  const Integer limit = Integer(1) << 61;
  const Integer largest_scaled = numerator(largest) * (common / denominator(largest));
  if (largest_scaled * std::max<std::int64_t>(multiplier_budget, 1) >= limit) return std::nullopt;

  Matrix<std::int64_t> scaled(w.rows(), w.cols());
  for (Eigen::Index j = 0; j < w.cols(); ++j) {
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
      const Integer v = numerator(w(i, j)) * (common / denominator(w(i, j)));
      scaled(i, j) = v.convert_to<std::int64_t>();
    }
  }
  return IntegerSpectrum{Spectrum<std::int64_t>(std::move(scaled)), Rational(1) / Rational(common)};
}

}  // namespace spectrum_color
