#pragma once

// Shared helpers for the test binaries: small random instances and a plain
// enumeration that shares no code with the library's oracle.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spectrum_color/bench.hpp"
#include "spectrum_color/coloring.hpp"
#include "spectrum_color/graph.hpp"
#include "spectrum_color/interference.hpp"
#include "spectrum_color/rational.hpp"
#include "spectrum_color/spectrum.hpp"

namespace test_support {

using namespace spectrum_color;

inline Rational q(long long num, long long den = 1) { return Rational(num) / Rational(den); }

inline Matrix<Rational> rational_matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  Matrix<Rational> m(static_cast<Eigen::Index>(rows.size()),
                     static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

inline Graph edge_graph() { return Graph(2, {{0, 1}}); }
inline Graph triangle() { return named_graph("complete(3)"); }

/// Symmetric matrix of dyadic entries j / 2^e with j in 0..4, e in 0..3.
inline Spectrum<Rational> random_dyadic_spectrum(int size, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> numerator(0, 4);
  std::uniform_int_distribution<int> exponent(0, 3);
  Matrix<Rational> w(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = i; j < size; ++j) {
      w(i, j) = Rational(numerator(rng)) / Rational(1 << exponent(rng));
      w(j, i) = w(i, j);
    }
  }
  // Keep at least one nonzero entry so the gcd is defined.
  if ((w.array() == Rational(0)).all()) w(0, 0) = Rational(1);
  return Spectrum<Rational>(w);
}

/// Symmetric matrix of arbitrary small rationals a / b.
inline Spectrum<Rational> random_rational_spectrum(int size, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> numerator(0, 12);
  std::uniform_int_distribution<int> denominator(1, 9);
  Matrix<Rational> w(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = i; j < size; ++j) {
      w(i, j) = Rational(numerator(rng)) / Rational(denominator(rng));
      w(j, i) = w(i, j);
    }
  }
  if ((w.array() == Rational(0)).all()) w(0, 0) = Rational(1, 3);
  return Spectrum<Rational>(w);
}

/// Spectrum families used by the sweeps: decay base 2, decay base 3,
/// identity, random dyadic.
inline Spectrum<Rational> family_spectrum(int family, int size, std::mt19937_64& rng) {
  switch (family % 4) {
    case 0: return make_exp_decay_spectrum(size, Rational(2));
    case 1: return make_exp_decay_spectrum(size, Rational(3));
    case 2: return make_identity_spectrum(size);
    default: return random_dyadic_spectrum(size, rng);
  }
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  return gen_er_graph(n, p, RngSeed{rng()});
}

/// Calls f(coloring) for every complete coloring with colors 1..k.
template <typename F>
void for_each_coloring(int n, int k, F&& f) {
  std::vector<Color> colors(n, 1);
  while (true) {
    f(Coloring(colors));
    int v = 0;
    while (v < n && colors[v] == k) colors[v++] = 1;
    if (v == n) return;
    ++colors[v];
  }
}

/// Minimum over all k^n colorings of the max vertex interference.
inline Rational plain_tsc(const Graph& g, const Spectrum<Rational>& s, int k) {
  std::optional<Rational> best;
  for_each_coloring(g.order(), k, [&](const Coloring& c) {
    const Rational m = max_interference(g, s, c);
    if (!best || m < *best) best = m;
  });
  return *best;
}

/// Minimum distinct-color count over feasible s^n colorings; nullopt if none.
inline std::optional<int> plain_csc(const Graph& g, const Spectrum<Rational>& s, const Rational& t) {
  std::optional<int> best;
  for_each_coloring(g.order(), s.size(), [&](const Coloring& c) {
    if (max_interference(g, s, c) <= t) {
      const int d = c.distinct_colors();
      if (!best || d < *best) best = d;
    }
  });
  return best;
}

}  // namespace test_support
