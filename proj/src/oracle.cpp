#include "spectrum_color/oracle.hpp"

#include <string>
#include <type_traits>
#include <vector>

#include "spectrum_color/errors.hpp"
#include "spectrum_color/model.hpp"

namespace spectrum_color {

namespace {

void check_cap(int base, int exponent, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (int i = 0; i < exponent; ++i) {
    if (total > cap / static_cast<std::uint64_t>(base)) {
      throw InstanceTooLarge(std::to_string(base) + "^" + std::to_string(exponent) +
                             " colorings exceed the enumeration cap of " + std::to_string(cap));
    }
    total *= static_cast<std::uint64_t>(base);
  }
}

// Depth-first over vertices 0..n-1 in mixed-radix order. partial[v] holds the
// interference v receives from already colored neighbors; weights are
// non-negative, so partial sums only grow and lower bound the final values.
template <typename Scalar>
class Enumerator {
 public:
  Enumerator(const Graph& graph, const Spectrum<Scalar>& spectrum)
      : graph_(graph), spectrum_(spectrum), colors_(graph.order(), kUncolored),
        partial_(graph.order(), Scalar(0)) {}

  /// Colors v with c, returning the largest partial interference touched.
  Scalar place(Vertex v, Color c) {
    colors_[v] = c;
    Scalar own(0);
    Scalar peak(0);
    for (Vertex u : graph_.neighbors(v)) {
      if (colors_[u] == kUncolored) continue;
      const Scalar& w = spectrum_.weight(colors_[u], c);
      own += w;
      partial_[u] += w;
      if (partial_[u] > peak) peak = partial_[u];
    }
    partial_[v] = own;
    return own > peak ? own : peak;
  }

  void unplace(Vertex v) {
    const Color c = colors_[v];
    for (Vertex u : graph_.neighbors(v)) {
      if (colors_[u] != kUncolored) partial_[u] -= spectrum_.weight(colors_[u], c);
    }
    partial_[v] = Scalar(0);
    colors_[v] = kUncolored;
  }

  const std::vector<Color>& colors() const { return colors_; }

 private:
  const Graph& graph_;
  const Spectrum<Scalar>& spectrum_;
  std::vector<Color> colors_;
  std::vector<Scalar> partial_;
};

template <typename Scalar>
struct TscSearch {
  Enumerator<Scalar> state;
  int k;
  int n;
  bool found = false;
  Scalar best{};
  std::vector<Color> witness{};
  std::uint64_t leaves = 0;

  void run(Vertex v, const Scalar& current) {
    if (v == n) {
      ++leaves;
      if (!found || current < best) {
        found = true;
        best = current;
        witness = state.colors();
      }
      return;
    }
    for (Color c = 1; c <= k; ++c) {
      const Scalar peak = state.place(v, c);
      const Scalar next = peak > current ? peak : current;
      if (!found || next < best) run(v + 1, next);
      state.unplace(v);
      if (found && best == Scalar(0)) return;
    }
  }
};

template <typename Scalar>
struct CscSearch {
  Enumerator<Scalar> state;
  int s;
  int n;
  Scalar limit;
  std::vector<int> usage;
  int distinct = 0;
  bool found = false;
  int best = 0;
  std::vector<Color> witness{};
  std::uint64_t leaves = 0;

  void run(Vertex v) {
    if (v == n) {
      ++leaves;
      if (!found || distinct < best) {
        found = true;
        best = distinct;
        witness = state.colors();
      }
      return;
    }
    for (Color c = 1; c <= s; ++c) {
      const int next_distinct = distinct + (usage[c] == 0 ? 1 : 0);
      if (found && next_distinct >= best) continue;
      if (state.place(v, c) <= limit) {
        ++usage[c];
        distinct = next_distinct;
        run(v + 1);
        --usage[c];
        distinct -= usage[c] == 0 ? 1 : 0;
      }
      state.unplace(v);
      if (found && best == 1) return;
    }
  }
};

}  // namespace

OracleResult exact_tsc(const Graph& graph, const Spectrum<Rational>& spectrum, int k,
                       std::uint64_t cap) {
  if (k < 1 || k > spectrum.size()) {
    throw InvalidParameter("k = " + std::to_string(k) + " outside 1.." +
                           std::to_string(spectrum.size()));
  }
  check_cap(k, graph.order(), cap);
  const InterferenceModel model(graph, spectrum.prefix(k));
  return model.visit([&](const auto& kernel_spectrum, const Rational& unit) {
    using Scalar = typename std::decay_t<decltype(kernel_spectrum)>::scalar_type;
    TscSearch<Scalar> search{
        .state = Enumerator<Scalar>(graph, kernel_spectrum), .k = k, .n = graph.order()};
    search.run(0, Scalar(0));
    OracleResult result;
    result.optimum = Rational(search.best) * unit;
    result.witness = Coloring(search.witness);
    result.enumerated = search.leaves;
    return result;
  });
}

OracleResult exact_csc(const Graph& graph, const Spectrum<Rational>& spectrum, const Rational& t,
                       std::uint64_t cap) {
  if (spectrum.size() < graph.order()) {
    throw InvalidParameter("CSC needs a spectrum with at least n = " +
                           std::to_string(graph.order()) + " colors");
  }
  if (t < 0) throw InvalidParameter("threshold must be non-negative");
  check_cap(spectrum.size(), graph.order(), cap);
  const InterferenceModel model(graph, spectrum);
  return model.visit([&](const auto& kernel_spectrum, const Rational& unit) {
    using Scalar = typename std::decay_t<decltype(kernel_spectrum)>::scalar_type;
    CscSearch<Scalar> search{.state = Enumerator<Scalar>(graph, kernel_spectrum),
                             .s = spectrum.size(),
                             .n = graph.order(),
                             .limit = kernel_threshold<Scalar>(t, unit),
                             .usage = std::vector<int>(spectrum.size() + 1, 0)};
    search.run(0);
    OracleResult result;
    result.feasible = search.found;
    result.optimum = Rational(search.best);
    result.witness = search.found ? Coloring(search.witness) : Coloring(graph.order());
    result.enumerated = search.leaves;
    return result;
  });
}

}  // namespace spectrum_color
