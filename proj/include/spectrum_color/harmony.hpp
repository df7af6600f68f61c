#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "spectrum_color/graph.hpp"
#include "spectrum_color/model.hpp"
#include "spectrum_color/rational.hpp"
#include "spectrum_color/report.hpp"
#include "spectrum_color/rng.hpp"
#include "spectrum_color/solvers.hpp"
#include "spectrum_color/spectrum.hpp"

namespace spectrum_color {

struct HarmonyParams {
  int memory_size = 10;
  double memory_consider_rate = 0.9;
  double pitch_adjust_rate = 0.3;
  std::int64_t max_evaluations = 50'000;
  RngSeed seed;

  /// Throws InvalidParameter unless rates are in [0, 1], memory_size >= 2
  /// and max_evaluations >= memory_size.
  void validate() const;
};

namespace kernels {

template <typename Scalar>
struct HarmonyOutcome {
  Coloring best;
  Scalar best_objective{};
  std::int64_t evaluations = 0;
  /// Set when a candidate with max interference <= target was met.
  bool reached_target = false;
  std::vector<Scalar> initial_objectives;
  /// Best objective after each evaluation; filled only on request.
  std::vector<Scalar> best_history;
};

/// Sum of vertex interferences of a complete 0-based k-coloring. Dense
/// graphs are scored by popcounting neighbor masks against color-class masks,
/// sparse ones by walking the edge list.
template <typename Scalar>
class ColoringEvaluator {
 public:
  ColoringEvaluator(const Graph& graph, const Spectrum<Scalar>& spectrum, int k)
      : n_(graph.order()),
        k_(k),
        words_((graph.order() + 63) / 64),
        edges_(graph.edges()),
        w_(static_cast<std::size_t>(k) * k) {
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) w_[a * k + b] = spectrum.matrix()(a, b);
    }
    use_masks_ = static_cast<std::size_t>(n_) * k_ * words_ < graph.size();
    if (use_masks_) {
      neighbors_.assign(static_cast<std::size_t>(n_) * words_, 0);
      classes_.assign(static_cast<std::size_t>(k_) * words_, 0);
      for (const auto& [u, v] : edges_) {
        neighbors_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        neighbors_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
      }
    }
  }

  /// Fills `per_vertex` (size n) when given.
  Scalar operator()(const std::vector<Color>& c, std::vector<Scalar>* per_vertex = nullptr) {
    Scalar sum(0);
    if (!use_masks_) {
      if (per_vertex) std::fill(per_vertex->begin(), per_vertex->end(), Scalar(0));
      for (const auto& [u, v] : edges_) {
        const Scalar& x = w_[c[u] * k_ + c[v]];
        sum += x;
        if (per_vertex) {
          (*per_vertex)[u] += x;
          (*per_vertex)[v] += x;
        }
      }
      return Scalar(sum + sum);
    }
    std::fill(classes_.begin(), classes_.end(), 0);
    for (Vertex v = 0; v < n_; ++v) classes_[c[v] * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    for (Vertex u = 0; u < n_; ++u) {
      const Scalar* row = &w_[c[u] * k_];
      const std::uint64_t* near = &neighbors_[u * words_];
      Scalar own(0);
      for (int b = 0; b < k_; ++b) {
        if (row[b] == Scalar(0)) continue;
        const std::uint64_t* cls = &classes_[b * words_];
        int count = 0;
        for (int i = 0; i < words_; ++i) count += std::popcount(near[i] & cls[i]);
        if (count != 0) own += row[b] * Scalar(count);
      }
      if (per_vertex) (*per_vertex)[u] = own;
      sum += own;
    }
    return sum;
  }

 private:
  int n_;
  int k_;
  int words_;
  std::span<const Edge> edges_;
  std::vector<Scalar> w_;
  bool use_masks_ = false;
  std::vector<std::uint64_t> neighbors_;
  std::vector<std::uint64_t> classes_;
};

/// Harmony search over k-colorings minimizing the sum of vertex
/// interferences. Improvisation per vertex: with probability hmcr copy the
/// color of a random memory member, then with probability par step it by +-1
/// (clamped to 1..k); otherwise draw uniformly. A candidate replaces the worst
/// memory member when strictly better. With `target` set, stops at the first
/// candidate whose max vertex interference is <= target (kernel units).
template <typename Scalar>
HarmonyOutcome<Scalar> harmony_search(const Graph& graph, const Spectrum<Scalar>& spectrum,
                                      int k, const HarmonyParams& params,
                                      std::optional<Scalar> target = std::nullopt,
                                      bool record_history = false) {
  params.validate();
  check_k(k, spectrum.size(), 1);
  const int n = graph.order();
  // Candidates hold 0-based colors internally; shifted on output.
  ColoringEvaluator<Scalar> score(graph, spectrum, k);
  Engine rng(params.seed.value);
  const std::uint64_t consider_below = threshold32(params.memory_consider_rate);
  const std::uint64_t adjust_below = threshold32(params.pitch_adjust_rate);
  const auto colors = static_cast<std::uint32_t>(k);
  const auto members = static_cast<std::uint32_t>(params.memory_size);

  std::vector<Scalar> per_vertex(n);
  HarmonyOutcome<Scalar> out;
  // With a target also checks feasibility.
  auto evaluate = [&](const std::vector<Color>& c) {
    ++out.evaluations;
    if (!target) return score(c);
    const Scalar sum = score(c, &per_vertex);
    if (!out.reached_target &&
        std::all_of(per_vertex.begin(), per_vertex.end(),
                    [&](const Scalar& x) { return x <= *target; })) {
      out.reached_target = true;
    }
    return sum;
  };

  const int hms = params.memory_size;
  std::vector<std::vector<Color>> memory(hms, std::vector<Color>(n));
  std::vector<Scalar> objective(hms);
  auto best_index = [&] {
    return static_cast<int>(std::min_element(objective.begin(), objective.end()) -
                            objective.begin());
  };
  auto finish = [&](const std::vector<Color>& winner, const Scalar& value) {
    std::vector<Color> shifted(winner);
    for (auto& c : shifted) ++c;
    out.best = Coloring(std::move(shifted));
    out.best_objective = value;
    return out;
  };

  for (int m = 0; m < hms; ++m) {
    for (Vertex v = 0; v < n; ++v) {
      memory[m][v] = static_cast<Color>(bounded32(static_cast<std::uint32_t>(rng()), colors, rng));
    }
    objective[m] = evaluate(memory[m]);
    out.initial_objectives.push_back(objective[m]);
    if (record_history) {
      out.best_history.push_back(*std::min_element(objective.begin(), objective.begin() + m + 1));
    }
    if (out.reached_target) return finish(memory[m], objective[m]);
  }

  std::vector<Color> candidate(n);
  while (out.evaluations < params.max_evaluations) {
    for (Vertex v = 0; v < n; ++v) {
      // High half decides memory vs. random, low half picks the member or color.
      const std::uint64_t bits = rng();
      const auto low = static_cast<std::uint32_t>(bits);
      Color c;
      if ((bits >> 32) < consider_below) {
        c = memory[bounded32(low, members, rng)][v];
        const std::uint64_t pitch = rng();
        if ((pitch >> 32) < adjust_below) {
          c += (pitch & 1) ? 1 : -1;
          c = std::clamp(c, 0, k - 1);
        }
      } else {
        c = static_cast<Color>(bounded32(low, colors, rng));
      }
      candidate[v] = c;
    }
    const Scalar value = evaluate(candidate);
    if (out.reached_target) return finish(candidate, value);
    const auto worst = std::max_element(objective.begin(), objective.end()) - objective.begin();
    if (value < objective[worst]) {
      memory[worst] = candidate;
      objective[worst] = value;
    }
    if (record_history) out.best_history.push_back(objective[best_index()]);
  }
  const int best = best_index();
  return finish(memory[best], objective[best]);
}

}  // namespace kernels

/// Best k-coloring found by harmony search; sum_interference is the
/// objective, max_interference is what the TSC tables report.
SolveReport harmony_tsc(const Graph& graph, const Spectrum<Rational>& spectrum, int k,
                        const HarmonyParams& params = {});

/// iterative_csc with harmony search as the inner solver. Each inner run
/// stops early once it meets the threshold.
SolveReport harmony_csc(const Graph& graph, const Spectrum<Rational>& spectrum,
                        const Rational& t, const HarmonyParams& params = {},
                        int attempts_per_k = kDefaultAttemptsPerK);

InnerSolver harmony_inner_solver(const HarmonyParams& params, const Rational& t);

}  // namespace spectrum_color
