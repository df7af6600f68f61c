#pragma once

#include <optional>
#include <span>
#include <vector>

#include "spectrum_color/graph.hpp"

namespace spectrum_color {

/// 1-based spectrum index; 0 marks an uncolored vertex.
using Color = int;
inline constexpr Color kUncolored = 0;

/// Total or partial vertex -> color map.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(int order) : colors_(static_cast<std::size_t>(order), kUncolored) {}
  /// Colors must be >= 0 (0 = uncolored).
  explicit Coloring(std::vector<Color> colors);

  int order() const { return static_cast<int>(colors_.size()); }
  bool is_colored(Vertex v) const { return colors_[v] != kUncolored; }
  std::optional<Color> at(Vertex v) const;
  /// Raw color, kUncolored when absent.
  Color color(Vertex v) const { return colors_[v]; }
  std::span<const Color> colors() const { return colors_; }

  void assign(Vertex v, Color c);
  void clear(Vertex v) { colors_[v] = kUncolored; }
  void clear_all();

  bool complete() const;
  int distinct_colors() const;
  Color max_color() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> colors_;
};

}  // namespace spectrum_color
