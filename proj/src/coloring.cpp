#include "spectrum_color/coloring.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "spectrum_color/errors.hpp"

namespace spectrum_color {

Coloring::Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {
  for (Color c : colors_) {
    if (c < 0) throw InvalidParameter("negative color index " + std::to_string(c));
  }
}

std::optional<Color> Coloring::at(Vertex v) const {
  if (colors_[v] == kUncolored) return std::nullopt;
  return colors_[v];
}

void Coloring::assign(Vertex v, Color c) {
  if (c < 1) throw InvalidParameter("colors are 1-based, got " + std::to_string(c));
  colors_[v] = c;
}

void Coloring::clear_all() { std::fill(colors_.begin(), colors_.end(), kUncolored); }

bool Coloring::complete() const {
  return std::none_of(colors_.begin(), colors_.end(),
                      [](Color c) { return c == kUncolored; });
}

int Coloring::distinct_colors() const {
  std::unordered_set<Color> seen;
  for (Color c : colors_) {
    if (c != kUncolored) seen.insert(c);
  }
  return static_cast<int>(seen.size());
}

Color Coloring::max_color() const {
  return colors_.empty() ? kUncolored : *std::max_element(colors_.begin(), colors_.end());
}

}  // namespace spectrum_color
