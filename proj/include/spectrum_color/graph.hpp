#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace spectrum_color {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on dense vertex indices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Edges may be given in either orientation; self-loops, duplicates and
  /// out-of-range endpoints raise InvalidParameter.
  Graph(int order, std::vector<Edge> edges);

  int order() const { return static_cast<int>(adjacency_.size()); }
  std::size_t size() const { return edges_.size(); }

  /// Edges normalized to u < v, sorted lexicographically.
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const { return max_degree_; }
  bool adjacent(Vertex u, Vertex v) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  int max_degree_ = 0;
};

}  // namespace spectrum_color
