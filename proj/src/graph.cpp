#include "spectrum_color/graph.hpp"

#include <algorithm>
#include <string>

#include "spectrum_color/errors.hpp"

namespace spectrum_color {

Graph::Graph(int order, std::vector<Edge> edges) {
  if (order < 0) throw InvalidParameter("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(order));
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw InvalidParameter("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") outside 0.." + std::to_string(order - 1));
    }
    if (u == v) throw InvalidParameter("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (const auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw InvalidParameter("duplicate edge (" + std::to_string(dup->first) + ", " +
                           std::to_string(dup->second) + ")");
  }
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    max_degree_ = std::max(max_degree_, static_cast<int>(list.size()));
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

}  // namespace spectrum_color
