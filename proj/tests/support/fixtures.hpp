#pragma once

// Small hand-built graphs shared by several test files.

#include <vector>

#include "patmine/graph.hpp"
#include "patmine/synth.hpp"

namespace patmine::testing {

inline LabeledGraph uniform_graph(std::size_t n, const std::vector<Edge>& edges,
                                  bool undirected = true) {
  return build_graph(n, edges, std::vector<Label>(n, Label("a")), undirected);
}

inline LabeledGraph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return uniform_graph(n, edges);
}

inline LabeledGraph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) edges.push_back({v, static_cast<VertexId>((v + 1) % n)});
  return uniform_graph(n, edges);
}

/// Hexagon 0..5 plus one chord.
inline LabeledGraph hexagon_with_chord(VertexId a, VertexId b) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v < 6; ++v) edges.push_back({v, static_cast<VertexId>((v + 1) % 6)});
  edges.push_back({a, b});
  return uniform_graph(6, edges);
}

/// Toy template vertices {0..5}: the hexagon block with chord 1-4.
inline const VertexSubset kHexagonBlock = {0, 1, 2, 3, 4, 5};
/// Toy template vertices {3, 6, 7}: the tail, a three-vertex path.
inline const VertexSubset kTailPath = {3, 6, 7};

}  // namespace patmine::testing
