#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "patmine/label.hpp"

namespace patmine {

/// Dense per-graph vertex index in [0, vertex_count).
using VertexId = std::uint32_t;

/// Sorted, duplicate-free set of vertex ids.
using VertexSubset = std::vector<VertexId>;

struct Edge {
  VertexId from;
  VertexId to;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Vertex-labeled directed graph. Immutable once built; construct through
/// `build_graph`.
///
/// Edges are stored as a sorted set of ordered pairs. A graph loaded from an
/// undirected source has its edge set closed under reversal, so directed
/// edge checks coincide with undirected ones.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  bool undirected_input() const noexcept { return undirected_; }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Label> labels() const noexcept { return labels_; }
  Label label(VertexId v) const { return labels_[v]; }

  bool has_edge(VertexId from, VertexId to) const noexcept {
    return (adjacency_[from * row_words_ + (to >> 6)] >> (to & 63)) & 1U;
  }

  std::span<const VertexId> out_neighbors(VertexId v) const { return out_[v]; }
  std::span<const VertexId> in_neighbors(VertexId v) const { return in_[v]; }
  /// Neighbours in the symmetric closure, ascending, self excluded.
  std::span<const VertexId> neighbors(VertexId v) const { return sym_[v]; }

  std::size_t out_degree(VertexId v) const { return out_[v].size(); }
  std::size_t in_degree(VertexId v) const { return in_[v].size(); }

  /// Structural equality: same vertex count, labels and edge set.
  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  friend LabeledGraph build_graph(std::size_t, std::span<const Edge>, std::span<const Label>,
                                  bool);

  std::vector<Edge> edges_;
  std::vector<Label> labels_;
  bool undirected_ = false;
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
  std::vector<std::vector<VertexId>> sym_;
  std::vector<std::uint64_t> adjacency_;
  std::size_t row_words_ = 0;
};

/// Builds a graph from `n` vertices, an edge list and one label per vertex.
/// With `undirected`, the stored edge set is the symmetric closure of `edges`.
///
/// Throws Error(EdgeOutOfRange) or Error(LabelArityMismatch).
LabeledGraph build_graph(std::size_t n, std::span<const Edge> edges,
                         std::span<const Label> labels, bool undirected);

/// True iff `y` can be reached from `x` by a nonempty path in the symmetric
/// closure of the edge relation. For x == y this means x has an incident edge.
bool reachable(const LabeledGraph& g, VertexId x, VertexId y);

/// Graphs with at most one vertex are connected.
bool is_connected(const LabeledGraph& g);

struct InducedSubgraph {
  LabeledGraph graph;
  /// original_ids[i] is the source vertex of re-indexed vertex i (ascending).
  std::vector<VertexId> original_ids;
};

/// Restriction of `g` to `subset` (any order, duplicates ignored). Vertices are
/// re-indexed densely in ascending order of their original ids.
///
/// Throws Error(VertexNotInGraph).
InducedSubgraph induced_subgraph(const LabeledGraph& g, std::span<const VertexId> subset);

}  // namespace patmine
