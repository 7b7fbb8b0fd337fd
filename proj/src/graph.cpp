#include "patmine/graph.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "patmine/error.hpp"

namespace patmine {

LabeledGraph build_graph(std::size_t n, std::span<const Edge> edges,
                         std::span<const Label> labels, bool undirected) {
  if (labels.size() != n) {
    throw Error(ErrorCode::LabelArityMismatch,
                fmt::format("expected {} labels, got {}", n, labels.size()));
  }
  LabeledGraph g;
  g.labels_.assign(labels.begin(), labels.end());
  g.undirected_ = undirected;
  g.edges_.reserve(undirected ? 2 * edges.size() : edges.size());
  for (const Edge& e : edges) {
    if (e.from >= n || e.to >= n) {
      throw Error(ErrorCode::EdgeOutOfRange,
                  fmt::format("edge ({}, {}) out of range for {} vertices", e.from, e.to, n));
    }
    g.edges_.push_back(e);
    if (undirected) g.edges_.push_back({e.to, e.from});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.out_.assign(n, {});
  g.in_.assign(n, {});
  g.sym_.assign(n, {});
  g.row_words_ = (n + 63) / 64;
  g.adjacency_.assign(n * g.row_words_, 0);
  for (const Edge& e : g.edges_) {
    g.out_[e.from].push_back(e.to);
    g.in_[e.to].push_back(e.from);
    g.adjacency_[e.from * g.row_words_ + (e.to >> 6)] |= std::uint64_t{1} << (e.to & 63);
    if (e.from != e.to) {
      g.sym_[e.from].push_back(e.to);
      g.sym_[e.to].push_back(e.from);
    }
  }
  for (auto& nbrs : g.sym_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  // out_ is already ascending; in_ needs sorting.
  for (auto& nbrs : g.in_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

bool reachable(const LabeledGraph& g, VertexId x, VertexId y) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack;
  auto push_neighbours = [&](VertexId v) {
    for (VertexId w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  };
  // A self-loop is a path of length one from x to itself.
  if (x == y && g.has_edge(x, x)) return true;
  push_neighbours(x);
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (v == y) return true;
    push_neighbours(v);
  }
  return seen[y] != 0;
}

bool is_connected(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t visited = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  return visited == n;
}

InducedSubgraph induced_subgraph(const LabeledGraph& g, std::span<const VertexId> subset) {
  InducedSubgraph out;
  out.original_ids.assign(subset.begin(), subset.end());
  std::sort(out.original_ids.begin(), out.original_ids.end());
  out.original_ids.erase(std::unique(out.original_ids.begin(), out.original_ids.end()),
                         out.original_ids.end());

  constexpr VertexId kAbsent = ~VertexId{0};
  std::vector<VertexId> local(g.vertex_count(), kAbsent);
  std::vector<Label> labels;
  labels.reserve(out.original_ids.size());
  for (std::size_t i = 0; i < out.original_ids.size(); ++i) {
    const VertexId v = out.original_ids[i];
    if (v >= g.vertex_count()) {
      throw Error(ErrorCode::VertexNotInGraph,
                  fmt::format("vertex {} not in graph of {} vertices", v, g.vertex_count()));
    }
    local[v] = static_cast<VertexId>(i);
    labels.push_back(g.label(v));
  }
  std::vector<Edge> edges;
  for (VertexId v : out.original_ids) {
    for (VertexId w : g.out_neighbors(v)) {
      if (local[w] != kAbsent) edges.push_back({local[v], local[w]});
    }
  }
  out.graph = build_graph(labels.size(), edges, labels, g.undirected_input());
  return out;
}

}  // namespace patmine
