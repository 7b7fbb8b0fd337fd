#include "patmine/synth.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "patmine/error.hpp"
#include "patmine/rng.hpp"

namespace patmine {

void SynthParams::validate() const {
  if (min_vertices < 2) {
    throw Error(ErrorCode::InvalidConfig,
                fmt::format("vertex range lower bound {} is below 2", min_vertices));
  }
  if (max_vertices < min_vertices) {
    throw Error(ErrorCode::InvalidConfig,
                fmt::format("empty vertex range [{}, {}]", min_vertices, max_vertices));
  }
  if (n_labels < 1) throw Error(ErrorCode::InvalidConfig, "need at least one label");
  if (!(positive_fraction >= 0.0 && positive_fraction <= 1.0)) {
    throw Error(ErrorCode::InvalidConfig, "positive fraction must lie in [0, 1]");
  }
  if (target_avg_edges + 1 < min_vertices) {
    throw Error(ErrorCode::InfeasibleEdgeTarget,
                fmt::format("{} edges cannot connect any graph of at least {} vertices",
                            target_avg_edges, min_vertices));
  }
  if (target_avg_edges > max_vertices * (max_vertices - 1) / 2) {
    throw Error(ErrorCode::InfeasibleEdgeTarget,
                fmt::format("{} edges exceed a complete graph on {} vertices", target_avg_edges,
                            max_vertices));
  }
}

std::size_t default_positive_threshold(std::size_t positives) { return (positives + 19) / 20; }

namespace {

std::vector<Edge> random_tree(SplitMix64& rng, std::size_t n) {
  std::vector<Edge> edges;
  if (n < 2) return edges;
  if (n == 2) return {{0, 1}};
  std::vector<VertexId> code(n - 2);
  for (auto& c : code) c = static_cast<VertexId>(rng.below(n));
  std::vector<std::size_t> degree(n, 1);
  for (VertexId c : code) ++degree[c];
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
  for (VertexId v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  for (VertexId c : code) {
    const VertexId leaf = leaves.top();
    leaves.pop();
    edges.push_back({std::min(leaf, c), std::max(leaf, c)});
    if (--degree[c] == 1) leaves.push(c);
  }
  const VertexId a = leaves.top();
  leaves.pop();
  const VertexId b = leaves.top();
  edges.push_back({std::min(a, b), std::max(a, b)});
  return edges;
}

LabeledGraph random_graph(SplitMix64& rng, std::size_t n, const SynthParams& p,
                          const std::vector<Label>& alphabet) {
  std::vector<Edge> edges = random_tree(rng, n);

  const std::size_t spread = p.target_avg_edges / 5;
  std::size_t m = rng.between(p.target_avg_edges - spread, p.target_avg_edges + spread);
  m = std::clamp<std::size_t>(m, n - 1, n * (n - 1) / 2);

  std::vector<char> present(n * n, 0);
  for (const Edge& e : edges) present[e.from * n + e.to] = 1;
  std::vector<Edge> absent;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (!present[u * n + v]) absent.push_back({u, v});
    }
  }
  // Partial Fisher-Yates: the first k entries become a uniform k-sample.
  const std::size_t k = m - edges.size();
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(absent[i], absent[i + rng.below(absent.size() - i)]);
    edges.push_back(absent[i]);
  }

  std::vector<Label> labels;
  labels.reserve(n);
  for (std::size_t v = 0; v < n; ++v) labels.push_back(alphabet[rng.below(alphabet.size())]);
  return build_graph(n, edges, labels, true);
}

}  // namespace

Dataset gen_synthetic(const SynthParams& p) {
  p.validate();
  SplitMix64 rng(p.seed);
  std::vector<Label> alphabet;
  for (std::size_t i = 0; i < p.n_labels; ++i) alphabet.emplace_back(fmt::format("l{}", i));

  Dataset ds;
  ds.examples.reserve(p.n_graphs);
  for (std::size_t g = 0; g < p.n_graphs; ++g) {
    const std::size_t n = rng.between(p.min_vertices, p.max_vertices);
    Example e;
    e.graph_id = static_cast<int>(g);
    e.graph = random_graph(rng, n, p, alphabet);
    ds.examples.push_back(std::move(e));
  }
  ds.template_graph = random_graph(rng, p.max_vertices, p, alphabet);

  const auto positives = static_cast<std::size_t>(
      std::floor(p.positive_fraction * static_cast<double>(p.n_graphs) + 0.5));
  std::vector<ExampleClass> classes(p.n_graphs, ExampleClass::Negative);
  std::fill_n(classes.begin(), positives, ExampleClass::Positive);
  rng.shuffle(std::span(classes));
  for (std::size_t g = 0; g < p.n_graphs; ++g) ds.examples[g].cls = classes[g];

  ds.n_pos_threshold = default_positive_threshold(positives);
  ds.n_neg_threshold = 0;
  return ds;
}

std::optional<SynthParams> synth_preset(std::string_view name) {
  // Benchmark statistics: 265 graphs, 20 vertices and 23 edges on average, 9 labels.
  SynthParams yoshida;
  yoshida.n_graphs = 265;
  yoshida.min_vertices = 15;
  yoshida.max_vertices = 25;
  yoshida.target_avg_edges = 23;
  yoshida.n_labels = 9;
  yoshida.positive_fraction = 1.0;
  yoshida.seed = 1;
  if (name == "yoshida") return yoshida;
  if (name == "yoshida-small") {
    SynthParams small = yoshida;
    small.n_graphs = 30;
    small.seed = 7;
    return small;
  }
  return std::nullopt;
}

}  // namespace patmine
