#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace patmine::testing {
namespace {

Label label_for(std::size_t i) { return Label("l" + std::to_string(i)); }

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

bool extend(const LabeledGraph& p, const LabeledGraph& t, std::vector<VertexId>& f,
            std::vector<bool>& used) {
  const std::size_t k = f.size();
  if (k == p.vertex_count()) {
    for (const Edge& e : p.edges()) {
      if (!t.has_edge(f[e.from], f[e.to])) return false;
    }
    for (VertexId v = 0; v < p.vertex_count(); ++v) {
      if (p.label(v) != t.label(f[v])) return false;
    }
    return true;
  }
  for (VertexId c = 0; c < t.vertex_count(); ++c) {
    if (used[c]) continue;
    used[c] = true;
    f.push_back(c);
    const bool ok = extend(p, t, f, used);
    f.pop_back();
    used[c] = false;
    if (ok) return true;
  }
  return false;
}

}  // namespace

LabeledGraph random_graph(SplitMix64& rng, std::size_t n, unsigned p_per_mille,
                          std::size_t n_labels, bool undirected) {
  std::vector<Label> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(label_for(rng.below(n_labels)));
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u == v || (undirected && v < u)) continue;
      if (rng.below(1000) < p_per_mille) edges.push_back({u, v});
    }
  }
  return build_graph(n, edges, labels, undirected);
}

LabeledGraph random_connected_graph(SplitMix64& rng, std::size_t n, unsigned p_per_mille,
                                    std::size_t n_labels, bool undirected) {
  std::vector<Label> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(label_for(rng.below(n_labels)));
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) {
    const auto u = static_cast<VertexId>(rng.below(v));
    if (!undirected && rng.below(2) == 0) {
      edges.push_back({v, u});
    } else {
      edges.push_back({u, v});
    }
  }
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng.below(1000) < p_per_mille) edges.push_back({u, v});
    }
  }
  return build_graph(n, edges, labels, undirected);
}

bool connected_by_union_find(const LabeledGraph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  for (const Edge& e : g.edges()) parent[find_root(parent, e.from)] = find_root(parent, e.to);
  const std::size_t root = find_root(parent, 0);
  for (std::size_t v = 1; v < g.vertex_count(); ++v) {
    if (find_root(parent, v) != root) return false;
  }
  return true;
}

bool has_injective_homomorphism(const LabeledGraph& pattern, const LabeledGraph& target) {
  if (pattern.vertex_count() > target.vertex_count()) return false;
  std::vector<VertexId> f;
  std::vector<bool> used(target.vertex_count(), false);
  return extend(pattern, target, f, used);
}

bool isomorphic_by_permutation(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<VertexId> perm(a.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (VertexId v = 0; v < a.vertex_count() && ok; ++v) ok = a.label(v) == b.label(perm[v]);
    for (VertexId u = 0; u < a.vertex_count() && ok; ++u) {
      for (VertexId v = 0; v < a.vertex_count() && ok; ++v) {
        ok = a.has_edge(u, v) == b.has_edge(perm[u], perm[v]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

LabeledGraph induced_by_mask(const LabeledGraph& g, std::uint32_t mask) {
  std::vector<VertexId> index(g.vertex_count(), 0);
  std::vector<Label> labels;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (mask >> v & 1U) {
      index[v] = static_cast<VertexId>(labels.size());
      labels.push_back(g.label(v));
    }
  }
  std::vector<Edge> edges;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if ((mask >> u & 1U) && (mask >> v & 1U) && g.has_edge(u, v)) {
        edges.push_back({index[u], index[v]});
      }
    }
  }
  return build_graph(labels.size(), edges, labels, false);
}

OracleVerdict oracle_verdict(const LabeledGraph& pattern, const Dataset& ds) {
  OracleVerdict v;
  for (const Example& e : ds.examples) {
    if (!has_injective_homomorphism(pattern, e.graph)) continue;
    if (e.cls == ExampleClass::Positive) {
      ++v.positive_covered;
    } else {
      ++v.negative_covered;
    }
  }
  v.valid = v.positive_covered >= ds.n_pos_threshold && v.negative_covered <= ds.n_neg_threshold;
  return v;
}

std::map<std::size_t, std::vector<LabeledGraph>> exhaustive_classes(const Dataset& ds,
                                                                     std::size_t min_size,
                                                                     std::size_t max_size) {
  const LabeledGraph& t = ds.template_graph;
  std::map<std::size_t, std::vector<LabeledGraph>> out;
  for (std::uint32_t mask = 1; mask < (1U << t.vertex_count()); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size < min_size || size > max_size) continue;
    LabeledGraph p = induced_by_mask(t, mask);
    if (!connected_by_union_find(p) || !oracle_verdict(p, ds).valid) continue;
    auto& classes = out[size];
    const bool seen = std::any_of(classes.begin(), classes.end(), [&](const LabeledGraph& c) {
      return isomorphic_by_permutation(c, p);
    });
    if (!seen) classes.push_back(std::move(p));
  }
  return out;
}

}  // namespace patmine::testing
