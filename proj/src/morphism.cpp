#include "patmine/morphism.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include <fmt/format.h>

#include "patmine/error.hpp"

namespace patmine {

bool Mapping::is_total() const {
  return std::none_of(targets_.begin(), targets_.end(),
                      [](VertexId t) { return t == kUnmapped; });
}

bool Mapping::is_injective() const {
  std::vector<VertexId> mapped;
  for (VertexId t : targets_) {
    if (t != kUnmapped) mapped.push_back(t);
  }
  std::sort(mapped.begin(), mapped.end());
  return std::adjacent_find(mapped.begin(), mapped.end()) == mapped.end();
}

namespace {

std::vector<VertexId> connectivity_first_order(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count();
  auto degree = [&](VertexId v) { return g.out_degree(v) + g.in_degree(v); };
  std::vector<VertexId> order;
  order.reserve(n);
  std::vector<char> placed(n, 0);
  while (order.size() < n) {
    VertexId root = 0;
    bool have_root = false;
    for (VertexId v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (!have_root || degree(v) > degree(root)) {
        root = v;
        have_root = true;
      }
    }
    std::deque<VertexId> queue{root};
    placed[root] = 1;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (!placed[w]) {
          placed[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  return order;
}

}  // namespace

MatchPlan::MatchPlan(const LabeledGraph& pattern, MatchMode mode)
    : mode_(mode), pattern_size_(pattern.vertex_count()), order_(connectivity_first_order(pattern)) {
  steps_.reserve(order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) {
    const VertexId u = order_[i];
    Step step{pattern.label(u), pattern.out_degree(u), pattern.in_degree(u),
              pattern.has_edge(u, u), {}};
    for (std::size_t j = 0; j < i; ++j) {
      const VertexId w = order_[j];
      const bool out = pattern.has_edge(u, w);
      const bool in = pattern.has_edge(w, u);
      if (out || in || mode_ == MatchMode::Induced) step.links.push_back({j, out, in});
    }
    steps_.push_back(std::move(step));
  }
}

bool MatchPlan::admissible(const LabeledGraph& target, std::size_t position, VertexId c,
                           const Mapping& partial, std::span<const char> used) const {
  const Step& s = steps_[position];
  if (used[c] || target.label(c) != s.label) return false;
  if (target.out_degree(c) < s.out_degree || target.in_degree(c) < s.in_degree) return false;
  const bool loop = target.has_edge(c, c);
  if (mode_ == MatchMode::Induced ? loop != s.self_loop : (s.self_loop && !loop)) return false;
  for (const Link& link : s.links) {
    const VertexId mapped = partial[order_[link.earlier]];
    const bool out = target.has_edge(c, mapped);
    const bool in = target.has_edge(mapped, c);
    if (mode_ == MatchMode::Induced) {
      if (out != link.out || in != link.in) return false;
    } else if ((link.out && !out) || (link.in && !in)) {
      return false;
    }
  }
  return true;
}

bool MatchPlan::descend(const LabeledGraph& target, std::size_t position, Mapping& m,
                        std::vector<char>& used,
                        const std::function<bool(const Mapping&)>& visit) const {
  if (position == order_.size()) return visit(m);
  const VertexId u = order_[position];
  for (VertexId c = 0; c < target.vertex_count(); ++c) {
    if (!admissible(target, position, c, m, used)) continue;
    m.assign(u, c);
    used[c] = 1;
    const bool keep_going = descend(target, position + 1, m, used, visit);
    used[c] = 0;
    m.unassign(u);
    if (!keep_going) return false;
  }
  return true;
}

void MatchPlan::for_each(const LabeledGraph& target,
                         const std::function<bool(const Mapping&)>& visit) const {
  if (pattern_size_ > target.vertex_count()) return;
  Mapping m(pattern_size_);
  std::vector<char> used(target.vertex_count(), 0);
  descend(target, 0, m, used, visit);
}

std::optional<Mapping> MatchPlan::find_first(const LabeledGraph& target) const {
  std::optional<Mapping> found;
  for_each(target, [&](const Mapping& m) {
    found = m;
    return false;
  });
  return found;
}

std::optional<Mapping> find_homomorphism(const LabeledGraph& pattern, const LabeledGraph& target) {
  return MatchPlan(pattern).find_first(target);
}

bool is_homomorphism(const LabeledGraph& pattern, const LabeledGraph& target, const Mapping& m) {
  if (m.size() != pattern.vertex_count() || !m.is_total() || !m.is_injective()) return false;
  for (VertexId v = 0; v < pattern.vertex_count(); ++v) {
    if (m[v] >= target.vertex_count() || pattern.label(v) != target.label(m[v])) return false;
  }
  return std::all_of(pattern.edges().begin(), pattern.edges().end(), [&](const Edge& e) {
    return target.has_edge(m[e.from], m[e.to]);
  });
}

std::vector<Mapping> brute_force_homomorphisms(const LabeledGraph& pattern,
                                               const LabeledGraph& target) {
  const std::size_t k = pattern.vertex_count();
  if (k > kBruteForceMaxPattern) {
    throw Error(ErrorCode::PatternTooLarge,
                fmt::format("brute force limited to {} pattern vertices, got {}",
                            kBruteForceMaxPattern, k));
  }
  std::vector<Mapping> out;
  std::vector<VertexId> tuple(k);
  std::vector<char> used(target.vertex_count(), 0);
  // Plain enumeration of injective tuples; validity is judged on complete tuples only.
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (i == k) {
      Mapping m(tuple);
      if (is_homomorphism(pattern, target, m)) out.push_back(std::move(m));
      return;
    }
    for (VertexId t = 0; t < target.vertex_count(); ++t) {
      if (used[t]) continue;
      used[t] = 1;
      tuple[i] = t;
      extend(i + 1);
      used[t] = 0;
    }
  };
  extend(0);
  return out;
}

namespace {

// (label, out-degree, in-degree) per vertex, sorted; equal for isomorphic graphs.
std::vector<std::tuple<std::uint32_t, std::size_t, std::size_t>> degree_signature(
    const LabeledGraph& g) {
  std::vector<std::tuple<std::uint32_t, std::size_t, std::size_t>> sig;
  sig.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    sig.emplace_back(g.label(v).id(), g.out_degree(v), g.in_degree(v));
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

}  // namespace

bool is_isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (degree_signature(a) != degree_signature(b)) return false;
  return MatchPlan(a, MatchMode::Induced).exists(b);
}

}  // namespace patmine
