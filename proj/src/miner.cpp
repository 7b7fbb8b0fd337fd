#include "patmine/miner.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include <fmt/format.h>

#include "patmine/coverage.hpp"
#include "patmine/error.hpp"
#include "patmine/monolithic.hpp"
#include "patmine/morphism.hpp"

namespace patmine {

std::string_view to_string(Strategy s) noexcept {
  return s == Strategy::Decomposed ? "decomposed" : "monolithic";
}

std::optional<Strategy> parse_strategy(std::string_view name) noexcept {
  if (name == "decomposed") return Strategy::Decomposed;
  if (name == "monolithic") return Strategy::Monolithic;
  return std::nullopt;
}

void MiningConfig::validate() const {
  if (min_pattern_size < 1) {
    throw Error(ErrorCode::InvalidConfig, "min_pattern_size must be at least 1");
  }
  if (max_pattern_size && *max_pattern_size < min_pattern_size) {
    throw Error(ErrorCode::InvalidConfig,
                fmt::format("max_pattern_size {} is below min_pattern_size {}", *max_pattern_size,
                            min_pattern_size));
  }
  if (jobs < 1) throw Error(ErrorCode::InvalidConfig, "jobs must be at least 1");
}

void NoGoodStore::block(VertexSubset subset) {
  const std::size_t k = subset.size();
  blocked_[k].insert(std::move(subset));
}

bool NoGoodStore::blocked(const VertexSubset& subset) const {
  auto it = blocked_.find(subset.size());
  return it != blocked_.end() && it->second.contains(subset);
}

std::size_t NoGoodStore::size() const {
  std::size_t n = 0;
  for (const auto& [k, level] : blocked_) n += level.size();
  return n;
}

std::size_t NoGoodStore::size_at(std::size_t subset_size) const {
  auto it = blocked_.find(subset_size);
  return it == blocked_.end() ? 0 : it->second.size();
}

std::vector<VertexSubset> connected_subsets(const LabeledGraph& g, std::size_t size) {
  std::vector<VertexSubset> out;
  const std::size_t n = g.vertex_count();
  if (size == 0 || size > n) return out;

  // ESU enumeration: each connected subset is produced exactly once, rooted
  // at its smallest vertex.
  VertexSubset current;
  std::vector<int> exclusive(n, 0);  // >0: in current or adjacent to it
  std::function<void(VertexId, std::vector<VertexId>)> extend =
      [&](VertexId root, std::vector<VertexId> extension) {
        if (current.size() == size) {
          VertexSubset s = current;
          std::sort(s.begin(), s.end());
          out.push_back(std::move(s));
          return;
        }
        while (!extension.empty()) {
          const VertexId w = extension.back();
          extension.pop_back();
          std::vector<VertexId> next = extension;
          for (VertexId u : g.neighbors(w)) {
            if (u > root && exclusive[u] == 0) next.push_back(u);
          }
          current.push_back(w);
          ++exclusive[w];
          for (VertexId u : g.neighbors(w)) ++exclusive[u];
          extend(root, std::move(next));
          for (VertexId u : g.neighbors(w)) --exclusive[u];
          --exclusive[w];
          current.pop_back();
        }
      };

  for (VertexId root = 0; root < n; ++root) {
    current = {root};
    ++exclusive[root];
    for (VertexId u : g.neighbors(root)) ++exclusive[u];
    std::vector<VertexId> extension;
    for (VertexId u : g.neighbors(root)) {
      if (u > root) extension.push_back(u);
    }
    extend(root, std::move(extension));
    for (VertexId u : g.neighbors(root)) --exclusive[u];
    --exclusive[root];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSubset> candidate_subsets(const LabeledGraph& template_graph, std::size_t size,
                                            const NoGoodStore& nogoods) {
  std::vector<VertexSubset> all = connected_subsets(template_graph, size);
  std::erase_if(all, [&](const VertexSubset& s) { return nogoods.blocked(s); });
  return all;
}

Verdict is_valid_pattern(const LabeledGraph& pattern, const Dataset& ds, const MiningConfig& cfg) {
  const MatchPlan plan(pattern);
  auto run = [&](ExampleClass cls, std::size_t stop_at) {
    const CoverageMode mode = CoverageMode::early_stop_at(stop_at);
    return cfg.jobs > 1 ? coverage_parallel(plan, ds, cls, mode, cfg.jobs)
                        : coverage(plan, ds, cls, mode);
  };
  Verdict v;
  v.positive_covered = run(ExampleClass::Positive, cfg.n_pos_threshold).positive_covered;
  if (v.positive_covered < cfg.n_pos_threshold) return v;
  v.negative_covered = run(ExampleClass::Negative, cfg.n_neg_threshold + 1).negative_covered;
  v.valid = v.negative_covered <= cfg.n_neg_threshold;
  return v;
}

Verdict evaluate_strategy(const LabeledGraph& pattern, const Dataset& ds, const MiningConfig& cfg) {
  switch (cfg.strategy) {
    case Strategy::Decomposed:
      return is_valid_pattern(pattern, ds, cfg);
    case Strategy::Monolithic:
      return evaluate_monolithic(pattern, ds, cfg.n_pos_threshold, cfg.n_neg_threshold);
  }
  return {};
}

std::vector<VertexSubset> template_occurrences(const LabeledGraph& pattern,
                                               const LabeledGraph& template_graph) {
  std::set<VertexSubset> found;
  MatchPlan(pattern, MatchMode::Induced).for_each(template_graph, [&](const Mapping& m) {
    VertexSubset s(m.targets().begin(), m.targets().end());
    std::sort(s.begin(), s.end());
    found.insert(std::move(s));
    return true;
  });
  return {found.begin(), found.end()};
}

std::vector<MineResult> mine(const Dataset& ds, const MiningConfig& cfg) {
  cfg.validate();
  validate(ds);
  std::vector<MineResult> results;
  if (cfg.max_patterns && *cfg.max_patterns == 0) return results;

  using Clock = std::chrono::steady_clock;
  auto last = Clock::now();
  const LabeledGraph& tmpl = ds.template_graph;
  const std::size_t top = std::min(tmpl.vertex_count(), cfg.max_pattern_size.value_or(tmpl.vertex_count()));

  NoGoodStore nogoods;
  for (std::size_t size = cfg.min_pattern_size; size <= top; ++size) {
    nogoods.clear();
    const std::size_t level_begin = results.size();
    for (const VertexSubset& subset : connected_subsets(tmpl, size)) {
      if (nogoods.blocked(subset)) continue;
      InducedSubgraph candidate = induced_subgraph(tmpl, subset);
      const Verdict v = evaluate_strategy(candidate.graph, ds, cfg);
      if (!v.valid) continue;
      const bool duplicate =
          std::any_of(results.begin() + static_cast<std::ptrdiff_t>(level_begin), results.end(),
                      [&](const MineResult& r) { return is_isomorphic(r.pattern, candidate.graph); });
      if (duplicate) continue;

      const auto now = Clock::now();
      MineResult r;
      r.subset = subset;
      r.positive_covered = v.positive_covered;
      r.negative_covered = v.negative_covered;
      r.elapsed_ms = std::chrono::duration<double, std::milli>(now - last).count();
      r.index = results.size() + 1;
      last = now;
      for (VertexSubset& occurrence : template_occurrences(candidate.graph, tmpl)) {
        nogoods.block(std::move(occurrence));
      }
      r.pattern = std::move(candidate.graph);
      results.push_back(std::move(r));
      if (cfg.max_patterns && results.size() >= *cfg.max_patterns) return results;
    }
  }
  return results;
}

}  // namespace patmine
