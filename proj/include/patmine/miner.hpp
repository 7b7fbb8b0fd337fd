#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "patmine/dataset.hpp"
#include "patmine/graph.hpp"

namespace patmine {

enum class Strategy {
  /// Independent complete search per example, stopped as soon as the
  /// thresholds are decided.
  Decomposed,
  /// One chronological search over every example's variables at once.
  Monolithic,
};

std::string_view to_string(Strategy s) noexcept;
std::optional<Strategy> parse_strategy(std::string_view name) noexcept;

struct MiningConfig {
  std::size_t n_pos_threshold = 0;
  std::size_t n_neg_threshold = 0;
  std::size_t min_pattern_size = 2;
  std::optional<std::size_t> max_pattern_size;
  std::optional<std::size_t> max_patterns;
  Strategy strategy = Strategy::Decomposed;
  /// Worker threads for decomposed coverage; results do not depend on it.
  std::size_t jobs = 1;

  /// Throws Error(InvalidConfig).
  void validate() const;
};

/// Template-vertex subsets excluded from the current size level.
class NoGoodStore {
 public:
  void block(VertexSubset subset);
  bool blocked(const VertexSubset& subset) const;
  void clear() { blocked_.clear(); }
  std::size_t size() const;
  std::size_t size_at(std::size_t subset_size) const;

 private:
  std::map<std::size_t, std::set<VertexSubset>> blocked_;
};

struct MineResult {
  LabeledGraph pattern;
  /// Template vertices of the pattern, ascending; pattern vertex i is subset[i].
  VertexSubset subset;
  std::size_t positive_covered = 0;
  std::size_t negative_covered = 0;
  double elapsed_ms = 0.0;
  std::size_t index = 0;  // 1-based discovery order
};

struct Verdict {
  bool valid = false;
  std::size_t positive_covered = 0;
  std::size_t negative_covered = 0;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Every size-`size` vertex subset of `g` inducing a connected subgraph,
/// in lexicographic order.
std::vector<VertexSubset> connected_subsets(const LabeledGraph& g, std::size_t size);

/// connected_subsets minus the blocked ones.
std::vector<VertexSubset> candidate_subsets(const LabeledGraph& template_graph, std::size_t size,
                                            const NoGoodStore& nogoods);

/// Positive coverage with early stop at N+, then negative coverage aborted
/// as soon as it exceeds N-. The negative side is skipped when the positive
/// side already fails.
Verdict is_valid_pattern(const LabeledGraph& pattern, const Dataset& ds, const MiningConfig& cfg);

/// Strategy dispatch; both strategies agree on `valid`.
Verdict evaluate_strategy(const LabeledGraph& pattern, const Dataset& ds, const MiningConfig& cfg);

/// Every template-vertex subset whose induced subgraph is isomorphic to
/// `pattern`, ascending.
std::vector<VertexSubset> template_occurrences(const LabeledGraph& pattern,
                                               const LabeledGraph& template_graph);

/// Level-wise enumeration of pairwise non-isomorphic valid patterns, smallest
/// size first. Within a level, candidates are scanned lexicographically; each
/// accepted pattern blocks all of its template occurrences, and the blocks are
/// cleared when the level is exhausted.
std::vector<MineResult> mine(const Dataset& ds, const MiningConfig& cfg);

}  // namespace patmine
