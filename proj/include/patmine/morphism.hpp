#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "patmine/graph.hpp"

namespace patmine {

/// Partial injective map from pattern vertices to target vertices.
class Mapping {
 public:
  static constexpr VertexId kUnmapped = std::numeric_limits<VertexId>::max();

  Mapping() = default;
  explicit Mapping(std::size_t pattern_size) : targets_(pattern_size, kUnmapped) {}
  explicit Mapping(std::vector<VertexId> targets) : targets_(std::move(targets)) {}

  std::size_t size() const noexcept { return targets_.size(); }
  bool is_mapped(VertexId p) const { return targets_[p] != kUnmapped; }
  VertexId operator[](VertexId p) const { return targets_[p]; }
  void assign(VertexId p, VertexId t) { targets_[p] = t; }
  void unassign(VertexId p) { targets_[p] = kUnmapped; }

  bool is_total() const;
  bool is_injective() const;
  std::span<const VertexId> targets() const noexcept { return targets_; }

  friend auto operator<=>(const Mapping&, const Mapping&) = default;

 private:
  std::vector<VertexId> targets_;
};

enum class MatchMode {
  /// Injective, label-preserving, edge-preserving.
  Monomorphism,
  /// Monomorphism that also preserves non-edges between mapped vertices.
  Induced,
};

/// Precomputed backtracking plan for one pattern. Immutable and shareable
/// across threads; every search keeps its own state.
///
/// Pattern vertices are visited connectivity-first: start at the vertex of
/// highest total degree (lowest id on ties), continue in BFS order with
/// neighbours ascending, restart at the next highest-degree unvisited vertex
/// when a component is exhausted. Target candidates are tried in ascending
/// id, so the first mapping found is the smallest in plan order.
class MatchPlan {
 public:
  explicit MatchPlan(const LabeledGraph& pattern, MatchMode mode = MatchMode::Monomorphism);

  std::size_t size() const noexcept { return order_.size(); }
  std::span<const VertexId> order() const noexcept { return order_; }
  VertexId vertex_at(std::size_t position) const { return order_[position]; }

  /// Whether pattern vertex `order()[position]` may map to `candidate` given
  /// that every earlier position is already assigned in `partial` and
  /// `used[t]` marks the target vertices taken so far.
  bool admissible(const LabeledGraph& target, std::size_t position, VertexId candidate,
                  const Mapping& partial, std::span<const char> used) const;

  std::optional<Mapping> find_first(const LabeledGraph& target) const;
  bool exists(const LabeledGraph& target) const { return find_first(target).has_value(); }

  /// Visits every total mapping in search order until `visit` returns false.
  void for_each(const LabeledGraph& target,
                const std::function<bool(const Mapping&)>& visit) const;

 private:
  struct Link {
    std::size_t earlier;  // position of the already-mapped neighbour
    bool out;             // pattern edge (this -> earlier)
    bool in;              // pattern edge (earlier -> this)
  };
  struct Step {
    Label label;
    std::size_t out_degree;
    std::size_t in_degree;
    bool self_loop;
    std::vector<Link> links;
  };

  bool descend(const LabeledGraph& target, std::size_t position, Mapping& m,
               std::vector<char>& used,
               const std::function<bool(const Mapping&)>& visit) const;

  MatchMode mode_;
  std::size_t pattern_size_ = 0;
  std::vector<VertexId> order_;
  std::vector<Step> steps_;
};

/// One injective label- and edge-preserving mapping from `pattern` into
/// `target`, or nullopt when none exists. The search is complete.
std::optional<Mapping> find_homomorphism(const LabeledGraph& pattern, const LabeledGraph& target);

/// Checks the homomorphism conditions for a total mapping directly.
bool is_homomorphism(const LabeledGraph& pattern, const LabeledGraph& target, const Mapping& m);

inline constexpr std::size_t kBruteForceMaxPattern = 8;

/// Every homomorphism by exhaustive enumeration of injective assignments, in
/// lexicographic order of the target tuple. Reference implementation for
/// tests; throws Error(PatternTooLarge) above kBruteForceMaxPattern vertices.
std::vector<Mapping> brute_force_homomorphisms(const LabeledGraph& pattern,
                                               const LabeledGraph& target);

/// Label-preserving bijection under which the edge sets correspond exactly.
bool is_isomorphic(const LabeledGraph& a, const LabeledGraph& b);

}  // namespace patmine
