#include "patmine/monolithic.hpp"

#include <vector>

#include "patmine/morphism.hpp"

namespace patmine {
namespace {

class JointSearch {
 public:
  JointSearch(const MatchPlan& plan, std::vector<const LabeledGraph*> graphs, std::size_t needed)
      : plan_(plan), graphs_(std::move(graphs)), needed_(needed), witnessed_(graphs_.size(), 0) {
    maps_.reserve(graphs_.size());
    used_.reserve(graphs_.size());
    for (const LabeledGraph* g : graphs_) {
      maps_.emplace_back(plan_.size());
      used_.emplace_back(g->vertex_count(), 0);
    }
  }

  bool solve() { return decide_example(0, 0); }

  std::size_t solution_count() const { return solution_count_; }

  std::size_t witnessed() const {
    std::size_t n = 0;
    for (char w : witnessed_) n += w ? 1 : 0;
    return n;
  }

 private:
  // homowith_i
  bool decide_example(std::size_t i, std::size_t covered) {
    if (i == graphs_.size()) {
      if (covered < needed_) return false;
      solution_count_ = covered;
      return true;
    }
    if (covered + (graphs_.size() - i) < needed_) return false;
    if (plan_.size() <= graphs_[i]->vertex_count() && decide_mapping(i, 0, covered)) return true;
    return decide_example(i + 1, covered);
  }

  // f_i(order[position]) under homowith_i = true
  bool decide_mapping(std::size_t i, std::size_t position, std::size_t covered) {
    if (position == plan_.size()) {
      witnessed_[i] = 1;
      return decide_example(i + 1, covered + 1);
    }
    const LabeledGraph& target = *graphs_[i];
    Mapping& m = maps_[i];
    std::vector<char>& used = used_[i];
    const VertexId u = plan_.vertex_at(position);
    for (VertexId c = 0; c < target.vertex_count(); ++c) {
      if (!plan_.admissible(target, position, c, m, used)) continue;
      m.assign(u, c);
      used[c] = 1;
      const bool ok = decide_mapping(i, position + 1, covered);
      used[c] = 0;
      m.unassign(u);
      if (ok) return true;
    }
    return false;
  }

  const MatchPlan& plan_;
  std::vector<const LabeledGraph*> graphs_;
  std::size_t needed_;
  std::vector<Mapping> maps_;
  std::vector<std::vector<char>> used_;
  std::vector<char> witnessed_;
  std::size_t solution_count_ = 0;
};

std::vector<const LabeledGraph*> graphs_of(const Dataset& ds, ExampleClass cls) {
  std::vector<const LabeledGraph*> out;
  for (const Example& e : ds.examples) {
    if (e.cls == cls) out.push_back(&e.graph);
  }
  return out;
}

}  // namespace

Verdict evaluate_monolithic(const LabeledGraph& pattern, const Dataset& ds, std::size_t n_pos,
                            std::size_t n_neg) {
  const MatchPlan plan(pattern);
  Verdict v;

  JointSearch positive(plan, graphs_of(ds, ExampleClass::Positive), n_pos);
  const bool accepted = positive.solve();
  v.positive_covered = accepted ? positive.solution_count() : positive.witnessed();
  if (!accepted) return v;

  JointSearch negative(plan, graphs_of(ds, ExampleClass::Negative), n_neg + 1);
  const bool rejected = negative.solve();
  v.negative_covered = rejected ? negative.solution_count() : negative.witnessed();
  v.valid = !rejected;
  return v;
}

}  // namespace patmine
