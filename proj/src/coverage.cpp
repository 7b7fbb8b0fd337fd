#include "patmine/coverage.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace patmine {
namespace {

std::vector<const Example*> examples_of(const Dataset& ds, ExampleClass cls) {
  std::vector<const Example*> out;
  for (const Example& e : ds.examples) {
    if (e.cls == cls) out.push_back(&e);
  }
  return out;
}

std::size_t& counter(CoverageReport& r, ExampleClass cls) {
  return cls == ExampleClass::Positive ? r.positive_covered : r.negative_covered;
}

bool reached(const CoverageMode& mode, std::size_t covered) {
  return mode.stop_at && covered >= *mode.stop_at;
}

}  // namespace

CoverageReport coverage(const LabeledGraph& pattern, const Dataset& ds, ExampleClass cls,
                        CoverageMode mode) {
  return coverage(MatchPlan(pattern), ds, cls, mode);
}

CoverageReport coverage(const MatchPlan& plan, const Dataset& ds, ExampleClass cls,
                        CoverageMode mode) {
  CoverageReport report;
  std::size_t& covered = counter(report, cls);
  for (const Example* e : examples_of(ds, cls)) {
    ExampleVerdict v{e->graph_id, Presence::Unknown};
    if (!reached(mode, covered)) {
      const bool found = plan.exists(e->graph);
      v.presence = found ? Presence::Present : Presence::Absent;
      if (found) ++covered;
    }
    report.per_example.push_back(v);
  }
  return report;
}

CoverageReport coverage_parallel(const MatchPlan& plan, const Dataset& ds, ExampleClass cls,
                                 CoverageMode mode, std::size_t jobs) {
  const std::vector<const Example*> members = examples_of(ds, cls);
  const auto m = static_cast<std::ptrdiff_t>(members.size());
  jobs = std::max<std::size_t>(jobs, 1);

  CoverageReport report;
  report.per_example.reserve(members.size());
  for (const Example* e : members) report.per_example.push_back({e->graph_id, Presence::Unknown});
  std::size_t& covered = counter(report, cls);

  // With early stop the block bounds wasted work past the stop point; a full
  // scan runs as a single block.
  const std::ptrdiff_t block =
      mode.stop_at ? static_cast<std::ptrdiff_t>(2 * jobs) : std::max<std::ptrdiff_t>(m, 1);
  std::vector<char> found(members.size(), 0);

  for (std::ptrdiff_t begin = 0; begin < m && !reached(mode, covered); begin += block) {
    const std::ptrdiff_t end = std::min(m, begin + block);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(static_cast<int>(jobs)) if (jobs > 1)
#endif
    for (std::ptrdiff_t i = begin; i < end; ++i) {
      found[i] = plan.exists(members[i]->graph) ? 1 : 0;
    }
    for (std::ptrdiff_t i = begin; i < end; ++i) {
      if (reached(mode, covered)) break;
      report.per_example[i].presence = found[i] ? Presence::Present : Presence::Absent;
      if (found[i]) ++covered;
    }
  }
  return report;
}

}  // namespace patmine
