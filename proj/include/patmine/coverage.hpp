#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "patmine/dataset.hpp"
#include "patmine/morphism.hpp"

namespace patmine {

enum class Presence { Absent, Present, Unknown };

struct ExampleVerdict {
  int graph_id = 0;
  Presence presence = Presence::Unknown;

  friend bool operator==(const ExampleVerdict&, const ExampleVerdict&) = default;
};

struct CoverageReport {
  std::size_t positive_covered = 0;
  std::size_t negative_covered = 0;
  /// One entry per example of the requested class, in graph_id order.
  std::vector<ExampleVerdict> per_example;

  friend bool operator==(const CoverageReport&, const CoverageReport&) = default;
};

/// Full: test every example. Early stop: stop once `stop_at` examples are
/// covered and leave the rest Unknown.
struct CoverageMode {
  std::optional<std::size_t> stop_at;

  static CoverageMode full() { return {}; }
  static CoverageMode early_stop_at(std::size_t k) { return {k}; }
};

/// Serial reference: examples of `cls` in graph_id order, one complete
/// homomorphism search each.
CoverageReport coverage(const LabeledGraph& pattern, const Dataset& ds, ExampleClass cls,
                        CoverageMode mode);
CoverageReport coverage(const MatchPlan& plan, const Dataset& ds, ExampleClass cls,
                        CoverageMode mode);

/// OpenMP kernel. Examples are tested in blocks of parallel searches; the
/// early-stop point is resolved against graph_id order after each block, so
/// the report is identical to the serial one for any `jobs`.
CoverageReport coverage_parallel(const MatchPlan& plan, const Dataset& ds, ExampleClass cls,
                                 CoverageMode mode, std::size_t jobs);

}  // namespace patmine
