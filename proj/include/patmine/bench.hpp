#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "patmine/dataio.hpp"
#include "patmine/miner.hpp"

namespace patmine {

struct StrategyRuns {
  Strategy strategy = Strategy::Decomposed;
  /// One mining result list per repeat.
  std::vector<std::vector<MineResult>> repeats;
};

struct BenchSummary {
  std::vector<StrategyRuns> runs;
  /// Rows in run order: strategy, then repeat, then pattern index.
  std::vector<BenchRecord> records;
};

/// Mines `ds` `repeats` times per strategy with `cfg` (its strategy field is
/// overridden) and records per-pattern wall times.
BenchSummary run_strategy_bench(const Dataset& ds, const MiningConfig& cfg,
                                std::span<const Strategy> strategies, std::size_t repeats,
                                const std::string& dataset_tag, std::uint64_t seed);

/// Median of every per-pattern time with index <= max_index across repeats.
/// Returns 0 when there are none.
double median_pattern_ms(const StrategyRuns& runs, std::size_t max_index);

double median(std::vector<double> values);

/// Same number of patterns per size and a one-to-one isomorphic pairing.
bool same_isomorphism_classes(std::span<const MineResult> a, std::span<const MineResult> b);

}  // namespace patmine
