#include "patmine/bench.hpp"

#include <algorithm>

#include "patmine/morphism.hpp"

namespace patmine {

BenchSummary run_strategy_bench(const Dataset& ds, const MiningConfig& cfg,
                                std::span<const Strategy> strategies, std::size_t repeats,
                                const std::string& dataset_tag, std::uint64_t seed) {
  BenchSummary summary;
  for (Strategy s : strategies) {
    MiningConfig c = cfg;
    c.strategy = s;
    StrategyRuns runs{s, {}};
    for (std::size_t r = 0; r < repeats; ++r) {
      std::vector<MineResult> results = mine(ds, c);
      for (const MineResult& m : results) {
        summary.records.push_back({s, m.index, m.elapsed_ms, dataset_tag, seed});
      }
      runs.repeats.push_back(std::move(results));
    }
    summary.runs.push_back(std::move(runs));
  }
  return summary;
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : (values[mid - 1] + values[mid]) / 2.0;
}

double median_pattern_ms(const StrategyRuns& runs, std::size_t max_index) {
  std::vector<double> times;
  for (const auto& repeat : runs.repeats) {
    for (const MineResult& m : repeat) {
      if (m.index <= max_index) times.push_back(m.elapsed_ms);
    }
  }
  return median(std::move(times));
}

bool same_isomorphism_classes(std::span<const MineResult> a, std::span<const MineResult> b) {
  if (a.size() != b.size()) return false;
  std::vector<char> taken(b.size(), 0);
  for (const MineResult& x : a) {
    bool matched = false;
    for (std::size_t j = 0; j < b.size() && !matched; ++j) {
      if (!taken[j] && is_isomorphic(x.pattern, b[j].pattern)) {
        taken[j] = 1;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace patmine
