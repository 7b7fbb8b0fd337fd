#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "patmine/dataset.hpp"

namespace patmine {

struct SynthParams {
  std::size_t n_graphs = 0;
  std::size_t min_vertices = 2;  // inclusive
  std::size_t max_vertices = 2;  // inclusive
  std::size_t target_avg_edges = 1;
  std::size_t n_labels = 1;
  double positive_fraction = 1.0;
  std::uint64_t seed = 0;

  /// Throws Error(InvalidConfig) or Error(InfeasibleEdgeTarget).
  void validate() const;
};

/// Positive threshold used when none is given: ceil(5% of the positives).
std::size_t default_positive_threshold(std::size_t positives);

/// Seed-deterministic dataset of connected undirected graphs.
///
/// Each graph draws its vertex count uniformly from the vertex range, gets a
/// uniformly random spanning tree (random Pruefer code), then uniformly random
/// extra edges up to an edge count drawn uniformly within +-20% of
/// `target_avg_edges` and clamped to [n-1, n(n-1)/2]. Labels are i.i.d.
/// uniform over `l0`..`l<k-1>`. The template is one more graph built the same
/// way with `max_vertices` vertices. Classes come from a seeded shuffle of
/// round(positive_fraction * n_graphs) positives and the remaining negatives.
/// N+ defaults to ceil(5% of positives), N- to 0.
Dataset gen_synthetic(const SynthParams& params);

/// Built-in parameter sets: "yoshida" (265 graphs) and "yoshida-small" (30).
std::optional<SynthParams> synth_preset(std::string_view name);

/// The small hexagon instance: one positive, one negative and an 8-vertex
/// template, uniform label, undirected.
std::string_view toy_fixture_text();
Dataset toy_dataset();

}  // namespace patmine
