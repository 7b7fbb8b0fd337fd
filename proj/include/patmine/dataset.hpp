#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "patmine/graph.hpp"

namespace patmine {

enum class ExampleClass { Positive, Negative };

std::string_view to_string(ExampleClass c) noexcept;

struct Example {
  int graph_id = 0;
  ExampleClass cls = ExampleClass::Positive;
  LabeledGraph graph;
};

/// Template graph, classified examples and the coverage thresholds.
/// Example ids are 0..examples.size()-1 in list order.
struct Dataset {
  LabeledGraph template_graph;
  std::vector<Example> examples;
  std::size_t n_pos_threshold = 0;
  std::size_t n_neg_threshold = 0;

  std::size_t count(ExampleClass cls) const;
};

/// Throws Error(InvalidDataset) when ids are not contiguous from 0 or the
/// positive threshold exceeds the number of positive examples.
void validate(const Dataset& ds);

}  // namespace patmine
