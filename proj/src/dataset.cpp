#include "patmine/dataset.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "patmine/error.hpp"

namespace patmine {

std::string_view to_string(ExampleClass c) noexcept {
  return c == ExampleClass::Positive ? "pos" : "neg";
}

std::size_t Dataset::count(ExampleClass cls) const {
  return static_cast<std::size_t>(std::count_if(
      examples.begin(), examples.end(), [cls](const Example& e) { return e.cls == cls; }));
}

void validate(const Dataset& ds) {
  for (std::size_t i = 0; i < ds.examples.size(); ++i) {
    if (ds.examples[i].graph_id != static_cast<int>(i)) {
      throw Error(ErrorCode::InvalidDataset,
                  fmt::format("example at position {} has id {}; ids must be contiguous from 0", i,
                              ds.examples[i].graph_id));
    }
  }
  const std::size_t positives = ds.count(ExampleClass::Positive);
  if (ds.n_pos_threshold > positives) {
    throw Error(ErrorCode::InvalidDataset,
                fmt::format("positive threshold {} exceeds the {} positive examples",
                            ds.n_pos_threshold, positives));
  }
}

}  // namespace patmine
