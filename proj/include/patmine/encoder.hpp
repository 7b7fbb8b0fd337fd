#pragma once

#include <string>
#include <string_view>

#include "patmine/dataset.hpp"

namespace patmine {

inline constexpr std::string_view kGeneratorVersion = "0.1.0";

/// Generated program text. `header` holds comment lines only.
struct EncodingText {
  std::string header;
  std::string body;

  std::string str() const { return header + body; }
};

/// ASP program for the dataset: instance facts (edge/3, label/3, negative/1,
/// positive/1, t_edge/2, t_label/2), positive matching with the N+ bound, a
/// saturation block with one map/3 disjunction per negative graph listing all
/// of its vertices, the N- bound, template-based canonicity and the
/// auxiliary rules. Example vertices render as v<id>, template vertices as
/// x<id>.
///
/// Throws Error(EmptyDataset) when the template has no vertices.
EncodingText emit_asp(const Dataset& ds);

/// IDP vocabulary, positive theory and a structure holding the instance with
/// threshold = N+.
///
/// Throws Error(EmptyDataset) when the template has no vertices.
EncodingText emit_idp(const Dataset& ds);

}  // namespace patmine
