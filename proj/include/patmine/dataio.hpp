#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "patmine/dataset.hpp"
#include "patmine/graph.hpp"
#include "patmine/miner.hpp"

namespace patmine {

// Graph file format (line oriented, '#'-prefixed lines are comments):
//
//   mode directed|undirected
//   t # <id> <pos|neg|template>
//   v <vid> <label>          vids dense 0..n-1 within a block
//   e <src> <dst>
//
// Pattern files replace the `t` line with
//   p # <index> size=<n> pos=<k> neg=<m> time_ms=<t>
// and list template vertex ids, which need not be dense.

enum class BlockTag { Positive, Negative, Template };

std::string_view to_string(BlockTag tag) noexcept;

struct GraphBlock {
  int id = 0;
  BlockTag tag = BlockTag::Positive;
  LabeledGraph graph;
};

/// Throws ParseError (SyntaxError, NonDenseVertexIds, UnknownClassTag,
/// DuplicateBlockId) carrying the 1-based line number.
std::vector<GraphBlock> parse_graphs(std::string_view text);

/// Inverse of parse_graphs. Undirected graphs are written with one line per
/// edge pair.
std::string write_graphs(std::span<const GraphBlock> blocks);

/// Splits blocks into template and examples. Examples keep file order and are
/// numbered 0.. in that order. `separate_template` supplies the template when
/// the example blocks carry none. Thresholds are left at 0.
///
/// Throws Error(InvalidDataset) unless exactly one template block is present.
Dataset assemble_dataset(std::vector<GraphBlock> blocks,
                         std::optional<GraphBlock> separate_template = std::nullopt);

/// Examples with their ids, followed by the template as block examples.size().
std::string write_dataset(const Dataset& ds);

std::string read_text_file(const std::filesystem::path& path);

Dataset load_dataset(const std::filesystem::path& examples,
                     const std::optional<std::filesystem::path>& template_file = std::nullopt);

struct PatternBlock {
  std::size_t index = 0;
  std::size_t line = 0;
  bool undirected = true;
  /// Template vertex ids in listing order, with their labels.
  std::vector<VertexId> vertices;
  std::vector<Label> labels;
  /// Edges in template ids. For undirected files both directions are present.
  std::vector<Edge> edges;
};

std::string write_patterns(std::span<const MineResult> results);

std::vector<PatternBlock> parse_patterns(std::string_view text);

struct BenchRecord {
  Strategy strategy = Strategy::Decomposed;
  std::size_t pattern_index = 0;
  double elapsed_ms = 0.0;
  std::string dataset_tag;
  std::uint64_t seed = 0;
};

/// Header `strategy,index,elapsed_ms,dataset,seed`, then one row per record
/// in input order. The dataset tag is quoted when it contains a comma, quote
/// or line break.
std::string write_bench_csv(std::span<const BenchRecord> records);

}  // namespace patmine
