#include "patmine/dataio.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "patmine/error.hpp"

namespace patmine {

std::string_view to_string(BlockTag tag) noexcept {
  switch (tag) {
    case BlockTag::Positive: return "pos";
    case BlockTag::Negative: return "neg";
    case BlockTag::Template: return "template";
  }
  return "?";
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename Int>
Int parse_int(std::string_view token, std::size_t line, std::string_view what) {
  Int value{};
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(ErrorCode::SyntaxError, line,
                     fmt::format("expected {} but found '{}'", what, token));
  }
  return value;
}

struct VertexLine {
  VertexId id;
  std::string_view label;
  std::size_t line;
};

struct EdgeLine {
  VertexId from;
  VertexId to;
  std::size_t line;
};

/// A block as read, before any validation of its vertex ids.
struct RawBlock {
  std::size_t line = 0;
  std::vector<std::string_view> header;  // tokens after "t #" / "p #"
  std::vector<VertexLine> vertices;
  std::vector<EdgeLine> edges;
};

struct RawFile {
  std::optional<bool> undirected;
  std::vector<RawBlock> blocks;
};

/// Shared line scanner. `record` is 't' for graph files and 'p' for pattern files.
RawFile scan(std::string_view text, char record) {
  RawFile file;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    const auto tok = split_ws(line);
    if (tok.empty() || tok[0].front() == '#') continue;

    const std::string_view kind = tok[0];
    if (kind == "mode") {
      if (tok.size() != 2 || (tok[1] != "directed" && tok[1] != "undirected")) {
        throw ParseError(ErrorCode::SyntaxError, line_no,
                         "expected 'mode directed' or 'mode undirected'");
      }
      if (file.undirected || !file.blocks.empty()) {
        throw ParseError(ErrorCode::SyntaxError, line_no, "mode must be the first record");
      }
      file.undirected = tok[1] == "undirected";
    } else if (kind.size() == 1 && kind[0] == record) {
      if (!file.undirected) {
        throw ParseError(ErrorCode::SyntaxError, line_no, "block before the mode header");
      }
      if (tok.size() < 3 || tok[1] != "#") {
        throw ParseError(ErrorCode::SyntaxError, line_no,
                         fmt::format("expected '{} # <id> ...'", record));
      }
      file.blocks.push_back({line_no, {tok.begin() + 2, tok.end()}, {}, {}});
    } else if (kind == "v" || kind == "e") {
      if (file.blocks.empty()) {
        throw ParseError(ErrorCode::SyntaxError, line_no, "record outside of a block");
      }
      if (tok.size() != 3) {
        throw ParseError(ErrorCode::SyntaxError, line_no,
                         fmt::format("'{}' takes exactly two fields", kind));
      }
      RawBlock& b = file.blocks.back();
      if (kind == "v") {
        b.vertices.push_back({parse_int<VertexId>(tok[1], line_no, "a vertex id"), tok[2], line_no});
      } else {
        b.edges.push_back({parse_int<VertexId>(tok[1], line_no, "a vertex id"),
                           parse_int<VertexId>(tok[2], line_no, "a vertex id"), line_no});
      }
    } else {
      throw ParseError(ErrorCode::SyntaxError, line_no,
                       fmt::format("unknown record '{}'", kind));
    }
  }
  return file;
}

BlockTag parse_tag(std::string_view token, std::size_t line) {
  if (token == "pos") return BlockTag::Positive;
  if (token == "neg") return BlockTag::Negative;
  if (token == "template") return BlockTag::Template;
  throw ParseError(ErrorCode::UnknownClassTag, line, fmt::format("unknown class tag '{}'", token));
}

void append_edges(std::string& out, const LabeledGraph& g, std::span<const VertexId> names,
                  bool undirected) {
  for (const Edge& e : g.edges()) {
    if (undirected && e.from > e.to) continue;
    out += fmt::format("e {} {}\n", names[e.from], names[e.to]);
  }
}

std::vector<VertexId> identity_names(std::size_t n) {
  std::vector<VertexId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<VertexId>(i);
  return ids;
}

}  // namespace

std::vector<GraphBlock> parse_graphs(std::string_view text) {
  const RawFile file = scan(text, 't');
  std::vector<GraphBlock> out;
  std::set<int> ids;
  for (const RawBlock& raw : file.blocks) {
    if (raw.header.size() != 2) {
      throw ParseError(ErrorCode::SyntaxError, raw.line, "expected 't # <id> <pos|neg|template>'");
    }
    GraphBlock block;
    block.id = parse_int<int>(raw.header[0], raw.line, "a block id");
    block.tag = parse_tag(raw.header[1], raw.line);
    if (!ids.insert(block.id).second) {
      throw ParseError(ErrorCode::DuplicateBlockId, raw.line,
                       fmt::format("block id {} appears twice", block.id));
    }

    const std::size_t n = raw.vertices.size();
    std::vector<std::optional<Label>> slots(n);
    for (const VertexLine& v : raw.vertices) {
      if (v.id >= n || slots[v.id]) {
        throw ParseError(ErrorCode::NonDenseVertexIds, v.line,
                         fmt::format("block {}: vertex ids must be exactly 0..{}", block.id,
                                     n == 0 ? 0 : n - 1));
      }
      slots[v.id] = Label(v.label);
    }
    std::vector<Label> labels;
    labels.reserve(n);
    for (auto& s : slots) labels.push_back(*s);

    std::vector<Edge> edges;
    edges.reserve(raw.edges.size());
    for (const EdgeLine& e : raw.edges) {
      if (e.from >= n || e.to >= n) {
        throw ParseError(ErrorCode::SyntaxError, e.line,
                         fmt::format("edge ({}, {}) out of range for {} vertices", e.from, e.to, n));
      }
      edges.push_back({e.from, e.to});
    }
    block.graph = build_graph(n, edges, labels, *file.undirected);
    out.push_back(std::move(block));
  }
  return out;
}

std::string write_graphs(std::span<const GraphBlock> blocks) {
  const bool undirected = std::all_of(blocks.begin(), blocks.end(),
                                      [](const GraphBlock& b) { return b.graph.undirected_input(); });
  std::string out = undirected ? "mode undirected\n" : "mode directed\n";
  for (const GraphBlock& b : blocks) {
    out += fmt::format("t # {} {}\n", b.id, to_string(b.tag));
    for (VertexId v = 0; v < b.graph.vertex_count(); ++v) {
      out += fmt::format("v {} {}\n", v, b.graph.label(v).symbol());
    }
    append_edges(out, b.graph, identity_names(b.graph.vertex_count()), undirected);
  }
  return out;
}

Dataset assemble_dataset(std::vector<GraphBlock> blocks, std::optional<GraphBlock> separate_template) {
  Dataset ds;
  bool have_template = false;
  if (separate_template) {
    if (separate_template->tag != BlockTag::Template) {
      throw Error(ErrorCode::InvalidDataset, "template file does not contain a template block");
    }
    ds.template_graph = std::move(separate_template->graph);
    have_template = true;
  }
  for (GraphBlock& b : blocks) {
    if (b.tag == BlockTag::Template) {
      if (have_template) throw Error(ErrorCode::InvalidDataset, "more than one template block");
      ds.template_graph = std::move(b.graph);
      have_template = true;
      continue;
    }
    Example e;
    e.graph_id = static_cast<int>(ds.examples.size());
    e.cls = b.tag == BlockTag::Positive ? ExampleClass::Positive : ExampleClass::Negative;
    e.graph = std::move(b.graph);
    ds.examples.push_back(std::move(e));
  }
  if (!have_template) throw Error(ErrorCode::InvalidDataset, "no template block");
  return ds;
}

std::string write_dataset(const Dataset& ds) {
  std::vector<GraphBlock> blocks;
  blocks.reserve(ds.examples.size() + 1);
  for (const Example& e : ds.examples) {
    blocks.push_back({e.graph_id,
                      e.cls == ExampleClass::Positive ? BlockTag::Positive : BlockTag::Negative,
                      e.graph});
  }
  blocks.push_back({static_cast<int>(ds.examples.size()), BlockTag::Template, ds.template_graph});
  return write_graphs(blocks);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, fmt::format("cannot open '{}'", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, fmt::format("cannot read '{}'", path.string()));
  return ss.str();
}

Dataset load_dataset(const std::filesystem::path& examples,
                     const std::optional<std::filesystem::path>& template_file) {
  std::vector<GraphBlock> blocks = parse_graphs(read_text_file(examples));
  std::optional<GraphBlock> tmpl;
  if (template_file) {
    std::vector<GraphBlock> t = parse_graphs(read_text_file(*template_file));
    if (t.size() != 1) {
      throw Error(ErrorCode::InvalidDataset,
                  fmt::format("template file '{}' must hold exactly one block",
                              template_file->string()));
    }
    tmpl = std::move(t.front());
  }
  return assemble_dataset(std::move(blocks), std::move(tmpl));
}

std::string write_patterns(std::span<const MineResult> results) {
  std::string out;
  if (results.empty()) return out;
  const bool undirected = std::all_of(results.begin(), results.end(), [](const MineResult& r) {
    return r.pattern.undirected_input();
  });
  out += undirected ? "mode undirected\n" : "mode directed\n";
  for (const MineResult& r : results) {
    out += fmt::format("p # {} size={} pos={} neg={} time_ms={:.3f}\n", r.index,
                       r.pattern.vertex_count(), r.positive_covered, r.negative_covered,
                       r.elapsed_ms);
    for (VertexId v = 0; v < r.pattern.vertex_count(); ++v) {
      out += fmt::format("v {} {}\n", r.subset[v], r.pattern.label(v).symbol());
    }
    append_edges(out, r.pattern, r.subset, undirected);
    out += '\n';
  }
  return out;
}

std::vector<PatternBlock> parse_patterns(std::string_view text) {
  const RawFile file = scan(text, 'p');
  std::vector<PatternBlock> out;
  for (const RawBlock& raw : file.blocks) {
    if (raw.header.empty()) {
      throw ParseError(ErrorCode::SyntaxError, raw.line, "expected 'p # <index> ...'");
    }
    PatternBlock p;
    p.line = raw.line;
    p.index = parse_int<std::size_t>(raw.header[0], raw.line, "a pattern index");
    p.undirected = *file.undirected;
    std::set<VertexId> seen;
    for (const VertexLine& v : raw.vertices) {
      if (!seen.insert(v.id).second) {
        throw ParseError(ErrorCode::SyntaxError, v.line,
                         fmt::format("vertex {} listed twice", v.id));
      }
      p.vertices.push_back(v.id);
      p.labels.emplace_back(v.label);
    }
    std::set<Edge> edges;
    for (const EdgeLine& e : raw.edges) {
      if (!seen.contains(e.from) || !seen.contains(e.to)) {
        throw ParseError(ErrorCode::SyntaxError, e.line,
                         fmt::format("edge ({}, {}) uses an unlisted vertex", e.from, e.to));
      }
      edges.insert({e.from, e.to});
      if (p.undirected) edges.insert({e.to, e.from});
    }
    p.edges.assign(edges.begin(), edges.end());
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string write_bench_csv(std::span<const BenchRecord> records) {
  std::string out = "strategy,index,elapsed_ms,dataset,seed\n";
  for (const BenchRecord& r : records) {
    out += fmt::format("{},{},{:.6f},{},{}\n", to_string(r.strategy), r.pattern_index, r.elapsed_ms,
                       csv_field(r.dataset_tag), r.seed);
  }
  return out;
}

}  // namespace patmine
