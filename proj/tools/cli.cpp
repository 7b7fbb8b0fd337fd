#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "patmine/bench.hpp"
#include "patmine/coverage.hpp"
#include "patmine/dataio.hpp"
#include "patmine/encoder.hpp"
#include "patmine/error.hpp"
#include "patmine/miner.hpp"
#include "patmine/morphism.hpp"
#include "patmine/synth.hpp"

namespace patmine::cli {
namespace {

/// Configuration or usage problem; reported with the subcommand's help text.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DatasetFlags {
  std::string examples;
  std::string template_file;
  std::string preset;
  std::uint64_t seed = 0;
  CLI::Option* seed_opt = nullptr;
  std::size_t graphs = 0;
  CLI::Option* graphs_opt = nullptr;
};

struct ThresholdFlags {
  std::size_t npos = 0;
  CLI::Option* npos_opt = nullptr;
  double npos_frac = 0.0;
  CLI::Option* npos_frac_opt = nullptr;
  std::size_t nneg = 0;
  CLI::Option* nneg_opt = nullptr;
};

struct MiningFlags {
  std::size_t min_size = 2;
  std::size_t max_size = 0;
  CLI::Option* max_size_opt = nullptr;
  std::size_t max_patterns = 0;
  CLI::Option* max_patterns_opt = nullptr;
  std::size_t jobs = std::max(1U, std::thread::hardware_concurrency());
};

struct LoadedDataset {
  Dataset ds;
  std::string tag;
  std::uint64_t seed = 0;
};

void add_dataset_flags(CLI::App* cmd, DatasetFlags& f) {
  cmd->add_option("--examples", f.examples, "graph file with example (and optionally template) blocks");
  cmd->add_option("--template", f.template_file, "graph file holding the template block");
  cmd->add_option("--preset,--synth", f.preset, "built-in dataset: toy, yoshida, yoshida-small");
  f.seed_opt = cmd->add_option("--seed", f.seed, "seed for synthetic presets (PATMINE_SEED overrides)");
  f.graphs_opt = cmd->add_option("--graphs", f.graphs, "number of graphs for synthetic presets");
}

void add_threshold_flags(CLI::App* cmd, ThresholdFlags& f) {
  f.npos_opt = cmd->add_option("--npos", f.npos, "minimum number of covered positives");
  f.npos_frac_opt = cmd->add_option("--npos-frac", f.npos_frac,
                                    "minimum covered positives as a fraction, rounded up")
                        ->check(CLI::Range(0.0, 1.0));
  f.npos_opt->excludes(f.npos_frac_opt);
  f.nneg_opt = cmd->add_option("--nneg", f.nneg, "maximum number of covered negatives");
}

void add_mining_flags(CLI::App* cmd, MiningFlags& f) {
  cmd->add_option("--min-size", f.min_size, "smallest pattern size in vertices")->check(CLI::PositiveNumber);
  f.max_size_opt = cmd->add_option("--max-size", f.max_size, "largest pattern size in vertices");
  f.max_patterns_opt = cmd->add_option("--max-patterns", f.max_patterns, "stop after this many patterns");
  cmd->add_option("--jobs", f.jobs, "worker threads for decomposed coverage")->check(CLI::PositiveNumber);
}

std::optional<std::uint64_t> env_seed() {
  const char* raw = std::getenv("PATMINE_SEED");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used);
    if (used != std::string_view(raw).size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw UsageError(fmt::format("PATMINE_SEED is not an unsigned integer: '{}'", raw));
  }
}

std::optional<std::uint64_t> effective_seed(const DatasetFlags& f) {
  if (auto s = env_seed()) return s;
  if (f.seed_opt->count()) return f.seed;
  return std::nullopt;
}

SynthParams synth_params(const std::string& name, const DatasetFlags& f) {
  std::optional<SynthParams> p = synth_preset(name);
  if (!p) throw UsageError(fmt::format("unknown synthetic preset '{}'", name));
  if (auto s = effective_seed(f)) p->seed = *s;
  if (f.graphs_opt->count()) p->n_graphs = f.graphs;
  return *p;
}

LoadedDataset load(const DatasetFlags& f) {
  LoadedDataset out;
  if (!f.examples.empty()) {
    if (!f.preset.empty()) throw UsageError("--examples and --preset are mutually exclusive");
    std::optional<std::filesystem::path> tmpl;
    if (!f.template_file.empty()) tmpl = f.template_file;
    out.ds = load_dataset(f.examples, tmpl);
    out.ds.n_pos_threshold = default_positive_threshold(out.ds.count(ExampleClass::Positive));
    out.tag = std::filesystem::path(f.examples).stem().string();
  } else if (f.preset == "toy") {
    out.ds = toy_dataset();
    out.tag = "toy";
  } else if (!f.preset.empty()) {
    const SynthParams p = synth_params(f.preset, f);
    out.ds = gen_synthetic(p);
    out.tag = f.preset;
    out.seed = p.seed;
  } else {
    throw UsageError("missing --examples (or --preset)");
  }
  return out;
}

void apply_thresholds(const ThresholdFlags& f, Dataset& ds) {
  if (f.npos_opt->count()) {
    ds.n_pos_threshold = f.npos;
  } else if (f.npos_frac_opt->count()) {
    const double want = f.npos_frac * static_cast<double>(ds.count(ExampleClass::Positive));
    ds.n_pos_threshold = static_cast<std::size_t>(std::ceil(want - 1e-9));
  }
  if (f.nneg_opt->count()) ds.n_neg_threshold = f.nneg;
}

MiningConfig mining_config(const MiningFlags& f, const Dataset& ds, Strategy strategy) {
  MiningConfig cfg;
  cfg.n_pos_threshold = ds.n_pos_threshold;
  cfg.n_neg_threshold = ds.n_neg_threshold;
  cfg.min_pattern_size = f.min_size;
  if (f.max_size_opt->count()) cfg.max_pattern_size = f.max_size;
  if (f.max_patterns_opt->count()) cfg.max_patterns = f.max_patterns;
  cfg.strategy = strategy;
  cfg.jobs = f.jobs;
  cfg.validate();
  return cfg;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::IoError, fmt::format("cannot open '{}' for writing", path));
  file << text;
  if (!file) throw Error(ErrorCode::IoError, fmt::format("cannot write '{}'", path));
}

std::string dataset_summary(const LoadedDataset& d) {
  std::size_t labels = 0;
  {
    std::vector<std::string_view> names;
    auto add = [&](const LabeledGraph& g) {
      for (const Label& l : g.labels()) names.push_back(l.symbol());
    };
    add(d.ds.template_graph);
    for (const Example& e : d.ds.examples) add(e.graph);
    std::sort(names.begin(), names.end());
    labels = static_cast<std::size_t>(std::unique(names.begin(), names.end()) - names.begin());
  }
  return fmt::format(
      "dataset: {}: {} examples ({} positive, {} negative), template {} vertices / {} edges, "
      "{} labels",
      d.tag, d.ds.examples.size(), d.ds.count(ExampleClass::Positive),
      d.ds.count(ExampleClass::Negative), d.ds.template_graph.vertex_count(),
      d.ds.template_graph.edge_count(), labels);
}

std::string config_summary(const MiningConfig& c) {
  return fmt::format("config: strategy={} npos={} nneg={} sizes={}..{} max_patterns={} jobs={}",
                     to_string(c.strategy), c.n_pos_threshold, c.n_neg_threshold,
                     c.min_pattern_size,
                     c.max_pattern_size ? std::to_string(*c.max_pattern_size) : "template",
                     c.max_patterns ? std::to_string(*c.max_patterns) : "unlimited", c.jobs);
}

/// Empty when every result satisfies its invariants, otherwise the first violation.
std::string verify_results(const std::vector<MineResult>& results, const Dataset& ds,
                           const MiningConfig& cfg) {
  for (std::size_t i = 0; i < results.size(); ++i) {
    const MineResult& r = results[i];
    if (!is_connected(r.pattern)) return fmt::format("pattern {} is not connected", r.index);
    if (!(induced_subgraph(ds.template_graph, r.subset).graph == r.pattern)) {
      return fmt::format("pattern {} is not the induced subgraph of its vertices", r.index);
    }
    if (r.positive_covered < cfg.n_pos_threshold || r.negative_covered > cfg.n_neg_threshold) {
      return fmt::format("pattern {} violates the coverage thresholds", r.index);
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (is_isomorphic(results[j].pattern, r.pattern)) {
        return fmt::format("patterns {} and {} are isomorphic", results[j].index, r.index);
      }
    }
  }
  return {};
}

std::string join_ids(std::span<const VertexId> ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i]);
  return s;
}

// ---------------------------------------------------------------- mine

struct MineCommand {
  DatasetFlags data;
  ThresholdFlags thresholds;
  MiningFlags mining;
  std::string strategy = "decomposed";
  std::string out_file;
  std::string csv_file;
};

int run_mine(const MineCommand& c, std::ostream& out, std::ostream& err) {
  LoadedDataset d = load(c.data);
  apply_thresholds(c.thresholds, d.ds);
  const auto strategy = parse_strategy(c.strategy);
  if (!strategy) throw UsageError(fmt::format("unknown strategy '{}'", c.strategy));
  const MiningConfig cfg = mining_config(c.mining, d.ds, *strategy);

  out << dataset_summary(d) << '\n' << config_summary(cfg) << '\n';
  const auto start = std::chrono::steady_clock::now();
  const std::vector<MineResult> results = mine(d.ds, cfg);
  const double total_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  for (const MineResult& r : results) {
    fmt::print(out, "pattern {}: size={} pos={} neg={} time_ms={:.3f} vertices=[{}]\n", r.index,
               r.pattern.vertex_count(), r.positive_covered, r.negative_covered, r.elapsed_ms,
               join_ids(r.subset));
  }
  fmt::print(out, "total: {} patterns in {:.3f} ms\n", results.size(), total_ms);

  if (const std::string bad = verify_results(results, d.ds, cfg); !bad.empty()) {
    err << "internal error: " << bad << '\n';
    return kExitInternal;
  }
  if (!c.out_file.empty()) write_file(c.out_file, write_patterns(results));
  if (!c.csv_file.empty()) {
    std::vector<BenchRecord> rows;
    for (const MineResult& r : results) {
      rows.push_back({cfg.strategy, r.index, r.elapsed_ms, d.tag, d.seed});
    }
    write_file(c.csv_file, write_bench_csv(rows));
  }
  return kExitOk;
}

// ---------------------------------------------------------------- check

struct CheckCommand {
  DatasetFlags data;
  ThresholdFlags thresholds;
  std::string pattern_file;
};

/// Builds the dense pattern graph or explains why the block is not an
/// induced subgraph of the template.
std::optional<std::string> induced_mismatch(const PatternBlock& p, const LabeledGraph& tmpl) {
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const VertexId v = p.vertices[i];
    if (v >= tmpl.vertex_count()) {
      return fmt::format("not induced: vertex {} is not in the template", v);
    }
    if (tmpl.label(v) != p.labels[i]) {
      return fmt::format("not induced: vertex {} has label {} in the template, {} in the pattern",
                         v, tmpl.label(v).symbol(), p.labels[i].symbol());
    }
  }
  for (const Edge& e : p.edges) {
    if (!tmpl.has_edge(e.from, e.to)) {
      return fmt::format("not induced: edge ({}, {}) is absent from the template", e.from, e.to);
    }
  }
  for (VertexId u : p.vertices) {
    for (VertexId v : p.vertices) {
      if (tmpl.has_edge(u, v) && !std::binary_search(p.edges.begin(), p.edges.end(), Edge{u, v})) {
        return fmt::format("not induced: template edge ({}, {}) is missing", u, v);
      }
    }
  }
  return std::nullopt;
}

int run_check(const CheckCommand& c, std::ostream& out, std::ostream& err) {
  LoadedDataset d;
  std::vector<PatternBlock> patterns;
  try {
    d = load(c.data);
    patterns = parse_patterns(read_text_file(c.pattern_file));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  apply_thresholds(c.thresholds, d.ds);
  const Dataset& ds = d.ds;
  if (patterns.empty()) {
    err << "error: no pattern blocks in '" << c.pattern_file << "'\n";
    return kExitFailure;
  }

  bool all_valid = true;
  for (const PatternBlock& p : patterns) {
    std::string reason;
    if (auto mismatch = induced_mismatch(p, ds.template_graph)) {
      reason = *mismatch;
    } else {
      const InducedSubgraph sub = induced_subgraph(ds.template_graph, p.vertices);
      if (!is_connected(sub.graph)) {
        reason = "not connected";
      } else {
        const MatchPlan plan(sub.graph);
        const CoverageReport pos = coverage(plan, ds, ExampleClass::Positive, CoverageMode::full());
        const CoverageReport neg = coverage(plan, ds, ExampleClass::Negative, CoverageMode::full());
        for (const CoverageReport* r : {&pos, &neg}) {
          for (const ExampleVerdict& v : r->per_example) {
            fmt::print(out, "  pattern {} example {} ({}): {}\n", p.index, v.graph_id,
                       to_string(ds.examples[static_cast<std::size_t>(v.graph_id)].cls),
                       v.presence == Presence::Present ? "homomorphism" : "no homomorphism");
          }
        }
        if (pos.positive_covered < ds.n_pos_threshold) {
          reason = fmt::format("positive coverage {} < {}", pos.positive_covered, ds.n_pos_threshold);
        } else if (neg.negative_covered > ds.n_neg_threshold) {
          reason = fmt::format("negative coverage {} > {}", neg.negative_covered, ds.n_neg_threshold);
        }
      }
    }
    if (reason.empty()) {
      fmt::print(out, "pattern {}: valid\n", p.index);
    } else {
      fmt::print(out, "pattern {}: invalid: {}\n", p.index, reason);
      all_valid = false;
    }
  }
  return all_valid ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------- bench

struct BenchCommand {
  DatasetFlags data;
  ThresholdFlags thresholds;
  MiningFlags mining;
  std::string strategies = "both";
  std::size_t repeats = 10;
  std::string csv_file;
};

int run_bench(const BenchCommand& c, std::ostream& out, std::ostream& err) {
  LoadedDataset d = load(c.data);
  apply_thresholds(c.thresholds, d.ds);
  std::vector<Strategy> strategies;
  if (c.strategies == "both") {
    strategies = {Strategy::Decomposed, Strategy::Monolithic};
  } else if (auto s = parse_strategy(c.strategies)) {
    strategies = {*s};
  } else {
    throw UsageError(fmt::format("unknown --strategies value '{}'", c.strategies));
  }
  const MiningConfig cfg = mining_config(c.mining, d.ds, strategies.front());
  out << dataset_summary(d) << '\n' << config_summary(cfg) << '\n';

  const BenchSummary summary = run_strategy_bench(d.ds, cfg, strategies, c.repeats, d.tag, d.seed);
  for (const StrategyRuns& runs : summary.runs) {
    std::map<std::size_t, std::vector<double>> per_index;
    for (const auto& repeat : runs.repeats) {
      for (const MineResult& r : repeat) per_index[r.index].push_back(r.elapsed_ms);
    }
    const std::size_t found = runs.repeats.empty() ? 0 : runs.repeats.front().size();
    fmt::print(out, "{}: {} patterns per run, {} runs\n", to_string(runs.strategy), found,
               runs.repeats.size());
    for (const auto& [index, times] : per_index) {
      fmt::print(out, "  index {}: median {:.3f} ms\n", index, median(times));
    }
  }

  int status = kExitOk;
  if (summary.runs.size() == 2 && c.repeats > 0) {
    const auto& a = summary.runs[0].repeats.front();
    const auto& b = summary.runs[1].repeats.front();
    const bool agree = same_isomorphism_classes(a, b);
    fmt::print(out, "strategy agreement: {}\n", agree ? "identical isomorphism classes" : "MISMATCH");
    if (!agree) {
      err << "internal error: strategies disagree on the mined pattern classes\n";
      status = kExitInternal;
    }
    const std::size_t k = std::min(a.size(), b.size());
    const double dec = median_pattern_ms(summary.runs[0], k);
    const double mono = median_pattern_ms(summary.runs[1], k);
    if (dec > 0.0) {
      fmt::print(out, "speedup (monolithic / decomposed median per-pattern time): {:.2f}x\n",
                 mono / dec);
    }
  }
  if (!c.csv_file.empty()) write_file(c.csv_file, write_bench_csv(summary.records));
  return status;
}

// ---------------------------------------------------------------- encode

struct EncodeCommand {
  DatasetFlags data;
  ThresholdFlags thresholds;
  std::string target;
  std::string out_file;
};

int run_encode(const EncodeCommand& c, std::ostream& out, std::ostream&) {
  if (c.target != "asp" && c.target != "idp") {
    throw UsageError(fmt::format("unknown --target '{}' (expected asp or idp)", c.target));
  }
  LoadedDataset d = load(c.data);
  apply_thresholds(c.thresholds, d.ds);
  const EncodingText text = c.target == "asp" ? emit_asp(d.ds) : emit_idp(d.ds);
  if (c.out_file.empty()) {
    out << text.str();
  } else {
    write_file(c.out_file, text.str());
  }
  return kExitOk;
}

// ---------------------------------------------------------------- gen

struct GenCommand {
  DatasetFlags data;
  std::vector<std::size_t> vertex_range;
  std::size_t avg_edges = 0;
  CLI::Option* avg_edges_opt = nullptr;
  std::size_t labels = 0;
  CLI::Option* labels_opt = nullptr;
  double pos_frac = 1.0;
  CLI::Option* pos_frac_opt = nullptr;
  std::string out_file;
};

int run_gen(const GenCommand& c, std::ostream& out, std::ostream&) {
  SynthParams p = synth_params(c.data.preset.empty() ? "yoshida" : c.data.preset, c.data);
  if (!c.vertex_range.empty()) {
    p.min_vertices = c.vertex_range[0];
    p.max_vertices = c.vertex_range[1];
  }
  if (c.avg_edges_opt->count()) p.target_avg_edges = c.avg_edges;
  if (c.labels_opt->count()) p.n_labels = c.labels;
  if (c.pos_frac_opt->count()) p.positive_fraction = c.pos_frac;
  const std::string text = write_dataset(gen_synthetic(p));
  if (c.out_file.empty()) {
    out << text;
  } else {
    write_file(c.out_file, text);
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frequent connected subgraph mining over a template graph"};
  app.name("patmine");
  app.require_subcommand(1);

  MineCommand mine_cmd;
  CLI::App* mine = app.add_subcommand("mine", "mine canonical patterns");
  add_dataset_flags(mine, mine_cmd.data);
  add_threshold_flags(mine, mine_cmd.thresholds);
  add_mining_flags(mine, mine_cmd.mining);
  mine->add_option("--strategy", mine_cmd.strategy, "decomposed or monolithic");
  mine->add_option("--out", mine_cmd.out_file, "pattern file to write");
  mine->add_option("--csv", mine_cmd.csv_file, "per-pattern timing CSV to write");

  CheckCommand check_cmd;
  CLI::App* check = app.add_subcommand("check", "re-verify patterns against a dataset");
  check->add_option("--pattern", check_cmd.pattern_file, "pattern file")->required();
  add_dataset_flags(check, check_cmd.data);
  add_threshold_flags(check, check_cmd.thresholds);

  BenchCommand bench_cmd;
  CLI::App* bench = app.add_subcommand("bench", "compare the two coverage strategies");
  add_dataset_flags(bench, bench_cmd.data);
  add_threshold_flags(bench, bench_cmd.thresholds);
  add_mining_flags(bench, bench_cmd.mining);
  bench->add_option("--strategies", bench_cmd.strategies, "both, decomposed or monolithic");
  bench->add_option("--repeats", bench_cmd.repeats, "mining runs per strategy");
  bench->add_option("--csv", bench_cmd.csv_file, "timing CSV to write");

  EncodeCommand encode_cmd;
  CLI::App* encode = app.add_subcommand("encode", "emit an ASP or IDP encoding of the instance");
  add_dataset_flags(encode, encode_cmd.data);
  add_threshold_flags(encode, encode_cmd.thresholds);
  encode->add_option("--target", encode_cmd.target, "asp or idp")->required();
  encode->add_option("--out", encode_cmd.out_file, "output file (default: standard output)");

  GenCommand gen_cmd;
  CLI::App* gen = app.add_subcommand("gen", "write a synthetic dataset");
  gen->add_option("--preset", gen_cmd.data.preset, "yoshida or yoshida-small");
  gen_cmd.data.seed_opt = gen->add_option("--seed", gen_cmd.data.seed, "generator seed");
  gen_cmd.data.graphs_opt = gen->add_option("--graphs", gen_cmd.data.graphs, "number of example graphs");
  gen->add_option("--vertex-range", gen_cmd.vertex_range, "inclusive vertex count range")
      ->expected(2);
  gen_cmd.avg_edges_opt = gen->add_option("--avg-edges", gen_cmd.avg_edges, "target mean edge count");
  gen_cmd.labels_opt = gen->add_option("--labels", gen_cmd.labels, "label alphabet size");
  gen_cmd.pos_frac_opt = gen->add_option("--pos-frac", gen_cmd.pos_frac, "fraction of positives");
  gen->add_option("--out", gen_cmd.out_file, "output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitFailure;
  }

  CLI::App* active = app.get_subcommands().front();
  try {
    if (active == mine) return run_mine(mine_cmd, out, err);
    if (active == check) return run_check(check_cmd, out, err);
    if (active == bench) return run_bench(bench_cmd, out, err);
    if (active == encode) return run_encode(encode_cmd, out, err);
    return run_gen(gen_cmd, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << active->help();
    return kExitFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace patmine::cli
