#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include "patmine/encoder.hpp"
#include "patmine/error.hpp"
#include "patmine/synth.hpp"

namespace patmine {
namespace {

const std::string kGoldenDir = PATMINE_GOLDEN_DIR;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Set PATMINE_UPDATE_GOLDEN=1 to rewrite the golden files after an intended change.
void expect_golden(const std::string& name, const std::string& actual) {
  const std::string path = kGoldenDir + "/" + name;
  if (std::getenv("PATMINE_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(path, std::ios::binary) << actual;
    return;
  }
  const std::string expected = read_file(path);
  ASSERT_FALSE(expected.empty()) << "missing golden file " << path;
  EXPECT_EQ(actual, expected) << "golden mismatch for " << name;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

Dataset mixed_dataset() {
  SynthParams p;
  p.n_graphs = 6;
  p.min_vertices = 3;
  p.max_vertices = 6;
  p.target_avg_edges = 5;
  p.n_labels = 3;
  p.positive_fraction = 0.5;
  p.seed = 21;
  return gen_synthetic(p);
}

TEST(EncoderTest, AspMatchesGolden) { expect_golden("toy.lp", emit_asp(toy_dataset()).str()); }

TEST(EncoderTest, IdpMatchesGolden) { expect_golden("toy.idp", emit_idp(toy_dataset()).str()); }

TEST(EncoderTest, OutputIsDeterministic) {
  const Dataset ds = mixed_dataset();
  EXPECT_EQ(emit_asp(ds).str(), emit_asp(ds).str());
  EXPECT_EQ(emit_idp(ds).str(), emit_idp(ds).str());
  EXPECT_EQ(emit_asp(ds).str(), emit_asp(mixed_dataset()).str());
}

TEST(EncoderTest, HeaderIsCommentOnly) {
  for (const std::string& line : lines_of(emit_asp(toy_dataset()).header)) {
    EXPECT_EQ(line.rfind("% ", 0), 0U) << line;
  }
  for (const std::string& line : lines_of(emit_idp(toy_dataset()).header)) {
    EXPECT_EQ(line.rfind("// ", 0), 0U) << line;
  }
  EXPECT_NE(emit_asp(toy_dataset()).header.find(kGeneratorVersion), std::string::npos);
}

TEST(EncoderTest, AspFactsMatchDatasetOneToOne) {
  const Dataset ds = mixed_dataset();
  const std::string text = emit_asp(ds).str();
  const std::regex edge_re(R"(^edge\((\d+),v(\d+),v(\d+)\)\.$)");
  const std::regex label_re(R"(^label\((\d+),v(\d+),(\S+)\)\.$)");
  const std::regex t_edge_re(R"(^t_edge\(x(\d+),x(\d+)\)\.$)");
  std::multiset<std::tuple<int, VertexId, VertexId>> edges;
  std::multiset<std::tuple<int, VertexId, std::string>> labels;
  std::multiset<std::pair<VertexId, VertexId>> t_edges;
  for (const std::string& line : lines_of(text)) {
    std::smatch m;
    if (std::regex_match(line, m, edge_re)) {
      edges.insert({std::stoi(m[1]), static_cast<VertexId>(std::stoul(m[2])),
                    static_cast<VertexId>(std::stoul(m[3]))});
    } else if (std::regex_match(line, m, label_re)) {
      labels.insert({std::stoi(m[1]), static_cast<VertexId>(std::stoul(m[2])), m[3]});
    } else if (std::regex_match(line, m, t_edge_re)) {
      t_edges.insert({static_cast<VertexId>(std::stoul(m[1])), static_cast<VertexId>(std::stoul(m[2]))});
    }
  }
  std::multiset<std::tuple<int, VertexId, VertexId>> want_edges;
  std::multiset<std::tuple<int, VertexId, std::string>> want_labels;
  for (const Example& e : ds.examples) {
    for (const Edge& edge : e.graph.edges()) want_edges.insert({e.graph_id, edge.from, edge.to});
    for (VertexId v = 0; v < e.graph.vertex_count(); ++v) {
      want_labels.insert({e.graph_id, v, std::string(e.graph.label(v).symbol())});
    }
  }
  std::multiset<std::pair<VertexId, VertexId>> want_t_edges;
  for (const Edge& edge : ds.template_graph.edges()) want_t_edges.insert({edge.from, edge.to});
  EXPECT_EQ(edges, want_edges);
  EXPECT_EQ(labels, want_labels);
  EXPECT_EQ(t_edges, want_t_edges);
}

TEST(EncoderTest, SaturationDisjunctionListsEveryNegativeVertex) {
  const Dataset ds = mixed_dataset();
  ASSERT_GT(ds.count(ExampleClass::Negative), 0U);
  const std::string text = emit_asp(ds).str();
  for (const Example& e : ds.examples) {
    const std::string head = "map(" + std::to_string(e.graph_id) + ",X,";
    std::size_t rules = 0;
    for (const std::string& line : lines_of(text)) {
      if (line.rfind(head, 0) != 0) continue;
      ++rules;
      std::size_t width = 0;
      for (std::size_t at = line.find(head); at != std::string::npos; at = line.find(head, at + 1)) {
        ++width;
      }
      EXPECT_EQ(width, e.graph.vertex_count()) << line;
    }
    EXPECT_EQ(rules, e.cls == ExampleClass::Negative ? 1U : 0U) << "graph " << e.graph_id;
  }
}

TEST(EncoderTest, ThresholdsAreSubstituted) {
  Dataset ds = toy_dataset();
  ds.n_pos_threshold = 13;
  ds.n_neg_threshold = 2;
  const std::string asp = emit_asp(ds).str();
  EXPECT_NE(asp.find(":- positive_count(N), N < 13."), std::string::npos);
  EXPECT_NE(asp.find(":- negative_count(N), N > 2."), std::string::npos);
  EXPECT_NE(emit_idp(ds).str().find("  threshold = 13\n"), std::string::npos);
}

TEST(EncoderTest, NoNegativesDropsSaturation) {
  Dataset ds = toy_dataset();
  ds.examples.pop_back();
  const std::string asp = emit_asp(ds).str();
  EXPECT_EQ(asp.find("map("), std::string::npos);
  EXPECT_EQ(asp.find(":- negative_count"), std::string::npos);
  EXPECT_NE(asp.find("% no negative examples"), std::string::npos);
}

TEST(EncoderTest, IdenticalExamplesDifferOnlyInGraphId) {
  Dataset ds = toy_dataset();
  ds.examples = {ds.examples[1], ds.examples[1]};
  ds.examples[0].graph_id = 0;
  ds.examples[1].graph_id = 1;
  const std::string asp = emit_asp(ds).str();
  auto rename = [](std::string line, const std::string& from, const std::string& to) {
    for (const std::string suffix : {",", ")"}) {
      for (std::size_t at = line.find(from + suffix); at != std::string::npos;
           at = line.find(from + suffix, at)) {
        line.replace(at, from.size(), to);
      }
    }
    return line;
  };
  std::vector<std::string> first;
  std::vector<std::string> second;
  for (const std::string& line : lines_of(asp)) {
    if (rename(line, "(0", "(#") != line) first.push_back(rename(line, "(0", "(#"));
    if (rename(line, "(1", "(#") != line) second.push_back(rename(line, "(1", "(#"));
  }
  ASSERT_FALSE(first.empty());
  EXPECT_EQ(first, second);
}

TEST(EncoderTest, TemplateOnlyIdpInstance) {
  Dataset ds = toy_dataset();
  ds.examples.clear();
  ds.n_pos_threshold = 0;
  const std::string idp = emit_idp(ds).str();
  EXPECT_NE(idp.find("  example_edge = {}\n"), std::string::npos);
  EXPECT_NE(idp.find("  threshold = 0\n"), std::string::npos);
  EXPECT_NE(idp.find("  label = {a}\n"), std::string::npos);
}

TEST(EncoderTest, EmptyTemplateIsRejected) {
  Dataset ds = toy_dataset();
  ds.template_graph = LabeledGraph{};
  for (auto emit : {&emit_asp, &emit_idp}) {
    try {
      emit(ds);
      FAIL() << "expected EmptyDataset";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::EmptyDataset);
    }
  }
}

TEST(EncoderTest, QuotesLabelsThatAreNotPlainConstants) {
  Dataset ds = toy_dataset();
  std::vector<Label> labels(4, Label("Cl+"));
  const std::vector<Edge> edges = {{0, 1}};
  ds.examples[1].graph = build_graph(4, edges, labels, true);
  const std::string asp = emit_asp(ds).str();
  EXPECT_NE(asp.find("label(1,v0,\"Cl+\")."), std::string::npos);
}

}  // namespace
}  // namespace patmine
