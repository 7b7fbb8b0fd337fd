#include "patmine/encoder.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "patmine/error.hpp"

namespace patmine {
namespace {

bool plain_constant(std::string_view s) {
  if (s.empty() || s.front() < 'a' || s.front() > 'z') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

/// Lower-case identifiers are emitted bare, anything else as a quoted string.
std::string constant(std::string_view symbol) {
  if (plain_constant(symbol)) return std::string(symbol);
  std::string out = "\"";
  for (char c : symbol) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> label_universe(const Dataset& ds) {
  std::set<std::string> names;
  auto collect = [&](const LabeledGraph& g) {
    for (const Label& l : g.labels()) names.insert(std::string(l.symbol()));
  };
  collect(ds.template_graph);
  for (const Example& e : ds.examples) collect(e.graph);
  return {names.begin(), names.end()};
}

std::string summary(const Dataset& ds) {
  return fmt::format(
      "instance: template {} vertices / {} edges, {} examples ({} positive, {} negative), "
      "{} labels",
      ds.template_graph.vertex_count(), ds.template_graph.edge_count(), ds.examples.size(),
      ds.count(ExampleClass::Positive), ds.count(ExampleClass::Negative),
      label_universe(ds).size());
}

bool all_undirected(const Dataset& ds) {
  return ds.template_graph.undirected_input() &&
         std::all_of(ds.examples.begin(), ds.examples.end(),
                     [](const Example& e) { return e.graph.undirected_input(); });
}

void require_nonempty(const Dataset& ds) {
  if (ds.template_graph.empty()) {
    throw Error(ErrorCode::EmptyDataset, "cannot encode a dataset with an empty template");
  }
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

constexpr std::string_view kAspPositive = R"(% --- positive matching
0 { homowith(G) } 1 :- positive(G).
1 { f(G,X,V) : node(G,V) } 1 :- positive(G), invar(X).
:- used_f(G,X,V1), used_f(G,Y,V2), t_edge(X,Y), not edge(G,V1,V2), invar(X), invar(Y).
:- used_f(G,X,V), t_label(X,L), not label(G,V,L), invar(X).
used_f(G,X,V) :- homowith(G), f(G,X,V).
:- used_f(G,X,V), used_f(G,Y,V), X != Y.
positive_count(N) :- N = #count{G:homowith(G)}.
)";

constexpr std::string_view kAspSaturation = R"(map(G,X,V) :- saturated(G), t_node(X), node(G,V).
saturated(G) :- t_edge(X,Y), map(G,X,V1), map(G,Y,V2), not edge(G,V1,V2), negative(G), invar(X), invar(Y).
saturated(G) :- map(G,X,V), map(G,Y,V), X != Y, invar(X), invar(Y).
saturated(G) :- map(G,X,V), t_label(X,L), not label(G,V,L), negative(G), invar(X).
neg_homowith(G) :- not saturated(G), negative(G).
negative_count(N) :- N = #count{G:neg_homowith(G)}.
)";

constexpr std::string_view kAspCanonicity = R"(candidate_var(X) :- iso(_,X).
iso_saturated :- invar(X1), invar(X2), iso(X1,V1), iso(X2,V2), t_edge(V1,V2), not t_edge(X1,X2).
iso_saturated :- invar(X1), invar(X2), iso(X1,V1), iso(X2,V2), not t_edge(V1,V2), t_edge(X1,X2).
iso(X,V) :- invar(X), t_node(V), iso_saturated.
d1(X) :- invar(X), not candidate_var(X).
d2(X) :- not invar(X), candidate_var(X).
not_equal :- d1(X).
not_equal :- d2(X).
iso_saturated :- not not_equal.
min_d1(N) :- N = #min{ X: d1(X) }, not iso_saturated.
min_d2(N) :- N = #min{ X: d2(X) }, not iso_saturated.
iso_saturated :- min_d1(N1), min_d2(N2), N1 > N2.
)";

constexpr std::string_view kAspAuxiliary = R"(% --- auxiliary
t_path(X,Y) :- t_edge(X,Y), invar(X), invar(Y).
t_path(X,Y) :- t_edge(X,Z), t_path(Z,Y), invar(X).
:- invar(X), invar(Y), X != Y, not t_path(X,Y).
0 { invar(X) } 1 :- t_node(X).
node(G,Y) :- edge(G,Y,_).
t_node(X) :- t_edge(X,_).
node(G,V) :- label(G,V,_).
t_node(X) :- t_label(X,_).
)";

constexpr std::string_view kIdpVocabulary = R"(vocabulary V{
  type node isa nat
  type graphid
  type label

  // Template graph.
  template_edge(node, node)
  template_label(node):label

  // Example graphs.
  example_edge(graphid, node, node)
  example_label(graphid, node):label
  positive(graphid)
  threshold: int

  // Pattern.
  inpattern(node)
  partial f(graphid, node):node
  homowith(graphid)
  path(node, node)
}

)";

constexpr std::string_view kIdpTheory = R"(theory Positive:V{
  // Every pair of pattern nodes is connected inside the pattern.
  !x,y[node] : x ~= y & inpattern(x) & inpattern(y) => path(x,y).
  {
    path(x,y) <- template_edge(x,y) & inpattern(x) & inpattern(y).
    path(x,y) <- ?z[node] : path(x,z) & path(z,y).
    path(x,y) <- path(y,x).
  }

  // f(gid, .) is a homomorphism from the pattern into example gid.
  !gid[graphid] : !x[node] : homowith(gid) & inpattern(x) <=> ?y[node] : y = f(gid,x).
  !gid[graphid] : !x,y[node] : homowith(gid) & inpattern(x) & inpattern(y) & x ~= y => f(gid,x) ~= f(gid,y).
  !gid[graphid] : !x,y[node] : homowith(gid) & inpattern(x) & inpattern(y) & template_edge(x,y) => example_edge(gid, f(gid,x), f(gid,y)).
  !gid[graphid] : !x[node] : homowith(gid) & inpattern(x) => template_label(x) = example_label(gid, f(gid,x)).
  !gid[graphid] : homowith(gid) => positive(gid).

  #{ gid[graphid] : homowith(gid) } >= threshold.
}

)";

}  // namespace

EncodingText emit_asp(const Dataset& ds) {
  require_nonempty(ds);
  const LabeledGraph& tmpl = ds.template_graph;
  EncodingText out;
  out.header += fmt::format("% patmine ASP encoding, generator {}\n", kGeneratorVersion);
  out.header += fmt::format("% {}\n", summary(ds));
  out.header += fmt::format("% thresholds: N+ = {}, N- = {}\n", ds.n_pos_threshold,
                            ds.n_neg_threshold);
  out.header +=
      "% spellings: homowith (not homo_with), invar (not inpattern), t_edge (not template_edge)\n";
  out.header +=
      "% canonicity: template-based check only; the previous-solution check needs earlier models\n";

  std::string& b = out.body;
  b += "% --- instance\n";
  for (const Example& e : ds.examples) {
    for (const Edge& edge : e.graph.edges()) {
      b += fmt::format("edge({},v{},v{}).\n", e.graph_id, edge.from, edge.to);
    }
  }
  for (const Example& e : ds.examples) {
    for (VertexId v = 0; v < e.graph.vertex_count(); ++v) {
      b += fmt::format("label({},v{},{}).\n", e.graph_id, v, constant(e.graph.label(v).symbol()));
    }
  }
  for (const Example& e : ds.examples) {
    if (e.cls == ExampleClass::Negative) b += fmt::format("negative({}).\n", e.graph_id);
  }
  for (const Example& e : ds.examples) {
    if (e.cls == ExampleClass::Positive) b += fmt::format("positive({}).\n", e.graph_id);
  }
  for (const Edge& edge : tmpl.edges()) b += fmt::format("t_edge(x{},x{}).\n", edge.from, edge.to);
  for (VertexId v = 0; v < tmpl.vertex_count(); ++v) {
    b += fmt::format("t_label(x{},{}).\n", v, constant(tmpl.label(v).symbol()));
  }

  b += '\n';
  b += kAspPositive;
  b += fmt::format(":- positive_count(N), N < {}.\n", ds.n_pos_threshold);

  b += "\n% --- negative matching (saturation)\n";
  const bool any_negative = ds.count(ExampleClass::Negative) > 0;
  if (any_negative) {
    for (const Example& e : ds.examples) {
      if (e.cls != ExampleClass::Negative) continue;
      if (e.graph.empty()) {
        b += fmt::format("saturated({0}) :- invar(X), negative({0}).\n", e.graph_id);
        continue;
      }
      std::vector<std::string> alternatives;
      for (VertexId v = 0; v < e.graph.vertex_count(); ++v) {
        alternatives.push_back(fmt::format("map({},X,v{})", e.graph_id, v));
      }
      b += fmt::format("{} :- invar(X), negative({}).\n", join(alternatives, " | "), e.graph_id);
    }
    b += kAspSaturation;
    b += fmt::format(":- negative_count(N), N > {}.\n", ds.n_neg_threshold);
  } else {
    b += fmt::format("% no negative examples: negative_count(N) > {} cannot hold\n",
                     ds.n_neg_threshold);
  }

  b += "\n% --- canonicity (template-based)\n";
  std::vector<std::string> images;
  for (VertexId v = 0; v < tmpl.vertex_count(); ++v) images.push_back(fmt::format("iso(X,x{})", v));
  b += fmt::format("{} :- invar(X).\n", join(images, " | "));
  b += kAspCanonicity;

  b += '\n';
  b += kAspAuxiliary;
  if (all_undirected(ds)) {
    b += "edge(G,Y,X) :- edge(G,X,Y).\n";
    b += "t_edge(Y,X) :- t_edge(X,Y).\n";
  } else {
    b += "% directed instance: edge/3 and t_edge/2 are not symmetrized\n";
  }
  return out;
}

EncodingText emit_idp(const Dataset& ds) {
  require_nonempty(ds);
  const LabeledGraph& tmpl = ds.template_graph;
  EncodingText out;
  out.header += fmt::format("// patmine IDP encoding, generator {}\n", kGeneratorVersion);
  out.header += fmt::format("// {}\n", summary(ds));
  out.header += fmt::format("// threshold: N+ = {}\n", ds.n_pos_threshold);
  out.header +=
      "// spellings: example_label (the label type and function share a name otherwise), "
      "example_edge, homowith(gid)\n";

  std::string& b = out.body;
  b += kIdpVocabulary;
  b += kIdpTheory;

  std::size_t nodes = tmpl.vertex_count();
  for (const Example& e : ds.examples) nodes = std::max(nodes, e.graph.vertex_count());

  std::vector<std::string> ids, labels, t_edges, t_labels, x_edges, x_labels, positives;
  for (const Example& e : ds.examples) {
    ids.push_back(std::to_string(e.graph_id));
    if (e.cls == ExampleClass::Positive) positives.push_back(std::to_string(e.graph_id));
    for (const Edge& edge : e.graph.edges()) {
      x_edges.push_back(fmt::format("{},{},{}", e.graph_id, edge.from, edge.to));
    }
    for (VertexId v = 0; v < e.graph.vertex_count(); ++v) {
      x_labels.push_back(
          fmt::format("{},{}->{}", e.graph_id, v, constant(e.graph.label(v).symbol())));
    }
  }
  for (const std::string& l : label_universe(ds)) labels.push_back(constant(l));
  for (const Edge& edge : tmpl.edges()) t_edges.push_back(fmt::format("{},{}", edge.from, edge.to));
  for (VertexId v = 0; v < tmpl.vertex_count(); ++v) {
    t_labels.push_back(fmt::format("{}->{}", v, constant(tmpl.label(v).symbol())));
  }

  b += "structure S:V{\n";
  b += fmt::format("  node = {{0..{}}}\n", nodes - 1);
  b += fmt::format("  graphid = {{{}}}\n", join(ids, ";"));
  b += fmt::format("  label = {{{}}}\n", join(labels, ";"));
  b += fmt::format("  template_edge = {{{}}}\n", join(t_edges, "; "));
  b += fmt::format("  template_label = {{{}}}\n", join(t_labels, "; "));
  b += fmt::format("  example_edge = {{{}}}\n", join(x_edges, "; "));
  b += fmt::format("  example_label = {{{}}}\n", join(x_labels, "; "));
  b += fmt::format("  positive = {{{}}}\n", join(positives, ";"));
  b += fmt::format("  threshold = {}\n", ds.n_pos_threshold);
  b += "}\n";
  return out;
}

}  // namespace patmine
