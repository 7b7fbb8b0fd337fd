#include "patmine/dataio.hpp"
#include "patmine/synth.hpp"

namespace patmine {

std::string_view toy_fixture_text() {
  return R"(# Hexagon instance, N+ = 1 and N- = 0.
# Template: hexagon 0..5 with chord 1-4 and a two-edge tail 3-6-7.
mode undirected
t # 0 pos
v 0 a
v 1 a
v 2 a
v 3 a
v 4 a
v 5 a
e 0 1
e 1 2
e 2 3
e 3 4
e 4 5
e 5 0
e 0 3
e 2 5
t # 1 neg
v 0 a
v 1 a
v 2 a
v 3 a
e 0 1
e 1 2
e 2 3
t # 2 template
v 0 a
v 1 a
v 2 a
v 3 a
v 4 a
v 5 a
v 6 a
v 7 a
e 0 1
e 1 2
e 2 3
e 3 4
e 4 5
e 5 0
e 1 4
e 3 6
e 6 7
)";
}

Dataset toy_dataset() {
  Dataset ds = assemble_dataset(parse_graphs(toy_fixture_text()));
  ds.n_pos_threshold = 1;
  ds.n_neg_threshold = 0;
  return ds;
}

}  // namespace patmine
