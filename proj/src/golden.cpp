#include "setseq/golden.hpp"

namespace setseq::golden {

namespace {

Certificate make(const char* title, int n, std::vector<Edge> edges,
                 std::vector<const char*> labels) {
  Graph g(n, std::move(edges));
  std::vector<GF2Vector> vl;
  for (const char* s : labels) vl.push_back(GF2Vector::parse(s));
  return {g, derive_edge_labels(g, vl), {title}};
}

enum { A, B, C, D, E, F, G, H };

}  // namespace

Certificate star4() {
  return make("odd tree on 4 vertices", 4, {{0, 1}, {0, 2}, {0, 3}},
              {"001", "011", "101", "111"});
}

Certificate star8() {
  return make("odd tree on 8 vertices: star", 8,
              {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}},
              {"0001", "0011", "0111", "1011", "1101", "0101", "1111", "1001"});
}

Certificate tree8r() {
  return make("odd tree on 8 vertices: degrees 5,3", 8,
              {{A, B}, {B, C}, {C, D}, {B, F}, {B, G}, {B, H}, {C, E}},
              {"0011", "0001", "0111", "1001", "1000", "1011", "0101", "1101"});
}

Certificate caterpillar8() {
  return make("odd tree on 8 vertices: caterpillar with spine of 3", 8,
              {{A, B}, {B, C}, {C, D}, {D, E}, {B, F}, {C, G}, {D, H}},
              {"1001", "1011", "0001", "1111", "1000", "1101", "0101", "1100"});
}

std::vector<Named> all() {
  return {{"star4", star4()},
          {"star8", star8()},
          {"tree8r", tree8r()},
          {"caterpillar8", caterpillar8()}};
}

}  // namespace setseq::golden
