#pragma once

#include <string>
#include <vector>

#include "setseq/labeling.hpp"

namespace setseq::golden {

// The labeled odd tree on 4 vertices: center 001, leaves 011, 101, 111.
Certificate star4();
// The three labeled odd trees on 8 vertices.
Certificate star8();
// Degrees 5 and 3 joined by an edge; vertices A..H are 0..7.
Certificate tree8r();
// Caterpillar with a three-vertex spine; vertices A..H are 0..7.
Certificate caterpillar8();

struct Named {
  std::string name;
  Certificate cert;
};
std::vector<Named> all();

}  // namespace setseq::golden
