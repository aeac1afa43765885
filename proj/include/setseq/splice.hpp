#pragma once

#include <array>
#include <cstdint>

#include "setseq/graph.hpp"
#include "setseq/labeling.hpp"

namespace setseq {

// Removes edge e and joins v to both of its endpoints.
Graph splice_edge(const Graph& g, int v, Edge e);

struct LabeledTree {
  Certificate cert;
  Bipartition classes;
};

using FourTreeInput = std::array<LabeledTree, 4>;

// One splice: vertex `vertex` of copy `source` goes into edge `target` of copy
// `target_copy`. Copies are 0..3.
struct SpliceOp {
  int source = 0;
  int vertex = 0;
  int target_copy = 0;
  Edge target;
};

struct SpliceChoice {
  int set_id = 1;
  std::array<SpliceOp, 3> ops;
};

// Copy indices playing roles i, j, k, l (and m for set 2) in a choice.
struct SpliceRoles {
  int i = 0, j = 0, k = 0, l = 0;
  int m = -1;
};

// Two-bit suffixes for the X and Y classes of the copies in roles i, j, k, l.
struct SuffixScheme {
  std::array<std::uint8_t, 4> x;
  std::array<std::uint8_t, 4> y;
};

// i: 00/00, j: 10/11, k: 01/10, l: 11/01.
SuffixScheme standard_scheme();

struct SpliceOptions {
  SuffixScheme scheme = standard_scheme();
  // Require every X class (and every Y class) to carry the same label set.
  bool check_label_sets = true;
};

// Checks the copy and class constraints of the chosen set and returns the
// roles. Throws PreconditionError.
SpliceRoles check_choice(const FourTreeInput& input, const SpliceChoice& choice);

// Throws PreconditionError when the trees are not verified odd trees of one
// size with matching class sizes (and, if requested, label sets).
void check_input(const FourTreeInput& input, bool check_label_sets);

// Four copies side by side (copy c shifted by c times the copy size), labels
// extended by their class suffix, then the three splices. Throws
// LabelCollisionError when labels repeat.
Certificate splice_four(const FourTreeInput& input, const SpliceChoice& choice,
                        const SpliceOptions& options = {});

// The standard choice: every target copy splices its edge
// labeled e; spliced vertices are picked by the labels of that edge's
// endpoints. `roles` gives copies for i, j, k, l; m = k for set 2.
SpliceChoice pattern_choice(const FourTreeInput& input, int set_id,
                            const GF2Vector& e, const SpliceRoles& roles);

}  // namespace setseq
