#pragma once

#include <string>
#include <vector>

#include "setseq/graph.hpp"

namespace setseq {

// Parenthesis encoding of a tree rooted at its centroid, with children in
// sorted order; the smaller encoding wins for a bicentroid. Two trees are
// isomorphic iff their forms are equal. Throws PreconditionError if g is
// not a tree.
std::string canonical_form(const Graph& tree);

// The same tree renumbered in preorder of the canonical rooting.
Graph canonical_tree(const Graph& tree);

struct TreeCatalog {
  int num_vertices = 0;
  bool odd_only = false;
  std::vector<Graph> trees;  // canonical, sorted by canonical form
};

inline constexpr int kDefaultMaxTreeVertices = 16;

// All free trees on n vertices up to isomorphism, optionally only those with
// every degree odd. Throws ResourceLimitError when n > max_vertices.
TreeCatalog enumerate_trees(int n, bool odd_only,
                            int max_vertices = kDefaultMaxTreeVertices);

inline TreeCatalog enumerate_odd_trees(int n) {
  return enumerate_trees(n, true);
}

}  // namespace setseq
