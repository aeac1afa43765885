#pragma once

#include <optional>
#include <string>
#include <vector>

#include "setseq/gf2.hpp"
#include "setseq/graph.hpp"

namespace setseq {

struct Labeling {
  int dim = 0;
  std::vector<GF2Vector> vertex_labels;
  std::vector<GF2Vector> edge_labels;
};

// A graph, a labeling of it, and free-form comment lines carried in the file.
struct Certificate {
  Graph graph;
  Labeling labeling;
  std::vector<std::string> header;
};

// Edge labels forced by XOR. Does not check distinctness.
Labeling derive_edge_labels(const Graph& g,
                            const std::vector<GF2Vector>& vertex_labels);

enum class Clause { kNone, kZeroLabel, kDuplicateLabel, kEdgeSum, kSizeMismatch };

struct VerifyReport {
  Clause failed = Clause::kNone;
  std::string detail;
  std::optional<GF2Vector> label;

  bool ok() const { return failed == Clause::kNone; }
};

const char* clause_name(Clause c);

// Checks zero labels, duplicates, edge sums and the 2^dim - 1 size identity,
// in that order, and reports the first violation. Throws PreconditionError
// when label counts or dimensions do not match g.
VerifyReport verify(const Graph& g, const Labeling& lab);
inline VerifyReport verify(const Certificate& c) {
  return verify(c.graph, c.labeling);
}

// Vectors used more than once among all vertex and edge labels, sorted.
std::vector<GF2Vector> repeated_labels(const Labeling& lab);

// XOR of every vertex and edge label.
GF2Vector total_xor(const Labeling& lab);

enum class Obstruction { kUnknown, kBlocked };

struct ObstructionVerdict {
  Obstruction verdict = Obstruction::kUnknown;
  int clause = 0;  // 1, 2 or 3 when blocked
  std::vector<int> even_vertices;

  bool blocked() const { return verdict == Obstruction::kBlocked; }
};

// Even-degree test: one or two even vertices; three with an adjacent pair;
// four that split into two edges. Requires more than two vertices.
ObstructionVerdict even_degree_obstruction(const Graph& g);

}  // namespace setseq
