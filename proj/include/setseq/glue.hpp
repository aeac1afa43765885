#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "setseq/graph.hpp"
#include "setseq/labeling.hpp"

namespace setseq {

enum class GlueCase { kLemma, kA, kB, kC };

const char* glue_case_name(GlueCase c);

// joins[t] is a leaf of g; connector t joins its copies in the copy pair
// glue_copy_pairs(kind)[t].
struct GlueSpec {
  GlueCase kind = GlueCase::kLemma;
  std::array<int, 3> joins{};
};

// (0,1), (1,2), (2,3) for the lemma and cases a, b; (0,1), (1,3), (0,2) for
// case c.
std::array<std::array<int, 2>, 3> glue_copy_pairs(GlueCase kind);

struct GlueResult {
  Certificate cert;
  // Two-bit suffixes per copy for class X, class Y and edges.
  std::array<std::uint8_t, 4> x_suffix{};
  std::array<std::uint8_t, 4> y_suffix{};
  bool standard_table = false;
  // Leaves whose suffix is exchanged with their pendant edge's.
  std::vector<int> swapped;
  std::array<GF2Vector, 3> connectors;
};

// Throws PreconditionError when the spec does not fit the case.
void check_glue_spec(const Graph& g, const Bipartition& bip,
                     const GlueSpec& spec);

// Four copies of g (copy c shifted by c|V|) plus three connectors. Labels
// are extended by class suffixes; the first suffix table (the standard one,
// then all others in order) and leaf-swap set giving connector suffixes
// 01, 10, 11 is used.
GlueResult glue_four(const Graph& g, const Labeling& lab, const Bipartition& bip,
                     const GlueSpec& spec);

}  // namespace setseq
