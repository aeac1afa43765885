#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "setseq/graph.hpp"
#include "setseq/labeling.hpp"

namespace setseq {

struct SearchBudget {
  std::uint64_t max_nodes = 1'000'000'000;
  double max_seconds = 300.0;
};

struct SearchOptions {
  SearchBudget budget;
  // Fix the first vertex's label to 0...01.
  bool symmetry = true;
  int threads = 1;
};

enum class SearchOutcome { kFound, kExhaustedNone, kAborted };

const char* outcome_name(SearchOutcome o);

struct SearchReport {
  SearchOutcome outcome = SearchOutcome::kExhaustedNone;
  std::optional<Labeling> labeling;  // set iff kFound
  std::uint64_t nodes_expanded = 0;
  double elapsed_seconds = 0.0;
  // "size-mismatch", "node budget", "time budget", or empty.
  std::string reason;
};

// Backtracking over vertex labels in BFS order from a maximum-degree vertex,
// candidates in increasing order; edge labels are claimed as soon as both
// endpoints are labeled.
SearchReport find_labeling(const Graph& g, const SearchOptions& options = {});

// Dimension d with |V| + |E| = 2^d - 1, if any.
std::optional<int> label_dimension(const Graph& g);

}  // namespace setseq
