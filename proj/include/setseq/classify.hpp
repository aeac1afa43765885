#pragma once

#include <vector>

#include "setseq/labeling.hpp"
#include "setseq/search.hpp"
#include "setseq/trees.hpp"

namespace setseq {

struct ClassifyEntry {
  Graph tree;
  std::optional<ObstructionVerdict> obstruction;  // absent for n <= 2
  SearchReport report;
};

struct ClassifySummary {
  std::vector<ClassifyEntry> entries;
  int found = 0;
  int exhausted = 0;
  int aborted = 0;
};

// Obstruction test, then search for each tree. Blocked trees are recorded as
// ExhaustedNone without searching.
ClassifySummary classify(const TreeCatalog& catalog,
                         const SearchOptions& options = {});

}  // namespace setseq
