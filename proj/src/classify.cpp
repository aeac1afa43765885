#include "setseq/classify.hpp"

namespace setseq {

ClassifySummary classify(const TreeCatalog& catalog,
                         const SearchOptions& options) {
  ClassifySummary out;
  for (const Graph& t : catalog.trees) {
    ClassifyEntry e{t, std::nullopt, {}};
    if (t.num_vertices() > 2) e.obstruction = even_degree_obstruction(t);
    if (e.obstruction && e.obstruction->blocked()) {
      e.report.reason =
          "even-degree obstruction, clause " +
          std::to_string(e.obstruction->clause);
    } else {
      e.report = find_labeling(t, options);
    }
    switch (e.report.outcome) {
      case SearchOutcome::kFound: ++out.found; break;
      case SearchOutcome::kExhaustedNone: ++out.exhausted; break;
      case SearchOutcome::kAborted: ++out.aborted; break;
    }
    out.entries.push_back(std::move(e));
  }
  return out;
}

}  // namespace setseq
