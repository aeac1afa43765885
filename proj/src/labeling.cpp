#include "setseq/labeling.hpp"

#include <algorithm>
#include <array>

#include "setseq/error.hpp"

namespace setseq {

Labeling derive_edge_labels(const Graph& g,
                            const std::vector<GF2Vector>& vertex_labels) {
  if (static_cast<int>(vertex_labels.size()) != g.num_vertices())
    throw PreconditionError("vertex label count mismatch");
  Labeling lab;
  lab.dim = vertex_labels.empty() ? 0 : vertex_labels[0].dim();
  lab.vertex_labels = vertex_labels;
  lab.edge_labels.reserve(g.num_edges());
  for (const Edge& e : g.edges())
    lab.edge_labels.push_back(vertex_labels[e.u] ^ vertex_labels[e.v]);
  return lab;
}

const char* clause_name(Clause c) {
  switch (c) {
    case Clause::kNone: return "none";
    case Clause::kZeroLabel: return "zero label";
    case Clause::kDuplicateLabel: return "duplicate label";
    case Clause::kEdgeSum: return "edge sum";
    case Clause::kSizeMismatch: return "size mismatch";
  }
  return "?";
}

namespace {

void check_shape(const Graph& g, const Labeling& lab) {
  if (static_cast<int>(lab.vertex_labels.size()) != g.num_vertices() ||
      static_cast<int>(lab.edge_labels.size()) != g.num_edges())
    throw PreconditionError("labeling does not cover the graph");
  if (lab.dim < 1 || lab.dim > kMaxDim)
    throw PreconditionError("bad labeling dimension");
  for (const auto* list : {&lab.vertex_labels, &lab.edge_labels})
    for (const GF2Vector& x : *list)
      if (x.dim() != lab.dim)
        throw PreconditionError("label " + x.str() + " has dimension " +
                                std::to_string(x.dim()) + ", expected " +
                                std::to_string(lab.dim));
}

std::vector<GF2Vector> all_labels(const Labeling& lab) {
  std::vector<GF2Vector> all = lab.vertex_labels;
  all.insert(all.end(), lab.edge_labels.begin(), lab.edge_labels.end());
  return all;
}

}  // namespace

std::vector<GF2Vector> repeated_labels(const Labeling& lab) {
  std::vector<GF2Vector> all = all_labels(lab);
  std::sort(all.begin(), all.end());
  std::vector<GF2Vector> out;
  for (size_t i = 1; i < all.size(); ++i)
    if (all[i] == all[i - 1] && (out.empty() || out.back() != all[i]))
      out.push_back(all[i]);
  return out;
}

GF2Vector total_xor(const Labeling& lab) {
  std::uint64_t acc = 0;
  for (const auto& x : lab.vertex_labels) acc ^= x.bits();
  for (const auto& x : lab.edge_labels) acc ^= x.bits();
  return GF2Vector(lab.dim, acc);
}

VerifyReport verify(const Graph& g, const Labeling& lab) {
  check_shape(g, lab);
  VerifyReport r;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (lab.vertex_labels[v].is_zero()) {
      r.failed = Clause::kZeroLabel;
      r.detail = "vertex " + std::to_string(v) + " has the zero label";
      r.label = lab.vertex_labels[v];
      return r;
    }
  for (int i = 0; i < g.num_edges(); ++i)
    if (lab.edge_labels[i].is_zero()) {
      r.failed = Clause::kZeroLabel;
      r.detail = "edge " + std::to_string(g.edge(i).u) + "-" +
                 std::to_string(g.edge(i).v) + " has the zero label";
      r.label = lab.edge_labels[i];
      return r;
    }
  std::vector<GF2Vector> repeated = repeated_labels(lab);
  if (!repeated.empty()) {
    r.failed = Clause::kDuplicateLabel;
    r.detail = "label " + repeated.front().str() + " is used more than once";
    r.label = repeated.front();
    return r;
  }
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    if ((lab.vertex_labels[e.u] ^ lab.vertex_labels[e.v]) !=
        lab.edge_labels[i]) {
      r.failed = Clause::kEdgeSum;
      r.detail = "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                 " is labeled " + lab.edge_labels[i].str() +
                 " but its endpoints sum to " +
                 (lab.vertex_labels[e.u] ^ lab.vertex_labels[e.v]).str();
      r.label = lab.edge_labels[i];
      return r;
    }
  }
  std::uint64_t total =
      static_cast<std::uint64_t>(g.num_vertices()) + g.num_edges();
  if (lab.dim >= 64 || total != dim_mask(lab.dim)) {
    r.failed = Clause::kSizeMismatch;
    r.detail = std::to_string(total) + " labels but 2^" +
               std::to_string(lab.dim) + " - 1 vectors";
    return r;
  }
  return r;
}

ObstructionVerdict even_degree_obstruction(const Graph& g) {
  if (g.num_vertices() <= 2)
    throw PreconditionError("obstruction test needs more than two vertices");
  ObstructionVerdict out;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) % 2 == 0) out.even_vertices.push_back(v);
  const auto& ev = out.even_vertices;
  auto adj = [&](int a, int b) { return g.find_edge(a, b).has_value(); };
  auto block = [&](int clause) {
    out.verdict = Obstruction::kBlocked;
    out.clause = clause;
  };
  if (ev.size() == 1 || ev.size() == 2) {
    block(1);
  } else if (ev.size() == 3) {
    if (adj(ev[0], ev[1]) || adj(ev[0], ev[2]) || adj(ev[1], ev[2])) block(2);
  } else if (ev.size() == 4) {
    static constexpr std::array<std::array<int, 4>, 3> kPairings{
        {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
    for (const auto& p : kPairings)
      if (adj(ev[p[0]], ev[p[1]]) && adj(ev[p[2]], ev[p[3]])) {
        block(3);
        break;
      }
  }
  return out;
}

}  // namespace setseq
