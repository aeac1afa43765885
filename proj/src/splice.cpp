#include "setseq/splice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "setseq/error.hpp"

namespace setseq {

Graph splice_edge(const Graph& g, int v, Edge e) {
  if (e.u > e.v) std::swap(e.u, e.v);
  auto idx = g.find_edge(e.u, e.v);
  if (!idx) throw PreconditionError("edge to splice is absent");
  if (v == e.u || v == e.v)
    throw PreconditionError("spliced vertex is an endpoint of the edge");
  if (v < 0 || v >= g.num_vertices())
    throw PreconditionError("spliced vertex out of range");
  if (g.find_edge(v, e.u) || g.find_edge(v, e.v))
    throw PreconditionError("splicing would create a duplicate edge");
  std::vector<Edge> edges;
  for (int i = 0; i < g.num_edges(); ++i)
    if (i != *idx) edges.push_back(g.edge(i));
  edges.push_back({v, e.u});
  edges.push_back({v, e.v});
  return Graph(g.num_vertices(), std::move(edges));
}

SuffixScheme standard_scheme() {
  return {{0b00, 0b10, 0b01, 0b11}, {0b00, 0b11, 0b10, 0b01}};
}

namespace {

std::set<GF2Vector> class_labels(const LabeledTree& t, bool x_side) {
  std::set<GF2Vector> out;
  const auto& cls = x_side ? t.classes.class_x() : t.classes.class_y();
  for (int v : cls) out.insert(t.cert.labeling.vertex_labels[v]);
  return out;
}

}  // namespace

void check_input(const FourTreeInput& input, bool check_label_sets) {
  const Graph& g0 = input[0].cert.graph;
  int n = g0.num_vertices();
  if (n < 2 || (n & (n - 1)))
    throw PreconditionError("trees must have a power-of-two vertex count");
  for (int c = 0; c < 4; ++c) {
    const auto& t = input[c];
    std::string who = "tree " + std::to_string(c + 1);
    if (t.cert.graph.num_vertices() != n)
      throw PreconditionError(who + " has a different size");
    if (!t.cert.graph.is_tree() || !t.cert.graph.all_degrees_odd())
      throw PreconditionError(who + " is not an odd tree");
    auto r = verify(t.cert);
    if (!r.ok()) throw PreconditionError(who + " labeling fails: " + r.detail);
    for (const Edge& e : t.cert.graph.edges())
      if (t.classes.in_x(e.u) == t.classes.in_x(e.v))
        throw PreconditionError(who + " classes are not a bipartition");
    if (t.classes.class_x().size() != input[0].classes.class_x().size())
      throw PreconditionError(who + " has a different class size");
    if (check_label_sets &&
        (class_labels(t, true) != class_labels(input[0], true) ||
         class_labels(t, false) != class_labels(input[0], false)))
      throw PreconditionError(who + " class label sets differ from tree 1");
  }
}

SpliceRoles check_choice(const FourTreeInput& input,
                         const SpliceChoice& choice) {
  const auto& ops = choice.ops;
  for (const auto& op : ops) {
    if (op.source < 0 || op.source > 3 || op.target_copy < 0 ||
        op.target_copy > 3)
      throw PreconditionError("copy index out of range");
    const auto& src = input[op.source].cert.graph;
    const auto& dst = input[op.target_copy];
    if (op.vertex < 0 || op.vertex >= src.num_vertices())
      throw PreconditionError("spliced vertex out of range");
    if (!dst.cert.graph.find_edge(op.target.u, op.target.v))
      throw PreconditionError("target edge absent from its copy");
    if (op.source == op.target_copy)
      throw PreconditionError("a vertex cannot be spliced into its own copy");
  }
  auto in_x = [&](const SpliceOp& op) {
    return input[op.source].classes.in_x(op.vertex);
  };
  SpliceRoles r;
  r.i = ops[0].source;
  r.j = ops[0].target_copy;
  r.k = ops[1].target_copy;
  r.l = ops[2].target_copy;
  std::set<int> distinct{r.i, r.j, r.k, r.l};
  if (distinct.size() != 4)
    throw PreconditionError("copies i, j, k, l must be distinct");
  switch (choice.set_id) {
    case 1:
      if (ops[1].source != r.i || ops[2].source != r.i)
        throw PreconditionError("set 1 splices three vertices of copy i");
      if (!in_x(ops[0]) || !in_x(ops[1]) || !in_x(ops[2]))
        throw PreconditionError("set 1 splices vertices of class X");
      break;
    case 2:
      if (ops[1].source != r.i)
        throw PreconditionError("set 2 splices two vertices of copy i");
      if (ops[2].source != r.j && ops[2].source != r.k)
        throw PreconditionError("set 2 third vertex comes from copy j or k");
      if (!in_x(ops[0]) || !in_x(ops[1]) || in_x(ops[2]))
        throw PreconditionError("set 2 splices X, X, then Y");
      r.m = ops[2].source;
      break;
    case 3:
      if (ops[1].source != r.j || ops[2].source != r.k)
        throw PreconditionError("set 3 splices from copies i, j, k in turn");
      if (!in_x(ops[0]) || in_x(ops[1]) || in_x(ops[2]))
        throw PreconditionError("set 3 splices X, Y, then Y");
      break;
    default:
      throw PreconditionError("set must be 1, 2 or 3");
  }
  return r;
}

Certificate splice_four(const FourTreeInput& input, const SpliceChoice& choice,
                        const SpliceOptions& options) {
  check_input(input, options.check_label_sets);
  SpliceRoles roles = check_choice(input, choice);
  const int n = input[0].cert.graph.num_vertices();

  std::array<int, 4> role_of{};
  role_of[roles.i] = 0;
  role_of[roles.j] = 1;
  role_of[roles.k] = 2;
  role_of[roles.l] = 3;

  std::vector<GF2Vector> labels;
  std::vector<Edge> edges;
  for (int c = 0; c < 4; ++c) {
    const auto& t = input[c];
    int role = role_of[c];
    for (int v = 0; v < n; ++v) {
      std::uint8_t suf = t.classes.in_x(v) ? options.scheme.x[role]
                                           : options.scheme.y[role];
      labels.push_back(extend(t.cert.labeling.vertex_labels[v],
                              GF2Vector(2, suf)));
    }
    for (const Edge& e : t.cert.graph.edges())
      edges.push_back({e.u + c * n, e.v + c * n});
  }
  Graph g(4 * n, std::move(edges));
  for (const auto& op : choice.ops)
    g = splice_edge(g, op.vertex + op.source * n,
                    {op.target.u + op.target_copy * n,
                     op.target.v + op.target_copy * n});

  Certificate out;
  out.graph = std::move(g);
  out.labeling = derive_edge_labels(out.graph, labels);
  auto repeated = repeated_labels(out.labeling);
  if (!repeated.empty()) {
    std::string list;
    for (const auto& x : repeated) list += " " + x.str();
    throw LabelCollisionError("spliced labels repeat:" + list, repeated);
  }
  auto r = verify(out);
  if (!r.ok()) throw std::logic_error("spliced tree fails: " + r.detail);
  if (!out.graph.is_tree() || !out.graph.all_degrees_odd())
    throw std::logic_error("spliced graph is not an odd tree");
  out.header = {"splice set " + std::to_string(choice.set_id) + " of four " +
                std::to_string(n) + "-vertex trees"};
  return out;
}

SpliceChoice pattern_choice(const FourTreeInput& input, int set_id,
                            const GF2Vector& e, const SpliceRoles& roles) {
  auto edge_in = [&](int copy) {
    const auto& t = input[copy];
    for (int i = 0; i < t.cert.graph.num_edges(); ++i)
      if (t.cert.labeling.edge_labels[i] == e) {
        Edge ed = t.cert.graph.edge(i);
        if (!t.classes.in_x(ed.u)) std::swap(ed.u, ed.v);
        return ed;  // u in X, v in Y
      }
    throw PreconditionError("copy " + std::to_string(copy + 1) +
                            " has no edge labeled " + e.str());
  };
  auto vertex_in = [&](int copy, const GF2Vector& label) {
    const auto& lab = input[copy].cert.labeling.vertex_labels;
    auto it = std::find(lab.begin(), lab.end(), label);
    if (it == lab.end())
      throw PreconditionError("copy " + std::to_string(copy + 1) +
                              " has no vertex labeled " + label.str());
    return static_cast<int>(it - lab.begin());
  };
  auto label = [&](int copy, int v) {
    return input[copy].cert.labeling.vertex_labels[v];
  };
  Edge ej = edge_in(roles.j), ek = edge_in(roles.k), el = edge_in(roles.l);
  SpliceChoice c;
  c.set_id = set_id;
  c.ops[0] = {roles.i, vertex_in(roles.i, label(roles.j, ej.u)), roles.j, ej};
  switch (set_id) {
    case 1:
      c.ops[1] = {roles.i, vertex_in(roles.i, label(roles.k, ek.u)), roles.k, ek};
      c.ops[2] = {roles.i, vertex_in(roles.i, label(roles.l, el.u)), roles.l, el};
      break;
    case 2:
      c.ops[1] = {roles.i, vertex_in(roles.i, label(roles.k, ek.u)), roles.k, ek};
      c.ops[2] = {roles.k, vertex_in(roles.k, label(roles.l, el.v)), roles.l, el};
      break;
    case 3:
      c.ops[1] = {roles.j, vertex_in(roles.j, label(roles.k, ek.v)), roles.k, ek};
      c.ops[2] = {roles.k, vertex_in(roles.k, label(roles.l, el.v)), roles.l, el};
      break;
    default:
      throw PreconditionError("set must be 1, 2 or 3");
  }
  return c;
}

}  // namespace setseq
