#include "setseq/glue.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "setseq/error.hpp"

namespace setseq {

const char* glue_case_name(GlueCase c) {
  switch (c) {
    case GlueCase::kLemma: return "lemma";
    case GlueCase::kA: return "a";
    case GlueCase::kB: return "b";
    case GlueCase::kC: return "c";
  }
  return "?";
}

std::array<std::array<int, 2>, 3> glue_copy_pairs(GlueCase kind) {
  if (kind == GlueCase::kC) return {{{0, 1}, {1, 3}, {0, 2}}};
  return {{{0, 1}, {1, 2}, {2, 3}}};
}

void check_glue_spec(const Graph& g, const Bipartition& bip,
                     const GlueSpec& spec) {
  const auto& j = spec.joins;
  for (int v : j) {
    if (v < 0 || v >= g.num_vertices())
      throw PreconditionError("joined vertex out of range");
    if (g.degree(v) != 1)
      throw PreconditionError("joined vertex " + std::to_string(v) +
                              " is not a leaf");
  }
  bool x0 = bip.in_x(j[0]), x1 = bip.in_x(j[1]), x2 = bip.in_x(j[2]);
  switch (spec.kind) {
    case GlueCase::kLemma: {
      if (x0 != x1 || x1 != x2)
        throw PreconditionError("lemma joins pendants of one class");
      if (j[0] == j[1] || j[1] == j[2] || j[0] == j[2])
        throw PreconditionError("lemma needs three distinct pendants in the "
                                "chosen class");
      int pendants_x = 0, pendants_y = 0;
      for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) == 1) ++(bip.in_x(v) ? pendants_x : pendants_y);
      if (!g.is_caterpillar() && (pendants_x < 2 || pendants_y < 2))
        throw PreconditionError("lemma needs a caterpillar or two pendants "
                                "in each class");
      break;
    }
    case GlueCase::kA:
      if (x0 != x1 || x1 != x2)
        throw PreconditionError("case a joins leaves of one class");
      break;
    case GlueCase::kB:
      if (x0 != x2 || x0 == x1)
        throw PreconditionError("case b joins the middle leaf from the other "
                                "class");
      break;
    case GlueCase::kC:
      if (x1 != x2 || x0 == x1)
        throw PreconditionError("case c joins the first leaf from the other "
                                "class");
      break;
  }
  // Connectors on complementary copy pairs through one vertex always get
  // equal labels.
  if (spec.kind != GlueCase::kC && j[0] == j[2])
    throw PreconditionError("first and third connectors need different "
                            "leaves");
  if (spec.kind == GlueCase::kC && j[1] == j[2])
    throw PreconditionError("second and third connectors need different "
                            "leaves");
}

namespace {

using Table = std::array<std::uint8_t, 4>;

bool is_perm(const Table& t) {
  std::uint8_t seen = 0;
  for (auto x : t) seen |= std::uint8_t(1u << x);
  return seen == 0xF;
}

std::vector<std::pair<Table, Table>> candidate_tables() {
  std::vector<std::pair<Table, Table>> out;
  out.push_back({{0b00, 0b11, 0b10, 0b01}, {0b00, 0b10, 0b01, 0b11}});
  Table x{0, 1, 2, 3};
  do {
    Table y{0, 1, 2, 3};
    do {
      Table e;
      for (int c = 0; c < 4; ++c) e[c] = x[c] ^ y[c];
      if (is_perm(e) && !(x == out[0].first && y == out[0].second))
        out.push_back({x, y});
    } while (std::next_permutation(y.begin(), y.end()));
  } while (std::next_permutation(x.begin(), x.end()));
  return out;
}

}  // namespace

GlueResult glue_four(const Graph& g, const Labeling& lab, const Bipartition& bip,
                     const GlueSpec& spec) {
  auto base = verify(g, lab);
  if (!base.ok()) throw PreconditionError("base labeling fails: " + base.detail);
  if (static_cast<int>(bip.class_x().size() + bip.class_y().size()) !=
      g.num_vertices())
    throw PreconditionError("bipartition does not match the graph");
  for (const Edge& e : g.edges())
    if (bip.in_x(e.u) == bip.in_x(e.v))
      throw PreconditionError("bipartition does not match the graph");
  check_glue_spec(g, bip, spec);

  const auto pairs = glue_copy_pairs(spec.kind);
  std::vector<int> leaves(spec.joins.begin(), spec.joins.end());
  std::sort(leaves.begin(), leaves.end());
  leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());

  const auto tables = candidate_tables();
  int chosen_table = -1;
  unsigned chosen_mask = 0;
  for (size_t t = 0; t < tables.size() && chosen_table < 0; ++t) {
    const auto& [sx, sy] = tables[t];
    for (unsigned mask = 0; mask < (1u << leaves.size()); ++mask) {
      auto suffix = [&](int v, int copy) -> std::uint8_t {
        std::uint8_t cls = bip.in_x(v) ? sx[copy] : sy[copy];
        size_t pos = std::lower_bound(leaves.begin(), leaves.end(), v) -
                     leaves.begin();
        bool swapped = (mask >> pos) & 1;
        return swapped ? std::uint8_t(sx[copy] ^ sy[copy]) : cls;
      };
      std::uint8_t seen = 0;
      bool ok = true;
      for (int c = 0; c < 3 && ok; ++c) {
        int v = spec.joins[c];
        std::uint8_t s = suffix(v, pairs[c][0]) ^ suffix(v, pairs[c][1]);
        if (s == 0 || (seen >> s) & 1) ok = false;
        seen |= std::uint8_t(1u << s);
      }
      if (ok) {
        chosen_table = static_cast<int>(t);
        chosen_mask = mask;
        break;
      }
    }
  }
  if (chosen_table < 0)
    throw PreconditionError("no suffix table and leaf swap separate the "
                            "connectors");

  GlueResult res;
  res.x_suffix = tables[chosen_table].first;
  res.y_suffix = tables[chosen_table].second;
  res.standard_table = chosen_table == 0;
  std::vector<bool> swapped(g.num_vertices(), false);
  for (size_t p = 0; p < leaves.size(); ++p)
    if ((chosen_mask >> p) & 1) {
      swapped[leaves[p]] = true;
      res.swapped.push_back(leaves[p]);
    }

  const int n = g.num_vertices();
  auto suffix = [&](int v, int copy) {
    std::uint8_t x = res.x_suffix[copy], y = res.y_suffix[copy];
    if (swapped[v]) return GF2Vector(2, x ^ y);
    return GF2Vector(2, bip.in_x(v) ? x : y);
  };
  std::vector<GF2Vector> labels;
  std::vector<Edge> edges;
  for (int c = 0; c < 4; ++c) {
    for (int v = 0; v < n; ++v)
      labels.push_back(extend(lab.vertex_labels[v], suffix(v, c)));
    for (const Edge& e : g.edges()) edges.push_back({e.u + c * n, e.v + c * n});
  }
  for (int t = 0; t < 3; ++t)
    edges.push_back({spec.joins[t] + pairs[t][0] * n,
                     spec.joins[t] + pairs[t][1] * n});

  Certificate& out = res.cert;
  out.graph = Graph(4 * n, std::move(edges));
  out.labeling = derive_edge_labels(out.graph, labels);

  // A swapped leaf's pendant edge must carry the class suffix, so the pair
  // still sums to the same value as before the exchange.
  for (int c = 0; c < 4; ++c)
    for (int i = 0; i < g.num_edges(); ++i) {
      const Edge& e = g.edge(i);
      if (swapped[e.u] == swapped[e.v]) continue;
      int leaf = swapped[e.u] ? e.u : e.v;
      int other = leaf == e.u ? e.v : e.u;
      std::uint8_t want = bip.in_x(leaf) ? res.x_suffix[c] : res.y_suffix[c];
      GF2Vector got = out.labeling.edge_labels[c * g.num_edges() + i];
      if (got != extend(lab.edge_labels[i], GF2Vector(2, want)) ||
          (got ^ labels[leaf + c * n]) != labels[other + c * n])
        throw std::logic_error("leaf swap broke a pendant edge sum");
    }

  auto repeated = repeated_labels(out.labeling);
  if (!repeated.empty()) {
    std::string list;
    for (const auto& x : repeated) list += " " + x.str();
    throw LabelCollisionError("glued labels repeat:" + list, repeated);
  }
  auto r = verify(out);
  if (!r.ok()) throw std::logic_error("glued graph fails: " + r.detail);

  std::set<GF2Vector> conn;
  for (int t = 0; t < 3; ++t) {
    res.connectors[t] = out.labeling.edge_labels[4 * g.num_edges() + t];
    conn.insert(res.connectors[t]);
  }
  int d = lab.dim + 2;
  if (conn != std::set<GF2Vector>{GF2Vector(d, 1), GF2Vector(d, 2),
                                  GF2Vector(d, 3)})
    throw std::logic_error("connector labels are not 0..01, 0..10, 0..11");
  out.header = {std::string("glue case ") + glue_case_name(spec.kind) +
                " of four " + std::to_string(n) + "-vertex copies"};
  return res;
}

}  // namespace setseq
