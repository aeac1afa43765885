#include "setseq/graph.hpp"

#include <algorithm>
#include <string>

#include "setseq/error.hpp"

namespace setseq {

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : n_(num_vertices), edges_(std::move(edges)), adj_(num_vertices) {
  if (n_ < 0) throw PreconditionError("negative vertex count");
  for (Edge& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n_)
      throw PreconditionError("edge (" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + ") out of range");
    if (e.u == e.v)
      throw PreconditionError("self-loop at " + std::to_string(e.u));
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw PreconditionError("duplicate edge");
  }
}

std::optional<int> Graph::find_edge(int a, int b) const {
  Edge key{std::min(a, b), std::max(a, b)};
  for (int i = 0; i < num_edges(); ++i)
    if (edges_[i] == key) return i;
  return std::nullopt;
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<bool> seen(n_, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj_[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n_;
}

bool Graph::is_tree() const {
  return n_ > 0 && num_edges() == n_ - 1 && is_connected();
}

bool Graph::all_degrees_odd() const {
  for (int v = 0; v < n_; ++v)
    if (degree(v) % 2 == 0) return false;
  return true;
}

bool Graph::is_caterpillar() const {
  if (!is_tree()) return false;
  // Removing the leaves must leave a path (or nothing).
  for (int v = 0; v < n_; ++v) {
    if (degree(v) <= 1) continue;
    int inner = 0;
    for (int w : adj_[v])
      if (degree(w) > 1) ++inner;
    if (inner > 2) return false;
  }
  return true;
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, std::move(edges));
}

Bipartition::Bipartition(const Graph& g, std::vector<bool> in_x)
    : in_x_(std::move(in_x)) {
  if (static_cast<int>(in_x_.size()) != g.num_vertices())
    throw PreconditionError("bipartition size mismatch");
  for (const Edge& e : g.edges())
    if (in_x_[e.u] == in_x_[e.v])
      throw PreconditionError("edge (" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + ") inside one class");
  for (int v = 0; v < g.num_vertices(); ++v)
    (in_x_[v] ? x_ : y_).push_back(v);
}

Bipartition Bipartition::flipped() const {
  Bipartition b = *this;
  b.in_x_.flip();
  std::swap(b.x_, b.y_);
  return b;
}

std::optional<Bipartition> two_coloring(const Graph& g) {
  int n = g.num_vertices();
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 1;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<bool> in_x(n);
  for (int v = 0; v < n; ++v) in_x[v] = color[v] == 1;
  return Bipartition(g, std::move(in_x));
}

}  // namespace setseq
