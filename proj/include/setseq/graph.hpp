#pragma once

#include <compare>
#include <optional>
#include <vector>

namespace setseq {

struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Edges are stored with the
// smaller endpoint first and keep their insertion order.
class Graph {
 public:
  Graph() = default;
  // Throws PreconditionError on loops, duplicates or out-of-range endpoints.
  Graph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[i]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  // Neighbours in increasing order.
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  std::optional<int> find_edge(int a, int b) const;

  bool is_connected() const;
  bool is_tree() const;
  bool all_degrees_odd() const;
  bool is_caterpillar() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

Graph path_graph(int n);
Graph star_graph(int leaves);

// Two color classes; every edge has one endpoint in each.
class Bipartition {
 public:
  Bipartition() = default;
  // in_x[v] says whether v belongs to class X. Throws if not a proper
  // two-coloring of g.
  Bipartition(const Graph& g, std::vector<bool> in_x);

  bool in_x(int v) const { return in_x_[v]; }
  const std::vector<int>& class_x() const { return x_; }
  const std::vector<int>& class_y() const { return y_; }
  Bipartition flipped() const;

 private:
  std::vector<bool> in_x_;
  std::vector<int> x_;
  std::vector<int> y_;
};

// Two-coloring with the smallest vertex of every component in X, or nullopt
// when g has an odd cycle.
std::optional<Bipartition> two_coloring(const Graph& g);

}  // namespace setseq
