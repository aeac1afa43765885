#include "setseq/trees.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "setseq/error.hpp"

namespace setseq {

namespace {

std::vector<int> centroids(const Graph& t) {
  int n = t.num_vertices();
  std::vector<int> parent(n, -1), order;
  order.reserve(n);
  std::vector<bool> seen(n, false);
  order.push_back(0);
  seen[0] = true;
  for (size_t i = 0; i < order.size(); ++i)
    for (int w : t.neighbors(order[i]))
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = order[i];
        order.push_back(w);
      }
  std::vector<int> size(n, 1);
  for (int i = n - 1; i > 0; --i) size[parent[order[i]]] += size[order[i]];
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    int heaviest = n - size[v];
    for (int w : t.neighbors(v))
      if (w != parent[v]) heaviest = std::max(heaviest, size[w]);
    if (2 * heaviest <= n) out.push_back(v);
  }
  return out;
}

struct Encoder {
  const Graph& t;
  std::vector<std::string> code;

  const std::string& encode(int v, int parent) {
    std::vector<std::string> kids;
    for (int w : t.neighbors(v))
      if (w != parent) kids.push_back(encode(w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    s += ')';
    code[v] = std::move(s);
    return code[v];
  }
};

void require_tree(const Graph& g) {
  if (!g.is_tree()) throw PreconditionError("graph is not a tree");
}

}  // namespace

std::string canonical_form(const Graph& tree) {
  require_tree(tree);
  std::string best;
  for (int c : centroids(tree)) {
    Encoder e{tree, std::vector<std::string>(tree.num_vertices())};
    std::string s = e.encode(c, -1);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

Graph canonical_tree(const Graph& tree) {
  require_tree(tree);
  int root = -1;
  std::string best;
  std::vector<std::string> best_code;
  for (int c : centroids(tree)) {
    Encoder e{tree, std::vector<std::string>(tree.num_vertices())};
    std::string s = e.encode(c, -1);
    if (root < 0 || s < best) {
      root = c;
      best = std::move(s);
      best_code = std::move(e.code);
    }
  }
  // Preorder with children visited in increasing code order.
  std::vector<int> index(tree.num_vertices(), -1);
  std::vector<Edge> edges;
  int next = 0;
  std::vector<std::pair<int, int>> stack{{root, -1}};
  while (!stack.empty()) {
    auto [v, parent] = stack.back();
    stack.pop_back();
    index[v] = next++;
    if (parent >= 0) edges.push_back({index[parent], index[v]});
    std::vector<int> kids;
    for (int w : tree.neighbors(v))
      if (w != parent) kids.push_back(w);
    std::stable_sort(kids.begin(), kids.end(), [&](int a, int b) {
      return best_code[a] > best_code[b];
    });
    for (int w : kids) stack.push_back({w, v});
  }
  return Graph(tree.num_vertices(), std::move(edges));
}

TreeCatalog enumerate_trees(int n, bool odd_only, int max_vertices) {
  if (n < 1) throw PreconditionError("tree needs at least one vertex");
  if (n > max_vertices)
    throw ResourceLimitError("tree enumeration limited to " +
                             std::to_string(max_vertices) + " vertices");
  TreeCatalog cat;
  cat.num_vertices = n;
  cat.odd_only = odd_only;
  if (odd_only && n % 2 == 1) return cat;

  std::map<std::string, Graph> found;
  std::vector<int> level(n), parent(n), children(n);
  for (int i = 0; i < n; ++i) level[i] = i;
  for (;;) {
    std::fill(children.begin(), children.end(), 0);
    std::vector<int> last_at(n + 1, -1);
    for (int i = 0; i < n; ++i) {
      parent[i] = i == 0 ? -1 : last_at[level[i] - 1];
      if (parent[i] >= 0) ++children[parent[i]];
      last_at[level[i]] = i;
    }
    bool keep = true;
    if (odd_only)
      for (int i = 0; i < n && keep; ++i)
        keep = (children[i] + (i > 0 ? 1 : 0)) % 2 == 1;
    if (keep) {
      std::vector<Edge> edges;
      for (int i = 1; i < n; ++i) edges.push_back({parent[i], i});
      Graph g(n, std::move(edges));
      std::string form = canonical_form(g);
      if (!found.count(form)) found.emplace(form, canonical_tree(g));
    }
    // Next rooted level sequence.
    int p = n - 1;
    while (p > 0 && level[p] <= 1) --p;
    if (p == 0) break;
    int q = p - 1;
    while (level[q] != level[p] - 1) --q;
    for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
  }
  for (auto& [form, g] : found) cat.trees.push_back(std::move(g));
  return cat;
}

}  // namespace setseq
