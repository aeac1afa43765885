#include "setseq/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <queue>
#include <stdexcept>
#include <thread>
#include <vector>

namespace setseq {

const char* outcome_name(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::kFound: return "Found";
    case SearchOutcome::kExhaustedNone: return "ExhaustedNone";
    case SearchOutcome::kAborted: return "Aborted";
  }
  return "?";
}

std::optional<int> label_dimension(const Graph& g) {
  std::uint64_t total =
      static_cast<std::uint64_t>(g.num_vertices()) + g.num_edges();
  for (int d = 1; d < 63; ++d)
    if (total == (std::uint64_t{1} << d) - 1) return d;
  return std::nullopt;
}

namespace {

constexpr int kMaxSearchDim = 24;
constexpr std::uint64_t kCheckEvery = 1024;

struct Plan {
  int dim = 0;
  std::uint64_t top = 0;  // largest label
  std::vector<int> order;
  // For each position, earlier positions adjacent to it.
  std::vector<std::vector<int>> back;
};

Plan make_plan(const Graph& g, int dim) {
  int n = g.num_vertices();
  Plan p;
  p.dim = dim;
  p.top = (std::uint64_t{1} << dim) - 1;
  std::vector<int> pos(n, -1);
  while (static_cast<int>(p.order.size()) < n) {
    int root = -1;
    for (int v = 0; v < n; ++v)
      if (pos[v] < 0 && (root < 0 || g.degree(v) > g.degree(root))) root = v;
    std::queue<int> q;
    q.push(root);
    pos[root] = static_cast<int>(p.order.size());
    p.order.push_back(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v))
        if (pos[w] < 0) {
          pos[w] = static_cast<int>(p.order.size());
          p.order.push_back(w);
          q.push(w);
        }
    }
  }
  p.back.resize(n);
  for (int i = 0; i < n; ++i)
    for (int w : g.neighbors(p.order[i]))
      if (pos[w] < i) p.back[i].push_back(pos[w]);
  return p;
}

struct Shared {
  const Plan* plan;
  SearchOptions options;
  std::chrono::steady_clock::time_point start;
  int split = 0;  // position whose candidates are handed out
  std::atomic<std::uint64_t> next_candidate{1};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<int> abort_kind{0};  // 1 nodes, 2 time
  std::mutex mu;
  std::optional<std::vector<std::uint64_t>> found;
};

class Worker {
 public:
  explicit Worker(Shared& s)
      : s_(s),
        p_(*s.plan),
        labels_(p_.order.size(), 0),
        used_((p_.top >> 6) + 1, 0) {}

  void run() {
    dfs(0);
    s_.nodes += pending_;
    pending_ = 0;
  }

 private:
  bool used(std::uint64_t x) const { return (used_[x >> 6] >> (x & 63)) & 1; }
  void flip(std::uint64_t x) { used_[x >> 6] ^= std::uint64_t{1} << (x & 63); }

  bool budget_exceeded() {
    if (++pending_ < std::min(kCheckEvery, s_.options.budget.max_nodes))
      return false;
    std::uint64_t total = s_.nodes += pending_;
    pending_ = 0;
    if (total >= s_.options.budget.max_nodes) {
      int expected = 0;
      s_.abort_kind.compare_exchange_strong(expected, 1);
      s_.stop = true;
    } else {
      std::chrono::duration<double> el =
          std::chrono::steady_clock::now() - s_.start;
      if (el.count() > s_.options.budget.max_seconds) {
        int expected = 0;
        s_.abort_kind.compare_exchange_strong(expected, 2);
        s_.stop = true;
      }
    }
    return s_.stop.load(std::memory_order_relaxed);
  }

  // Tries label x at position i; returns true when the subtree finds a
  // labeling.
  bool place(int i, std::uint64_t x) {
    if (used(x)) return false;
    const auto& back = p_.back[i];
    for (int q : back)
      if (used(x ^ labels_[q])) return false;
    if (budget_exceeded()) return false;
    flip(x);
    for (int q : back) flip(x ^ labels_[q]);
    labels_[i] = x;
    bool ok = dfs(i + 1);
    flip(x);
    for (int q : back) flip(x ^ labels_[q]);
    return ok;
  }

  bool dfs(int i) {
    if (s_.stop.load(std::memory_order_relaxed)) return false;
    if (i == static_cast<int>(labels_.size())) {
      std::lock_guard lock(s_.mu);
      if (!s_.found) s_.found = labels_;
      s_.stop = true;
      return true;
    }
    if (i == 0 && s_.options.symmetry) return place(0, 1);
    if (i == s_.split) {
      for (;;) {
        std::uint64_t x = s_.next_candidate.fetch_add(1);
        if (x > p_.top || s_.stop.load(std::memory_order_relaxed)) return false;
        if (place(i, x)) return true;
      }
    }
    for (std::uint64_t x = 1; x <= p_.top; ++x) {
      if (place(i, x)) return true;
      if (s_.stop.load(std::memory_order_relaxed)) return false;
    }
    return false;
  }

  Shared& s_;
  const Plan& p_;
  std::vector<std::uint64_t> labels_;
  std::vector<std::uint64_t> used_;
  std::uint64_t pending_ = 0;
};

}  // namespace

SearchReport find_labeling(const Graph& g, const SearchOptions& options) {
  auto start = std::chrono::steady_clock::now();
  SearchReport report;
  auto finish = [&] {
    std::chrono::duration<double> el = std::chrono::steady_clock::now() - start;
    report.elapsed_seconds = el.count();
    return report;
  };
  auto dim = label_dimension(g);
  if (!dim) {
    report.reason = "size-mismatch";
    return finish();
  }
  if (*dim > kMaxSearchDim) {
    report.outcome = SearchOutcome::kAborted;
    report.reason = "dimension above search limit";
    return finish();
  }
  Plan plan = make_plan(g, *dim);
  Shared shared;
  shared.plan = &plan;
  shared.options = options;
  shared.start = start;
  shared.split = options.symmetry ? 1 : 0;
  if (shared.split >= g.num_vertices()) shared.split = -1;

  int threads = std::max(1, options.threads);
  if (threads == 1 || shared.split < 0) {
    Worker(shared).run();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&shared] { Worker(shared).run(); });
    for (auto& th : pool) th.join();
  }

  report.nodes_expanded = shared.nodes.load();
  if (shared.found) {
    std::vector<GF2Vector> vl(g.num_vertices());
    for (size_t i = 0; i < plan.order.size(); ++i)
      vl[plan.order[i]] = GF2Vector(*dim, (*shared.found)[i]);
    Labeling lab = derive_edge_labels(g, vl);
    if (!verify(g, lab).ok())
      throw std::logic_error("search produced an invalid labeling");
    report.outcome = SearchOutcome::kFound;
    report.labeling = std::move(lab);
  } else if (shared.abort_kind.load() != 0) {
    report.outcome = SearchOutcome::kAborted;
    report.reason = shared.abort_kind.load() == 1 ? "node budget" : "time budget";
  } else {
    report.outcome = SearchOutcome::kExhaustedNone;
  }
  return finish();
}

}  // namespace setseq
