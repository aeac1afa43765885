#include "setseq/partition.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

#include "setseq/error.hpp"

namespace setseq {

bool DifferenceInstance::pairing_form() const {
  if (targets.size() % 2) return false;
  for (size_t i = 0; i + 1 < targets.size(); i += 2)
    if (targets[i] != targets[i + 1]) return false;
  return true;
}

bool DifferenceInstance::theorem_form() const {
  if (!pairing_form() || n < 2) return false;
  size_t prefix = size_t{1} << (n - 2);
  if (targets.size() < prefix) return false;
  for (size_t i = 1; i < prefix; ++i)
    if (targets[i] != targets[0]) return false;
  return true;
}

void check_instance(const DifferenceInstance& inst) {
  if (inst.n < 2 || inst.n > 20)
    throw PreconditionError("pairing dimension must lie in 2..20");
  if (inst.targets.size() != size_t{1} << (inst.n - 1))
    throw PreconditionError("expected 2^(n-1) targets");
  for (const auto& t : inst.targets)
    if (t.dim() != inst.n || t.is_zero())
      throw PreconditionError("targets must be nonzero vectors of dimension n");
}

std::string partition_problem(const DifferenceInstance& inst,
                              const PairPartition& p) {
  if (p.n != inst.n) return "dimension mismatch";
  if (p.pairs.size() != inst.targets.size()) return "wrong number of pairs";
  std::vector<bool> seen(size_t{1} << inst.n, false);
  for (size_t i = 0; i < p.pairs.size(); ++i) {
    const auto& [a, b] = p.pairs[i];
    if (a.dim() != inst.n || b.dim() != inst.n) return "entry of wrong dimension";
    for (const auto& x : {a, b}) {
      if (seen[x.bits()]) return x.str() + " appears twice";
      seen[x.bits()] = true;
    }
    if ((a ^ b) != inst.targets[i])
      return "pair " + std::to_string(i) + " sums to " + (a ^ b).str() +
             ", expected " + inst.targets[i].str();
  }
  return {};
}

namespace {

void assert_valid(const DifferenceInstance& inst, const PairPartition& p) {
  std::string why = partition_problem(inst, p);
  if (!why.empty()) throw std::logic_error("invalid pair partition: " + why);
}

}  // namespace

TracedPartition theorem4_partition_traced(const DifferenceInstance& inst) {
  check_instance(inst);
  if (!inst.theorem_form())
    throw PreconditionError("instance is not in theorem form");
  const int n = inst.n;
  const std::uint64_t size = std::uint64_t{1} << n;
  const std::uint64_t v = inst.targets[0].bits();
  // At n = 2 pairing form already makes both targets equal.
  const size_t prefix = n == 2 ? 2 : size_t{1} << (n - 2);

  // Base pairs (r_m, s_m) = (x, x ^ v), r_m clear at the lowest set bit of
  // v, in increasing r_m.
  const std::uint64_t low = v & (~v + 1);
  std::vector<std::uint64_t> r, s;
  std::vector<int> pair_of(size);
  for (std::uint64_t x = 0; x < size; ++x)
    if (!(x & low)) {
      pair_of[x] = pair_of[x ^ v] = static_cast<int>(r.size());
      r.push_back(x);
      s.push_back(x ^ v);
    }
  std::vector<bool> used(r.size(), false);

  TracedPartition out;
  out.partition.n = n;
  out.partition.pairs.resize(inst.targets.size());
  auto vec = [n](std::uint64_t x) { return GF2Vector(n, x); };

  for (size_t i = prefix; i < inst.targets.size(); i += 2) {
    std::uint64_t t = inst.targets[i].bits();
    bool done = false;
    if (t == v) {
      int a = -1, b = -1;
      for (int m = 0; m < static_cast<int>(r.size()) && b < 0; ++m)
        if (!used[m]) (a < 0 ? a : b) = m;
      if (b >= 0) {
        used[a] = used[b] = true;
        out.partition.pairs[i] = {vec(r[a]), vec(s[a])};
        out.partition.pairs[i + 1] = {vec(r[b]), vec(s[b])};
        out.cases.push_back(4);
        done = true;
      }
    } else {
      for (std::uint64_t x = 0; x < size && !done; ++x) {
        std::uint64_t y = x ^ t;
        int a = pair_of[x], b = pair_of[y];
        if (used[a] || used[b]) continue;
        bool xr = r[a] == x, yr = r[b] == y;
        used[a] = used[b] = true;
        out.partition.pairs[i] = {vec(x), vec(y)};
        out.partition.pairs[i + 1] = {vec(x ^ v), vec(y ^ v)};
        out.cases.push_back(xr && yr ? 1 : (!xr && !yr ? 2 : 3));
        done = true;
      }
    }
    if (!done)
      throw std::logic_error("no unused base pairs realize target " +
                             inst.targets[i].str());
  }
  size_t slot = 0;
  for (size_t m = 0; m < r.size(); ++m)
    if (!used[m]) {
      if (slot >= prefix) throw std::logic_error("base pair count mismatch");
      out.partition.pairs[slot++] = {vec(r[m]), vec(s[m])};
    }
  if (slot != prefix) throw std::logic_error("base pair count mismatch");
  assert_valid(inst, out.partition);
  return out;
}

namespace {

struct Matcher {
  int n;
  std::vector<std::uint64_t> values;  // distinct targets, increasing
  std::vector<int> remaining;
  std::vector<bool> matched;
  std::vector<std::pair<std::uint64_t, int>> chosen;  // (x, value index)

  bool solve(std::uint64_t from) {
    std::uint64_t size = matched.size();
    std::uint64_t x = from;
    while (x < size && matched[x]) ++x;
    if (x == size) return true;
    matched[x] = true;
    for (size_t k = 0; k < values.size(); ++k) {
      if (!remaining[k]) continue;
      std::uint64_t y = x ^ values[k];
      if (matched[y]) continue;
      matched[y] = true;
      --remaining[k];
      chosen.push_back({x, static_cast<int>(k)});
      if (solve(x + 1)) return true;
      chosen.pop_back();
      ++remaining[k];
      matched[y] = false;
    }
    matched[x] = false;
    return false;
  }
};

}  // namespace

std::optional<PairPartition> brute_force_pairing(const DifferenceInstance& inst,
                                                 int max_n) {
  check_instance(inst);
  if (inst.n > max_n)
    throw ResourceLimitError("pairing oracle limited to n <= " +
                             std::to_string(max_n));
  std::map<std::uint64_t, int> counts;
  for (const auto& t : inst.targets) ++counts[t.bits()];
  Matcher m{inst.n, {}, {}, std::vector<bool>(std::size_t{1} << inst.n), {}};
  for (auto [value, c] : counts) {
    m.values.push_back(value);
    m.remaining.push_back(c);
  }
  if (!m.solve(0)) return std::nullopt;

  std::vector<std::vector<std::pair<GF2Vector, GF2Vector>>> by_value(
      m.values.size());
  for (auto [x, k] : m.chosen)
    by_value[k].push_back({GF2Vector(inst.n, x),
                           GF2Vector(inst.n, x ^ m.values[k])});
  PairPartition out;
  out.n = inst.n;
  std::vector<size_t> next(m.values.size(), 0);
  for (const auto& t : inst.targets) {
    size_t k = std::lower_bound(m.values.begin(), m.values.end(), t.bits()) -
               m.values.begin();
    out.pairs.push_back(by_value[k][next[k]++]);
  }
  assert_valid(inst, out);
  return out;
}

ScanReport scan_pairing_conjecture(int n, const ScanOptions& options) {
  if (n < 2) throw PreconditionError("scan needs n >= 2");
  if (options.exhaustive && n > 4 && !(options.allow_long && n == 5))
    throw ResourceLimitError("exhaustive scans run only for n <= 4 (n = 5 "
                             "as a long job)");
  if (!options.exhaustive && n > 6)
    throw ResourceLimitError("sampled scans run only for n <= 6");
  const int picks = 1 << (n - 2);
  const std::uint64_t top = (std::uint64_t{1} << n) - 1;

  std::vector<std::vector<std::uint64_t>> batch;
  if (options.exhaustive) {
    std::vector<std::uint64_t> cur(picks, 1);
    for (;;) {
      batch.push_back(cur);
      int i = picks - 1;
      while (i >= 0 && cur[i] == top) --i;
      if (i < 0) break;
      ++cur[i];
      for (int j = i + 1; j < picks; ++j) cur[j] = cur[i];
    }
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::uint64_t> pick(1, top);
    for (std::uint64_t s = 0; s < options.samples; ++s) {
      std::vector<std::uint64_t> cur(picks);
      for (auto& x : cur) x = pick(rng);
      std::sort(cur.begin(), cur.end());
      batch.push_back(std::move(cur));
    }
  }

  auto make = [n](const std::vector<std::uint64_t>& values) {
    DifferenceInstance inst{n, {}};
    for (auto x : values) {
      inst.targets.push_back(GF2Vector(n, x));
      inst.targets.push_back(GF2Vector(n, x));
    }
    return inst;
  };
  std::vector<char> ok(batch.size(), 0);
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i; (i = next.fetch_add(1)) < batch.size();)
      ok[i] = brute_force_pairing(make(batch[i]), std::max(n, 5)).has_value();
  };
  int threads = std::max(1, options.threads);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  ScanReport rep;
  rep.n = n;
  rep.exhaustive = options.exhaustive;
  rep.seed = options.seed;
  rep.tried = batch.size();
  for (size_t i = 0; i < batch.size(); ++i) {
    if (ok[i])
      ++rep.solved;
    else
      rep.unsolved.push_back(make(batch[i]));
  }
  return rep;
}

DifferenceInstance pairing_targets(const Certificate& tree,
                                   const std::vector<int>& attach,
                                   std::vector<int>* owner) {
  const Graph& g = tree.graph;
  std::map<int, int> mult;
  for (int v : attach) {
    if (v < 0 || v >= g.num_vertices())
      throw PreconditionError("attach vertex " + std::to_string(v) +
                              " out of range");
    ++mult[v];
  }
  for (auto [v, c] : mult)
    if (c % 2)
      throw PreconditionError("vertex " + std::to_string(v) +
                              " has odd multiplicity " + std::to_string(c));
  std::vector<std::pair<int, int>> order(mult.begin(), mult.end());
  std::stable_sort(order.begin(), order.end(),
                   [](auto a, auto b) { return a.second > b.second; });
  DifferenceInstance inst{tree.labeling.dim, {}};
  if (owner) owner->clear();
  for (auto [v, c] : order)
    for (int i = 0; i < c; ++i) {
      inst.targets.push_back(tree.labeling.vertex_labels[v]);
      if (owner) owner->push_back(v);
    }
  return inst;
}

namespace {

void check_base_tree(const Certificate& tree, const std::vector<int>& attach) {
  const Graph& g = tree.graph;
  if (!g.is_tree() || !g.all_degrees_odd())
    throw PreconditionError("base must be an odd tree");
  auto r = verify(tree);
  if (!r.ok()) throw PreconditionError("base labeling fails: " + r.detail);
  if (static_cast<int>(attach.size()) != g.num_vertices())
    throw PreconditionError("attach multiset must have " +
                            std::to_string(g.num_vertices()) + " entries");
}

}  // namespace

Certificate extend_tree_with_partition(const Certificate& tree,
                                       const std::vector<int>& attach,
                                       const PairPartition& partition) {
  check_base_tree(tree, attach);
  std::vector<int> owner;
  DifferenceInstance inst = pairing_targets(tree, attach, &owner);
  std::string why = partition_problem(inst, partition);
  if (!why.empty())
    throw PreconditionError("partition does not fit the attach list: " + why);

  const Graph& g = tree.graph;
  GF2Vector zero(1, 0), one(1, 1);
  std::vector<GF2Vector> labels;
  std::vector<Edge> edges = g.edges();
  for (const auto& x : tree.labeling.vertex_labels)
    labels.push_back(extend(x, zero));
  for (size_t i = 0; i < partition.pairs.size(); ++i) {
    edges.push_back({owner[i], static_cast<int>(labels.size())});
    labels.push_back(extend(partition.pairs[i].first, one));
  }
  Certificate out;
  out.graph = Graph(static_cast<int>(labels.size()), std::move(edges));
  out.labeling = derive_edge_labels(out.graph, labels);
  for (size_t i = 0; i < partition.pairs.size(); ++i)
    if (out.labeling.edge_labels[g.num_edges() + i] !=
        extend(partition.pairs[i].second, one))
      throw std::logic_error("pendant edge label differs from its pair");
  auto r = verify(out);
  if (!r.ok()) throw std::logic_error("extended tree fails: " + r.detail);
  if (!out.graph.all_degrees_odd())
    throw std::logic_error("extended tree has an even-degree vertex");
  out.header = {"tree extended by " + std::to_string(attach.size()) +
                " pendant vertices"};
  return out;
}

Certificate extend_tree_via_pairing(const Certificate& tree,
                                    const std::vector<int>& attach) {
  check_base_tree(tree, attach);
  DifferenceInstance inst = pairing_targets(tree, attach);
  if (inst.theorem_form())
    return extend_tree_with_partition(tree, attach, theorem4_partition(inst));
  std::optional<PairPartition> p;
  try {
    p = brute_force_pairing(inst);
  } catch (const ResourceLimitError&) {
    throw ResourceLimitError("pairing instance is beyond the oracle limit and "
                             "not in theorem form");
  }
  if (!p) throw NoLabelingError("pairing instance has no solution");
  return extend_tree_with_partition(tree, attach, *p);
}

}  // namespace setseq
