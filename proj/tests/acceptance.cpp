// Prints one line per acceptance criterion and exits nonzero if any fails.
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "oracles.hpp"
#include "setseq/classify.hpp"
#include "setseq/construct.hpp"
#include "setseq/error.hpp"
#include "setseq/glue.hpp"
#include "setseq/golden.hpp"
#include "setseq/partition.hpp"
#include "setseq/search.hpp"
#include "setseq/splice.hpp"
#include "setseq/trees.hpp"

using namespace setseq;
using Clock = std::chrono::steady_clock;

namespace {

double since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Check {
  std::ostringstream why;
  bool ok = true;
  void require(bool cond, const std::string& msg) {
    if (!cond && ok) {
      ok = false;
      why << msg;
    }
  }
  void note(const std::string& msg) { why << (why.tellp() ? "; " : "") << msg; }
};

bool ac1(Check& c) {
  for (const auto& [name, cert] : golden::all()) {
    auto t = Clock::now();
    c.require(verify(cert).ok(), name + " fails");
    c.require(since(t) < 1e-3, name + " took over 1 ms");
    for (size_t i = 0; i < cert.labeling.vertex_labels.size(); ++i)
      for (std::uint64_t flip = 1; flip <= dim_mask(cert.labeling.dim); ++flip) {
        Certificate bad = cert;
        bad.labeling.vertex_labels[i] =
            GF2Vector(cert.labeling.dim, bad.labeling.vertex_labels[i].bits() ^ flip);
        c.require(!verify(bad).ok(), name + " accepts a perturbed vertex label");
      }
    for (size_t i = 0; i < cert.labeling.edge_labels.size(); ++i)
      for (std::uint64_t flip = 1; flip <= dim_mask(cert.labeling.dim); ++flip) {
        Certificate bad = cert;
        bad.labeling.edge_labels[i] =
            GF2Vector(cert.labeling.dim, bad.labeling.edge_labels[i].bits() ^ flip);
        c.require(!verify(bad).ok(), name + " accepts a perturbed edge label");
      }
  }
  return c.ok;
}

bool ac2(Check& c) {
  for (int n : {4, 8}) {
    auto r = find_labeling(path_graph(n));
    c.require(r.outcome == SearchOutcome::kExhaustedNone,
              "P" + std::to_string(n) + " not exhausted");
    if (n == 8) c.require(r.elapsed_seconds < 60, "P8 over 60 s");
  }
  for (int n : {2, 16}) {
    auto r = find_labeling(path_graph(n));
    c.require(r.outcome == SearchOutcome::kFound && r.labeling &&
                  verify(path_graph(n), *r.labeling).ok(),
              "P" + std::to_string(n) + " has no verified certificate");
    if (n == 16) c.require(r.elapsed_seconds < 600, "P16 over 10 min");
  }
  return c.ok;
}

bool ac3(Check& c) {
  c.require(enumerate_odd_trees(4).trees.size() == 1, "4-vertex count");
  c.require(enumerate_odd_trees(8).trees.size() == 3, "8-vertex count");
  for (int n : {4, 8}) {
    auto s = classify(enumerate_odd_trees(n), {});
    c.require(s.found == s.entries.size(), "unlabeled odd tree on " +
                                               std::to_string(n) + " vertices");
  }
  SearchOptions o;
  o.threads = std::max(1u, std::thread::hardware_concurrency());
  auto s = classify(enumerate_odd_trees(16), o);
  c.require(s.aborted == 0, "aborted searches on 16 vertices");
  c.note("16 vertices: " + std::to_string(s.entries.size()) + " trees, found " +
         std::to_string(s.found) + ", exhausted " + std::to_string(s.exhausted));
  return c.ok;
}

bool ac4(Check& c) {
  namespace fs = std::filesystem;
  fs::path cache = fs::temp_directory_path() / "setseq-acceptance-cache";
  PathSource src;
  src.cache_dir = cache;
  path_labeling(4, src);  // fills the cache
  auto good = [](const Certificate& cert) {
    return verify(cert).ok() && cert.graph.is_tree() &&
           cert.graph.all_degrees_odd();
  };
  auto t = Clock::now();
  Certificate ck3 = build_c_k3(5, src);
  c.require(since(t) < 0.01, "c_k3(5) over 10 ms");
  c.require(good(ck3) && ck3.graph.num_vertices() == 32, "c_k3(5) fails");

  t = Clock::now();
  Certificate end = build_caterpillar({6, 5, EndVertex{}}, src);
  c.require(since(t) < 0.01, "case 1 over 10 ms");
  c.require(good(end) && end.graph.num_vertices() == 64, "case 1 fails");
  // 16 spine vertices, 3 pendants on each of the 14 interior ones, 6 at the end.
  std::map<int, int> pendants;
  for (int v = 16; v < end.graph.num_vertices(); ++v) {
    c.require(end.graph.degree(v) == 1, "non-leaf outside the spine");
    ++pendants[end.graph.neighbors(v).front()];
  }
  int interior3 = 0;
  for (int s = 1; s <= 14; ++s) interior3 += pendants[s] == 3;
  c.require(interior3 == 14 && pendants[15] == 6 && pendants.size() == 15 &&
                16 + 3 * 14 + 6 == end.graph.num_vertices(),
            "vertex-count identity");
  int built = 2;
  for (int h = 2; h <= 15; ++h) {
    t = Clock::now();
    Certificate cert = build_caterpillar({6, 5, Interior{h}}, src);
    c.require(since(t) < 0.01, "case 2 over 10 ms at h=" + std::to_string(h));
    c.require(good(cert) && cert.graph.num_vertices() == 64,
              "case 2 fails at h=" + std::to_string(h));
    ++built;
  }
  c.require(built == 16, "construction count");
  return c.ok;
}

bool ac5(Check& c) {
  auto t = Clock::now();
  std::vector<LabeledTree> options;
  for (const Certificate& cert :
       {golden::star8(), golden::tree8r(), golden::caterpillar8()}) {
    Bipartition b = *two_coloring(cert.graph);
    options.push_back({cert, b});
    options.push_back({cert, b.flipped()});
  }
  int inputs = 0, outputs = 0;
  const int k = static_cast<int>(options.size());
  for (int code = 0; code < k * k * k * k; ++code) {
    FourTreeInput in;
    for (int c2 = 0, x = code; c2 < 4; ++c2, x /= k) in[c2] = options[x % k];
    try {
      check_input(in, true);
    } catch (const PreconditionError&) {
      continue;
    }
    ++inputs;
    std::array<int, 4> p{0, 1, 2, 3};
    do {
      for (const auto& e : in[p[1]].cert.labeling.edge_labels)
        for (int set = 1; set <= 3; ++set) {
          SpliceRoles r{p[0], p[1], p[2], p[3], -1};
          Certificate out = splice_four(in, pattern_choice(in, set, e, r));
          c.require(verify(out).ok(), "splice output fails");
          ++outputs;
        }
    } while (std::next_permutation(p.begin(), p.end()));
  }
  c.require(inputs > 0, "no matching inputs");

  Certificate r = golden::tree8r(), s = golden::caterpillar8();
  Bipartition br = two_coloring(r.graph)->flipped();
  Bipartition bs = two_coloring(s.graph)->flipped();
  FourTreeInput mixed{{{r, br}, {r, br}, {r, br}, {s, bs}}};
  int x = br.class_x().front();
  SpliceChoice choice;
  choice.set_id = 1;
  choice.ops = {{{0, x, 1, {0, 1}}, {0, x, 3, {0, 1}}, {0, x, 2, {0, 1}}}};
  SpliceOptions opt;
  opt.check_label_sets = false;
  opt.scheme = {{0b00, 0b01, 0b11, 0b10}, {0b00, 0b10, 0b01, 0b11}};
  bool collided = false;
  try {
    splice_four(mixed, choice, opt);
  } catch (const LabelCollisionError& e) {
    const auto& rep = e.repeated();
    collided = std::find(rep.begin(), rep.end(), GF2Vector::parse("011110")) !=
               rep.end();
  }
  c.require(collided, "mixed input does not collide at 011110");
  c.require(since(t) < 30, "over 30 s");
  c.note(std::to_string(inputs) + " inputs, " + std::to_string(outputs) +
         " splices");
  return c.ok;
}

bool ac6(Check& c) {
  auto t = Clock::now();
  ScanOptions o;
  o.threads = std::max(1u, std::thread::hardware_concurrency());
  for (auto [n, total] : {std::pair{2, 3}, {3, 28}, {4, 3060}}) {
    ScanReport r = scan_pairing_conjecture(n, o);
    c.require(r.tried == std::uint64_t(total) && r.solved == r.tried,
              "exhaustive scan at n=" + std::to_string(n));
  }
  c.require(since(t) < 60, "exhaustive scans over 60 s");
  t = Clock::now();
  o.exhaustive = false;
  o.samples = 1000;
  o.seed = 1;
  ScanReport r = scan_pairing_conjecture(5, o);
  c.require(r.tried == 1000 && r.solved == 1000, "n=5 samples");
  c.require(since(t) < 120, "n=5 samples over 120 s");
  return c.ok;
}

bool ac7(Check& c) {
  auto t = Clock::now();
  std::set<int> cases;
  int count = 0;
  for (std::uint64_t k = 1; k < 16; ++k)
    for (std::uint64_t a = 1; a < 16; ++a)
      for (std::uint64_t b = 1; b < 16; ++b) {
        DifferenceInstance d{4, {}};
        for (int i = 0; i < 4; ++i) d.targets.push_back(GF2Vector(4, k));
        for (auto x : {a, a, b, b}) d.targets.push_back(GF2Vector(4, x));
        TracedPartition tp = theorem4_partition_traced(d);
        c.require(partition_problem(d, tp.partition).empty(),
                  "invalid partition");
        c.require(brute_force_pairing(d).has_value(), "oracle disagrees");
        cases.insert(tp.cases.begin(), tp.cases.end());
        ++count;
      }
  c.require(count == 3375, "instance count");
  c.require(cases == std::set<int>{1, 2, 3, 4}, "not all four cases used");
  c.require(since(t) < 60, "over 60 s");
  return c.ok;
}

bool ac8(Check& c) {
  auto t = Clock::now();
  Certificate r = golden::tree8r();
  std::vector<int> attach{0, 0, 5, 5, 6, 6, 7, 7};
  Graph expected(16, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 6}, {2, 7},
                      {2, 8}, {3, 9}, {6, 10}, {6, 11}, {7, 12}, {7, 13},
                      {8, 14}, {8, 15}});
  Certificate out = extend_tree_via_pairing(r, attach);
  c.require(verify(out).ok() && out.graph.num_vertices() == 16,
            "extension fails");
  c.require(canonical_form(out.graph) == canonical_form(expected),
            "extension has the wrong shape");
  DifferenceInstance d = pairing_targets(r, attach);
  PairPartition w{4, {}};
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
           {"0100", "0111"}, {"0101", "0110"}, {"0000", "1011"},
           {"0001", "1010"}, {"1000", "1101"}, {"1001", "1100"},
           {"0010", "1111"}, {"0011", "1110"}})
    w.pairs.emplace_back(GF2Vector::parse(a), GF2Vector::parse(b));
  c.require(partition_problem(d, w).empty(), "witness rejected");
  c.require(verify(extend_tree_with_partition(r, attach, w)).ok(),
            "witness extension fails");
  c.require(since(t) < 1, "over 1 s");
  return c.ok;
}

bool ac9(Check& c) {
  std::map<std::string, int> done;
  std::set<std::string> bases_per_case[4];
  for (const auto& [name, cert] : golden::all()) {
    std::vector<int> leaves;
    for (int v = 0; v < cert.graph.num_vertices(); ++v)
      if (cert.graph.degree(v) == 1) leaves.push_back(v);
    for (int k = 0; k < 4; ++k)
      for (bool flip : {false, true}) {
        Bipartition b = *two_coloring(cert.graph);
        if (flip) b = b.flipped();
        for (int x : leaves)
          for (int y : leaves)
            for (int z : leaves) {
              GlueSpec spec{static_cast<GlueCase>(k), {x, y, z}};
              try {
                check_glue_spec(cert.graph, b, spec);
              } catch (const PreconditionError&) {
                continue;
              }
              auto t = Clock::now();
              GlueResult r = glue_four(cert.graph, cert.labeling, b, spec);
              c.require(since(t) < 1, "glue over 1 s");
              std::set<std::string> conn;
              for (const auto& v : r.connectors) conn.insert(v.str());
              std::string z0(cert.labeling.dim, '0');
              c.require(verify(r.cert).ok() &&
                            conn == std::set<std::string>{z0 + "01", z0 + "10",
                                                          z0 + "11"},
                        name + " glue fails");
              bases_per_case[k].insert(name);
              ++done[glue_case_name(spec.kind)];
            }
      }
  }
  for (int k = 0; k < 4; ++k)
    c.require(bases_per_case[k].size() >= 2,
              std::string("case ") + glue_case_name(static_cast<GlueCase>(k)) +
                  " on fewer than two bases");
  std::string counts;
  for (auto& [k, v] : done) counts += (counts.empty() ? "" : ", ") + k + " " + std::to_string(v);
  c.note(counts);
  return c.ok;
}

bool ac10(Check& c) {
  auto t = Clock::now();
  std::vector<Graph> graphs = enumerate_trees(4, false).trees;
  for (auto& g : enumerate_trees(8, false).trees) graphs.push_back(g);
  int found = 0;
  for (const Graph& g : graphs) {
    SearchOptions sym, plain;
    plain.symmetry = false;
    auto a = find_labeling(g, sym).outcome;
    auto b = find_labeling(g, plain).outcome;
    bool naive = oracle::naive_labeling_exists(g);
    c.require(a != SearchOutcome::kAborted && a == b &&
                  (a == SearchOutcome::kFound) == naive,
              "verdicts differ");
    found += naive;
  }
  c.require(since(t) < 300, "over 5 min");
  c.note(std::to_string(graphs.size()) + " trees, " + std::to_string(found) +
         " labeled");
  return c.ok;
}

}  // namespace

int main() {
  std::vector<std::pair<const char*, std::function<bool(Check&)>>> criteria{
      {"golden verification", ac1},   {"path nonexistence", ac2},
      {"odd-tree census", ac3},       {"caterpillar constructions", ac4},
      {"splicing sweep", ac5},        {"pairing oracle scans", ac6},
      {"theorem-form partitions", ac7}, {"tree doubling", ac8},
      {"gluing", ac9},                {"search cross-check", ac10}};
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    auto t = Clock::now();
    bool ok = false;
    try {
      ok = criteria[i].second(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    ok = ok && c.ok;
    failed += !ok;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << i + 1 << ' '
              << criteria[i].first << " (" << std::fixed
              << std::setprecision(2) << since(t) << " s)";
    if (!c.why.str().empty()) std::cout << ": " << c.why.str();
    std::cout << std::endl;
  }
  return failed ? 1 : 0;
}
