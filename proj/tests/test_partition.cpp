#include <doctest.h>

#include <random>
#include <set>

#include "setseq/error.hpp"
#include "setseq/golden.hpp"
#include "setseq/partition.hpp"
#include "setseq/trees.hpp"

using namespace setseq;

namespace {

DifferenceInstance inst(int n, std::initializer_list<const char*> t) {
  DifferenceInstance d{n, {}};
  for (const char* s : t) d.targets.push_back(GF2Vector::parse(s));
  return d;
}

}  // namespace

TEST_CASE("instance forms") {
  CHECK(inst(2, {"01", "01"}).theorem_form());
  CHECK(inst(3, {"001", "001", "110", "110"}).theorem_form());
  CHECK_FALSE(inst(3, {"001", "110", "001", "110"}).pairing_form());
  CHECK_FALSE(inst(4, {"0011", "0011", "1011", "1011", "0101", "0101",
                       "1101", "1101"})
                  .theorem_form());
  CHECK_THROWS_AS(check_instance(inst(2, {"01"})), PreconditionError);
  CHECK_THROWS_AS(check_instance(inst(2, {"01", "00"})), PreconditionError);
  CHECK_THROWS_AS(check_instance(inst(1, {"1"})), PreconditionError);
}

TEST_CASE("small constructions") {
  for (auto d : {inst(2, {"01", "01"}), inst(2, {"11", "11"}),
                 inst(3, {"001", "001", "110", "110"})}) {
    TracedPartition t = theorem4_partition_traced(d);
    CHECK(partition_problem(d, t.partition).empty());
    CHECK(t.partition.pairs.size() == d.targets.size());
  }
}

TEST_CASE("partition_problem reports defects") {
  DifferenceInstance d = inst(2, {"01", "01"});
  PairPartition good = theorem4_partition(d);
  REQUIRE(partition_problem(d, good).empty());
  PairPartition swapped = good;
  swapped.pairs[0].first = swapped.pairs[1].first;
  CHECK_FALSE(partition_problem(d, swapped).empty());
  PairPartition short_one = good;
  short_one.pairs.pop_back();
  CHECK_FALSE(partition_problem(d, short_one).empty());
  CHECK_FALSE(partition_problem(inst(2, {"11", "11"}), good).empty());
}

TEST_CASE("construction on every n=4 theorem-form instance") {
  std::set<int> cases;
  int count = 0;
  for (std::uint64_t v = 1; v < 16; ++v)
    for (std::uint64_t a = 1; a < 16; ++a)
      for (std::uint64_t b = 1; b < 16; ++b) {
        DifferenceInstance d{4, {}};
        for (int i = 0; i < 4; ++i) d.targets.push_back(GF2Vector(4, v));
        for (auto x : {a, a, b, b}) d.targets.push_back(GF2Vector(4, x));
        TracedPartition t = theorem4_partition_traced(d);
        CHECK(partition_problem(d, t.partition).empty());
        CHECK(brute_force_pairing(d).has_value());
        cases.insert(t.cases.begin(), t.cases.end());
        ++count;
      }
  CHECK(count == 3375);
  CHECK(cases == std::set<int>{1, 2, 3, 4});
}

TEST_CASE("construction at n=5 and n=6") {
  std::mt19937_64 rng(7);
  for (int n : {5, 6}) {
    std::uniform_int_distribution<std::uint64_t> pick(1, (1u << n) - 1);
    for (int trial = 0; trial < 200; ++trial) {
      DifferenceInstance d{n, {}};
      auto v = pick(rng);
      for (int i = 0; i < (1 << (n - 2)); ++i) d.targets.push_back(GF2Vector(n, v));
      while (d.targets.size() < (size_t{1} << (n - 1))) {
        auto x = pick(rng);
        d.targets.push_back(GF2Vector(n, x));
        d.targets.push_back(GF2Vector(n, x));
      }
      CHECK(partition_problem(d, theorem4_partition(d)).empty());
    }
  }
}

TEST_CASE("theorem form is required") {
  CHECK_THROWS_AS(theorem4_partition(inst(3, {"001", "110", "110", "110"})),
                  PreconditionError);
  CHECK_THROWS_AS(theorem4_partition(inst(3, {"001", "001", "110", "011"})),
                  PreconditionError);
}

TEST_CASE("oracle") {
  CHECK(brute_force_pairing(inst(2, {"11", "11"})).has_value());
  // Pair sums would total 11, but F_2^2 sums to 00.
  CHECK_FALSE(brute_force_pairing(inst(2, {"01", "10"})).has_value());
  auto p = brute_force_pairing(inst(3, {"011", "011", "101", "101"}));
  REQUIRE(p);
  CHECK(partition_problem(inst(3, {"011", "011", "101", "101"}), *p).empty());
  DifferenceInstance big{6, std::vector<GF2Vector>(32, GF2Vector(6, 1))};
  CHECK_THROWS_AS(brute_force_pairing(big), ResourceLimitError);
}

TEST_CASE("scans") {
  ScanOptions o;
  for (auto [n, total] : {std::pair{2, 3}, {3, 28}, {4, 3060}}) {
    ScanReport r = scan_pairing_conjecture(n, o);
    CHECK(r.tried == std::uint64_t(total));
    CHECK(r.solved == r.tried);
    CHECK(r.unsolved.empty());
  }
  o.threads = 4;
  CHECK(scan_pairing_conjecture(4, o).solved == 3060);
  CHECK_THROWS_AS(scan_pairing_conjecture(5, ScanOptions{}), ResourceLimitError);
  ScanOptions sampled;
  sampled.exhaustive = false;
  sampled.samples = 50;
  sampled.seed = 11;
  ScanReport a = scan_pairing_conjecture(5, sampled);
  CHECK(a.tried == 50);
  CHECK(a.seed == 11);
  CHECK(a.solved == 50);
  CHECK_THROWS_AS(scan_pairing_conjecture(7, sampled), ResourceLimitError);
}

TEST_CASE("pairing_targets orders by multiplicity") {
  Certificate r = golden::tree8r();
  std::vector<int> owner;
  DifferenceInstance d =
      pairing_targets(r, {7, 0, 0, 0, 0, 7, 5, 5}, &owner);
  CHECK(d.n == 4);
  CHECK(owner == std::vector<int>{0, 0, 0, 0, 5, 5, 7, 7});
  CHECK(d.targets[0].str() == "0011");
  CHECK(d.theorem_form());
  CHECK_THROWS_AS(pairing_targets(r, {0, 0, 0, 1, 2, 2, 2, 2}), PreconditionError);
}

TEST_CASE("extension doubles an odd tree") {
  Certificate star = golden::star4();
  Certificate out = extend_tree_via_pairing(star, {0, 0, 0, 0});
  CHECK(out.graph.num_vertices() == 8);
  CHECK(out.graph.is_tree());
  CHECK(out.graph.all_degrees_odd());
  CHECK(verify(out).ok());
  CHECK_THROWS_AS(extend_tree_via_pairing(star, {0, 0, 0, 1}), PreconditionError);
}

TEST_CASE("extending R by pairs at A, F, G, H") {
  Certificate r = golden::tree8r();
  std::vector<int> attach{0, 0, 5, 5, 6, 6, 7, 7};
  // A..P as 0..15.
  Graph t(16, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 6}, {2, 7}, {2, 8},
               {3, 9}, {6, 10}, {6, 11}, {7, 12}, {7, 13}, {8, 14}, {8, 15}});
  REQUIRE(t.is_tree());

  DifferenceInstance d = pairing_targets(r, attach);
  CHECK(d.targets == inst(4, {"0011", "0011", "1011", "1011", "0101", "0101",
                              "1101", "1101"})
                         .targets);

  PairPartition witness{4, {}};
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
           {"0100", "0111"}, {"0101", "0110"}, {"0000", "1011"},
           {"0001", "1010"}, {"1000", "1101"}, {"1001", "1100"},
           {"0010", "1111"}, {"0011", "1110"}})
    witness.pairs.emplace_back(GF2Vector::parse(a), GF2Vector::parse(b));
  REQUIRE(partition_problem(d, witness).empty());

  for (const Certificate& out : {extend_tree_with_partition(r, attach, witness),
                                 extend_tree_via_pairing(r, attach)}) {
    CHECK(out.graph.num_vertices() == 16);
    CHECK(out.labeling.dim == 5);
    CHECK(verify(out).ok());
    CHECK(canonical_form(out.graph) == canonical_form(t));
  }
}
