#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "setseq/gf2.hpp"
#include "setseq/labeling.hpp"

namespace setseq {

// 2^(n-1) nonzero targets in F_2^n.
struct DifferenceInstance {
  int n = 0;
  std::vector<GF2Vector> targets;

  // targets[2i] == targets[2i+1] for all i.
  bool pairing_form() const;
  // Pairing form with the first 2^(n-2) targets equal.
  bool theorem_form() const;
};

// Throws PreconditionError unless n >= 2, there are 2^(n-1) targets, and all
// are nonzero of dimension n.
void check_instance(const DifferenceInstance& inst);

struct PairPartition {
  int n = 0;
  std::vector<std::pair<GF2Vector, GF2Vector>> pairs;
};

// Empty string if `p` covers F_2^n exactly once and pair i sums to target i;
// otherwise a description of the first problem.
std::string partition_problem(const DifferenceInstance& inst,
                              const PairPartition& p);

struct TracedPartition {
  PairPartition partition;
  // One tag (1..4) per equal pair of targets after the constant prefix.
  std::vector<int> cases;
};

// Pairs x with x ^ v for the repeated prefix target v, then peels off one
// equal pair of targets at a time from unused base pairs. Requires theorem
// form.
TracedPartition theorem4_partition_traced(const DifferenceInstance& inst);
inline PairPartition theorem4_partition(const DifferenceInstance& inst) {
  return theorem4_partition_traced(inst).partition;
}

inline constexpr int kDefaultOracleLimit = 5;

// Exact backtracking over perfect matchings of F_2^n with the target
// multiset. nullopt means no partition exists. Any target list is accepted.
std::optional<PairPartition> brute_force_pairing(
    const DifferenceInstance& inst, int max_n = kDefaultOracleLimit);

struct ScanOptions {
  bool exhaustive = true;
  // Exhaustive scans above n = 4 are refused unless this is set.
  bool allow_long = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct ScanReport {
  int n = 0;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t tried = 0;
  std::uint64_t solved = 0;
  std::vector<DifferenceInstance> unsolved;
};

// Pairing-form instances: every multiset of 2^(n-2) values (exhaustive) or
// seeded uniform draws (sampled), each value used twice.
ScanReport scan_pairing_conjecture(int n, const ScanOptions& options);

// Adds 2^n pendant vertices to an odd tree on 2^n vertices, attach[i] naming
// the vertex that receives the i-th one. Every vertex must appear an even
// number of times.
Certificate extend_tree_via_pairing(const Certificate& tree,
                                    const std::vector<int>& attach);

// Same, using a given partition of F_2^(n+1) whose i-th pair sums to the
// label of the vertex receiving pendant i. Pendants are grouped by vertex in
// the order returned by pairing_targets.
Certificate extend_tree_with_partition(const Certificate& tree,
                                       const std::vector<int>& attach,
                                       const PairPartition& partition);

// The difference instance built from attach: vertices ordered by
// multiplicity (largest first, ties by index), each repeated by its
// multiplicity. `owner` receives the vertex of each target.
DifferenceInstance pairing_targets(const Certificate& tree,
                                   const std::vector<int>& attach,
                                   std::vector<int>* owner = nullptr);

}  // namespace setseq
