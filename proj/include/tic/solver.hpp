#pragma once

// Exact MI(n,k,M): branch and bound over families encoded as strictly
// increasing lex-rank sequences (so member order never duplicates work),
// with a degree-cap relaxation bound for pruning.

#include <cstdint>
#include <optional>
#include <vector>

#include "tic/family.hpp"

namespace tic {

struct SolveOptions {
  bool enumerate_all = false;       // collect all optima up to isomorphism
  std::uint64_t node_limit = 100'000'000;
  int threads = 1;
};

struct SolveResult {
  int n = 0;
  int k = 0;
  std::uint64_t m = 0;
  BigInt mi_value;
  SetFamily witness;  // lex-first optimum over rank sequences
  std::optional<std::vector<SetFamily>> optima;  // canonical class reps
  std::uint64_t nodes_explored = 0;
  bool exact = true;  // false when the node limit cut the search short
  double wall_seconds = 0.0;
};

// Upper bound on the final I reachable from a partial family with the
// given degrees and slots_left members still to add: every element may
// gain at most min(slots_left, cap - deg) where cap = min(M, C(n-1,k-1)).
// With slots_left = 0 this is exactly the current I.
std::int64_t upper_bound_remaining(const DegreeVector& deg, int n, int k,
                                   std::uint64_t m, std::uint64_t slots_left);

SolveResult max_total_intersection(int n, int k, std::uint64_t m,
                                   const SolveOptions& options = {});

// Convenience: the canonical representatives of every optimal class.
std::vector<SetFamily> all_optimal_families(int n, int k, std::uint64_t m,
                                            const SolveOptions& options = {});

}  // namespace tic
