#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tic/bigint.hpp"
#include "tic/family.hpp"
#include "tic/solver.hpp"

namespace tic {

// Constant-weight binary code, bijective with a k-uniform family through
// characteristic vectors. Words are n-character 0/1 strings; the leftmost
// position corresponds to element 1.
struct ConstantWeightCode {
  int n = 0;
  int k = 0;
  std::vector<std::string> words;
};

enum class PairConvention { kOrderedDistinct, kUnordered };

struct AverageDistance {
  Rational mean;
  BigInt total;
  BigInt pair_count;
  PairConvention convention = PairConvention::kOrderedDistinct;
};

struct MinDistanceResult {
  int n = 0;
  int k = 0;
  BigInt m;
  BigInt total;
  Rational mean;  // ordered-distinct convention
  ConstantWeightCode witness;
  SolveResult solve;
  // Lower bound on the total distance derived from the closed-form
  // intersection bound, when that bound applies at this size. Sound exactly
  // when it does not exceed the true minimum total.
  std::optional<Rational> total_lower_bound;
  std::optional<bool> lower_bound_sound;
};

ConstantWeightCode to_code(const SetFamily& f);
SetFamily from_code(const ConstantWeightCode& code);

// Sum of |A xor B| over ordered pairs of words; equals 2k|F|^2 - 2 I(F).
BigInt total_hamming_distance(const SetFamily& f);

AverageDistance average_distance(const SetFamily& f, PairConvention convention);

// Exact minimum average Hamming distance over all codes of M distinct words
// of length n and weight k, with a witness code attaining it.
MinDistanceResult min_avg_distance(int n, int k, const BigInt& m,
                                   const SolveOptions& options = {});

}  // namespace tic
