#pragma once

// k-element subsets of {1,..,n} in colex-free, plain lexicographic order:
// a subset is stored as its strictly increasing element vector, and A
// precedes B exactly when that vector compares lexicographically smaller.
// Equivalently the smallest element of the symmetric difference lies in A.

#include <compare>
#include <cstdint>
#include <vector>

#include "tic/bigint.hpp"

namespace tic {

struct KSubset {
  int n = 0;                // ground set size
  std::vector<int> elems;   // strictly increasing, values in [1, n]

  int k() const { return static_cast<int>(elems.size()); }
  bool contains(int x) const;
  friend bool operator==(const KSubset&, const KSubset&) = default;
};

// Validates and normalizes (sorts, rejects duplicates / out-of-range).
KSubset make_ksubset(int n, std::vector<int> elems);

// Exact binomial coefficient; 0 whenever k < 0 or k > n, and n must be >= 0.
BigInt binom(long n, long k);

// 64-bit fast path used in the search inner loops. Throws
// ResourceLimitError instead of overflowing.
std::uint64_t binom_u64(long n, long k);

// Lexicographic comparison of same-shape subsets.
std::strong_ordering lex_compare(const KSubset& a, const KSubset& b);
bool lex_less(const KSubset& a, const KSubset& b);

// 0-based position of `a` in the lex order of all C(n,k) subsets.
BigInt lex_rank(const KSubset& a);

// Inverse of lex_rank; rank must lie in [0, C(n,k)).
KSubset lex_unrank(int n, int k, const BigInt& rank);

std::uint64_t lex_rank_u64(const KSubset& a);
KSubset lex_unrank_u64(int n, int k, std::uint64_t rank);

// |A ∩ B| by a merge walk; shapes may differ.
int intersection_size(const KSubset& a, const KSubset& b);

// Bitmask view for n <= 64 (bit x-1 set for element x).
std::uint64_t to_mask(const KSubset& a);
KSubset from_mask(int n, int k, std::uint64_t mask);

}  // namespace tic
