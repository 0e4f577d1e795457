#pragma once

// k-uniform set families on [n] and the total-intersection functionals:
// I(F) = sum over ordered member pairs of |A ∩ B| = sum over x of deg(x)^2,
// its t-set generalization, covers, links, and the (r, delta) size
// decomposition M = sum_{i=t}^{t+r-1} C(n-i,k-t) + delta*C(n-(t+r),k-t).

#include <cstdint>
#include <optional>
#include <vector>

#include "tic/bigint.hpp"
#include "tic/combinatorics.hpp"

namespace tic {

struct SetFamily {
  int n = 0;
  int k = 0;
  std::vector<KSubset> sets;  // lex-sorted, distinct

  std::size_t size() const { return sets.size(); }
  bool contains(const KSubset& a) const;
  friend bool operator==(const SetFamily&, const SetFamily&) = default;
};

// Validates uniformity and distinctness, sorts members into lex order.
SetFamily make_family(int n, int k, std::vector<KSubset> sets);

using DegreeVector = std::vector<std::int64_t>;  // deg[x-1] for x in [n]

DegreeVector degree_vector(const SetFamily& f);

// Members containing every element of the (sorted, distinct) tuple a.
BigInt t_degree(const SetFamily& f, const std::vector<int>& a);

// I(F) via the degree identity.
BigInt total_intersection(const SetFamily& f);

// Same value by the O(M^2 k) pairwise definition; debug cross-check.
BigInt total_intersection_pairwise(const SetFamily& f);

// I(A, F) = sum_{B in F} |A ∩ B| = sum_{x in A} deg(x).
BigInt pairwise_with_set(const SetFamily& f, const KSubset& a);

// I(F1, F2) = sum_x deg1(x) * deg2(x); cross(F, F) = I(F).
BigInt cross_total_intersection(const SetFamily& f1, const SetFamily& f2);

// sum over t-sets A of |F(A)|^2 = sum over ordered pairs of C(|F1∩F2|, t).
BigInt total_t_intersection(const SetFamily& f, int t);
BigInt total_t_intersection_pairwise(const SetFamily& f, int t);

// Every two members share at least t elements.
bool is_t_intersecting(const SetFamily& f, int t);

// All t-sets T with deg(T) = C(n-t, k-t), i.e. whose full star lies in F.
std::vector<std::vector<int>> find_full_t_stars(const SetFamily& f, int t);

// Smallest U (|U| <= max_size) meeting every member in >= s elements;
// ties by lexicographically least U. Empty family: U = {}.
std::optional<std::vector<int>> min_s_cover(const SetFamily& f, int s,
                                            int max_size);

// {A \ {x} : A in F} with elements above x shifted down, on [n-1].
// Requires x in every member. I(link) = I(F) - |F|^2.
SetFamily link(const SetFamily& f, int x);

struct SizeDecomposition {
  int t = 1;
  long r = 0;
  Rational delta;  // in (0, 1]
  BigInt m;
};

// Canonical (r, delta): r maximal with strict level-prefix sum < M, so a
// size that exactly fills r levels reports (r-1, delta = 1).
SizeDecomposition decompose_size(int n, int k, int t, const BigInt& m);

// Exact reconstruction of M from the decomposition.
BigInt recompose_size(int n, int k, const SizeDecomposition& d);

// sum_{i=t}^{t+r-1} C(n-i, k-t), the size of the r-level segment.
BigInt level_prefix_sum(int n, int k, int t, long r);

}  // namespace tic
