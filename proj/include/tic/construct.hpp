#pragma once

// The named families: lex segments L_{n,k}(M), generalized segments
// L_{n,k,t}^{(r)}, full t-stars, star unions, and sandwich families.

#include <cstdint>
#include <vector>

#include "tic/family.hpp"

namespace tic {

// Sets above this count are refused rather than materialized.
inline constexpr std::uint64_t kMaterializeCap = 5'000'000;

// First M k-subsets of [n] in lex order.
SetFamily lex_segment(int n, int k, const BigInt& m);

// Segment of size sum_{i=t}^{t+r-1} C(n-i,k-t); for r >= 1 this is
// {A : [t-1] ⊆ A and A ∩ [t, t+r-1] nonempty}, a union of r full t-stars.
SetFamily lex_t_segment(int n, int k, int t, long r);
BigInt lex_t_segment_size(int n, int k, int t, long r);

// All k-sets containing the given core.
SetFamily full_t_star(int n, int k, const std::vector<int>& core);

// Deduplicated union of full t-stars over equal-size cores.
SetFamily star_union(int n, int k, const std::vector<std::vector<int>>& cores);

// The lex family of size M squeezed between the r- and (r+1)-level
// segments; M must lie in [|L^(r)|, |L^(r+1)|].
SetFamily sandwich_family(int n, int k, int t, long r, const BigInt& m);

}  // namespace tic
