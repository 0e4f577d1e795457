// Independent reference implementations used only by tests. Everything here
// is deliberately naive: direct definitions, no pruning, no shared code paths
// with the library beyond the basic value types.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "tic/bigint.hpp"
#include "tic/combinatorics.hpp"
#include "tic/family.hpp"

namespace oracle {

inline int overlap(const std::vector<int>& a, const std::vector<int>& b) {
  int c = 0;
  for (int x : a) {
    for (int y : b) {
      if (x == y) ++c;
    }
  }
  return c;
}

// Sum over ordered member pairs (diagonal included) of |A ∩ B|.
inline tic::BigInt total_intersection(const tic::SetFamily& f) {
  tic::BigInt total = 0;
  for (const auto& a : f.sets) {
    for (const auto& b : f.sets) {
      total += overlap(a.elems, b.elems);
    }
  }
  return total;
}

// Sum over ordered member pairs of C(|A ∩ B|, t).
inline tic::BigInt total_t_intersection(const tic::SetFamily& f, int t) {
  tic::BigInt total = 0;
  for (const auto& a : f.sets) {
    for (const auto& b : f.sets) {
      total += tic::binom(overlap(a.elems, b.elems), t);
    }
  }
  return total;
}

// Left side of the generalized identity: sum over all t-subsets A of [n]
// of |{F in family : A ⊆ F}|^2.
inline tic::BigInt t_degree_square_sum(const tic::SetFamily& f, int t) {
  std::vector<int> idx(t);
  for (int i = 0; i < t; ++i) idx[i] = i + 1;
  tic::BigInt total = 0;
  if (t > f.n) return 0;
  for (;;) {
    long deg = 0;
    for (const auto& s : f.sets) {
      if (overlap(s.elems, idx) == t) ++deg;
    }
    total += tic::BigInt(deg) * deg;
    int i = t - 1;
    while (i >= 0 && idx[i] == f.n - (t - 1 - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
  return total;
}

// Total Hamming distance over ordered pairs of characteristic vectors.
inline tic::BigInt total_hamming(const tic::SetFamily& f) {
  tic::BigInt total = 0;
  for (const auto& a : f.sets) {
    for (const auto& b : f.sets) {
      std::uint64_t ma = 0, mb = 0;
      for (int x : a.elems) ma |= 1ULL << (x - 1);
      for (int x : b.elems) mb |= 1ULL << (x - 1);
      total += __builtin_popcountll(ma ^ mb);
    }
  }
  return total;
}

// Every m-subset of C([n],k), visited through combination indices over the
// full lex list of k-subsets.
template <typename Fn>
inline void for_each_family(int n, int k, int m, Fn&& fn) {
  std::vector<tic::KSubset> space;
  std::uint64_t total = tic::binom_u64(n, k);
  for (std::uint64_t r = 0; r < total; ++r) {
    space.push_back(tic::lex_unrank_u64(n, k, r));
  }
  int big = static_cast<int>(total);
  if (m > big) return;
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  for (;;) {
    std::vector<tic::KSubset> sets;
    for (int i : idx) sets.push_back(space[static_cast<std::size_t>(i)]);
    fn(tic::make_family(n, k, std::move(sets)));
    int i = m - 1;
    while (i >= 0 && idx[i] == big - (m - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct ExhaustiveMax {
  tic::BigInt best = -1;
  std::vector<tic::SetFamily> optima;
};

// Unpruned exhaustive maximum of I over all m-subsets of C([n],k).
inline ExhaustiveMax exhaustive_mi(int n, int k, int m) {
  ExhaustiveMax out;
  for_each_family(n, k, m, [&](const tic::SetFamily& f) {
    tic::BigInt v = oracle::total_intersection(f);
    if (v > out.best) {
      out.best = v;
      out.optima.clear();
      out.optima.push_back(f);
    } else if (v == out.best) {
      out.optima.push_back(f);
    }
  });
  return out;
}

// Minimum image of a family under all relabelings of [n], where the image is
// the sorted list of sorted members. Factorial cost; n must stay tiny.
inline tic::SetFamily brute_canonical(const tic::SetFamily& f) {
  std::vector<int> perm(f.n);
  for (int i = 0; i < f.n; ++i) perm[i] = i + 1;
  std::vector<std::vector<int>> best;
  bool have = false;
  do {
    std::vector<std::vector<int>> image;
    for (const auto& s : f.sets) {
      std::vector<int> mapped;
      for (int x : s.elems) mapped.push_back(perm[x - 1]);
      std::sort(mapped.begin(), mapped.end());
      image.push_back(std::move(mapped));
    }
    std::sort(image.begin(), image.end());
    if (!have || image < best) {
      best = image;
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<tic::KSubset> sets;
  for (auto& e : best) sets.push_back(tic::make_ksubset(f.n, e));
  return tic::make_family(f.n, f.k, std::move(sets));
}

// Best single swap (remove one member, insert one non-member) measured by
// recomputing I from scratch; used against the optimizer's incremental form.
struct SwapOracle {
  bool found = false;
  tic::BigInt gain = 0;
  std::vector<int> removed;
  std::vector<int> inserted;
};

inline SwapOracle best_swap(const tic::SetFamily& f) {
  SwapOracle out;
  tic::BigInt base = oracle::total_intersection(f);
  std::uint64_t total = tic::binom_u64(f.n, f.k);
  for (std::size_t g = 0; g < f.sets.size(); ++g) {
    for (std::uint64_t r = 0; r < total; ++r) {
      tic::KSubset cand = tic::lex_unrank_u64(f.n, f.k, r);
      if (f.contains(cand)) continue;
      tic::SetFamily next = f;
      next.sets[g] = cand;
      std::sort(next.sets.begin(), next.sets.end(),
                [](const tic::KSubset& a, const tic::KSubset& b) {
                  return a.elems < b.elems;
                });
      tic::BigInt gain = oracle::total_intersection(next) - base;
      if (gain <= 0) continue;
      // Ties: prefer the lex-least inserted set, then the lex-greatest
      // removed set (which yields the lex-least resulting family).
      bool better = false;
      if (!out.found || gain > out.gain) {
        better = true;
      } else if (gain == out.gain) {
        if (cand.elems < out.inserted) {
          better = true;
        } else if (cand.elems == out.inserted &&
                   f.sets[g].elems > out.removed) {
          better = true;
        }
      }
      if (better) {
        out.found = true;
        out.gain = gain;
        out.removed = f.sets[g].elems;
        out.inserted = cand.elems;
      }
    }
  }
  return out;
}

// Vertex-pattern maximum of Σ x_i² over x ∈ [a,b]^num_vars with Σ x_i = m:
// an optimum exists with at most one coordinate strictly between the bounds.
inline tic::Rational convex_vertex_max(const tic::Rational& a,
                                       const tic::Rational& b,
                                       const tic::Rational& m, int num_vars) {
  tic::Rational best = -1;
  bool have = false;
  for (int j = 0; j <= num_vars; ++j) {
    tic::Rational rest = m - j * b - (num_vars - j) * a;
    if (j < num_vars) {
      // j coordinates at b, one at a + rest, the others at a.
      tic::Rational mid = a + rest;
      if (rest >= 0 && mid <= b) {
        tic::Rational v =
            j * b * b + (num_vars - 1 - j) * a * a + mid * mid;
        v.canonicalize();
        if (!have || v > best) {
          best = v;
          have = true;
        }
      }
    } else if (rest == 0) {
      tic::Rational v = j * b * b;
      v.canonicalize();
      if (!have || v > best) {
        best = v;
        have = true;
      }
    }
  }
  return best;
}

}  // namespace oracle
