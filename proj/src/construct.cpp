#include "tic/construct.hpp"

#include <algorithm>

namespace tic {

namespace {

// In-place successor in lex order; false once the last subset is reached.
bool next_ksubset(std::vector<int>& e, int n) {
  int k = static_cast<int>(e.size());
  int i = k - 1;
  while (i >= 0 && e[i] == n - (k - 1 - i)) --i;
  if (i < 0) return false;
  ++e[i];
  for (int j = i + 1; j < k; ++j) e[j] = e[j - 1] + 1;
  return true;
}

}  // namespace

SetFamily lex_segment(int n, int k, const BigInt& m) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("bad (n,k)");
  if (m < 0 || m > binom(n, k)) throw std::invalid_argument("M out of range");
  std::uint64_t count = to_u64(m, "segment size");
  if (count > kMaterializeCap) {
    throw ResourceLimitError("segment too large to materialize");
  }
  std::vector<KSubset> sets;
  sets.reserve(count);
  std::vector<int> e(k);
  for (int i = 0; i < k; ++i) e[i] = i + 1;
  for (std::uint64_t i = 0; i < count; ++i) {
    sets.push_back(KSubset{n, e});
    if (i + 1 < count) next_ksubset(e, n);
  }
  return SetFamily{n, k, std::move(sets)};
}

BigInt lex_t_segment_size(int n, int k, int t, long r) {
  if (t < 1 || t > k || r < 0 || t + r - 1 > n) {
    throw std::invalid_argument("bad (t,r)");
  }
  return level_prefix_sum(n, k, t, r);
}

SetFamily lex_t_segment(int n, int k, int t, long r) {
  return lex_segment(n, k, lex_t_segment_size(n, k, t, r));
}

SetFamily full_t_star(int n, int k, const std::vector<int>& core) {
  KSubset c = make_ksubset(n, core);
  int t = c.k();
  if (t > k) throw std::invalid_argument("core larger than k");
  BigInt size = binom(n - t, k - t);
  if (to_u64(size, "star size") > kMaterializeCap) {
    throw ResourceLimitError("star too large to materialize");
  }
  std::vector<int> rest;
  for (int x = 1; x <= n; ++x) {
    if (!c.contains(x)) rest.push_back(x);
  }
  std::vector<KSubset> sets;
  int need = k - t;
  std::vector<int> idx(need);
  for (int i = 0; i < need; ++i) idx[i] = i;
  for (;;) {
    std::vector<int> e = c.elems;
    for (int i = 0; i < need; ++i) e.push_back(rest[idx[i]]);
    std::sort(e.begin(), e.end());
    sets.push_back(KSubset{n, std::move(e)});
    if (need == 0) break;
    int i = need - 1;
    while (i >= 0 && idx[i] == static_cast<int>(rest.size()) - need + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < need; ++j) idx[j] = idx[j - 1] + 1;
  }
  return make_family(n, k, std::move(sets));
}

SetFamily star_union(int n, int k, const std::vector<std::vector<int>>& cores) {
  if (cores.empty()) return SetFamily{n, k, {}};
  std::size_t t = cores.front().size();
  std::vector<KSubset> all;
  for (const auto& core : cores) {
    if (core.size() != t) throw std::invalid_argument("mixed core sizes");
    SetFamily star = full_t_star(n, k, core);
    all.insert(all.end(), star.sets.begin(), star.sets.end());
  }
  std::sort(all.begin(), all.end(),
            [](const KSubset& x, const KSubset& y) { return x.elems < y.elems; });
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return SetFamily{n, k, std::move(all)};
}

SetFamily sandwich_family(int n, int k, int t, long r, const BigInt& m) {
  BigInt lo = lex_t_segment_size(n, k, t, r);
  BigInt hi = lex_t_segment_size(n, k, t, r + 1);
  if (m < lo || m > hi) {
    throw std::invalid_argument("M outside the sandwich range");
  }
  return lex_segment(n, k, m);
}

}  // namespace tic
