#include "tic/family.hpp"

#include <algorithm>
#include <map>

namespace tic {

bool SetFamily::contains(const KSubset& a) const {
  return std::binary_search(sets.begin(), sets.end(), a,
                            [](const KSubset& x, const KSubset& y) {
                              return x.elems < y.elems;
                            });
}

SetFamily make_family(int n, int k, std::vector<KSubset> sets) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("bad (n,k)");
  for (const KSubset& a : sets) {
    if (a.n != n || a.k() != k) {
      throw std::invalid_argument("family member has mismatched (n,k)");
    }
  }
  std::sort(sets.begin(), sets.end(),
            [](const KSubset& x, const KSubset& y) { return x.elems < y.elems; });
  for (std::size_t i = 1; i < sets.size(); ++i) {
    if (sets[i].elems == sets[i - 1].elems) {
      throw std::invalid_argument("duplicate set in family");
    }
  }
  return SetFamily{n, k, std::move(sets)};
}

DegreeVector degree_vector(const SetFamily& f) {
  DegreeVector deg(f.n, 0);
  for (const KSubset& a : f.sets) {
    for (int x : a.elems) ++deg[x - 1];
  }
  return deg;
}

BigInt t_degree(const SetFamily& f, const std::vector<int>& a) {
  std::vector<int> q = a;
  std::sort(q.begin(), q.end());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] < 1 || q[i] > f.n) throw std::invalid_argument("element out of range");
    if (i > 0 && q[i] == q[i - 1]) throw std::invalid_argument("repeated element");
  }
  long count = 0;
  for (const KSubset& b : f.sets) {
    bool all = true;
    for (int x : q) {
      if (!b.contains(x)) {
        all = false;
        break;
      }
    }
    if (all) ++count;
  }
  return BigInt(count);
}

BigInt total_intersection(const SetFamily& f) {
  BigInt out = 0;
  for (std::int64_t d : degree_vector(f)) out += BigInt(d) * d;
  return out;
}

BigInt total_intersection_pairwise(const SetFamily& f) {
  BigInt out = 0;
  for (const KSubset& a : f.sets) {
    for (const KSubset& b : f.sets) out += intersection_size(a, b);
  }
  return out;
}

BigInt pairwise_with_set(const SetFamily& f, const KSubset& a) {
  if (a.n != f.n || a.k() != f.k) {
    throw std::invalid_argument("set has mismatched (n,k)");
  }
  DegreeVector deg = degree_vector(f);
  BigInt out = 0;
  for (int x : a.elems) out += deg[x - 1];
  return out;
}

BigInt cross_total_intersection(const SetFamily& f1, const SetFamily& f2) {
  if (f1.n != f2.n || f1.k != f2.k) {
    throw std::invalid_argument("families have mismatched (n,k)");
  }
  DegreeVector d1 = degree_vector(f1);
  DegreeVector d2 = degree_vector(f2);
  BigInt out = 0;
  for (int x = 0; x < f1.n; ++x) out += BigInt(d1[x]) * d2[x];
  return out;
}

BigInt total_t_intersection(const SetFamily& f, int t) {
  if (t < 1 || t > f.k) throw std::invalid_argument("t must be in [1,k]");
  if (t == 1) return total_intersection(f);
  // Tally deg(A) for every t-subset A of a member, then square-sum.
  std::map<std::vector<int>, long> deg;
  std::vector<int> pick(t);
  for (const KSubset& a : f.sets) {
    std::vector<int> idx(t);
    for (int i = 0; i < t; ++i) idx[i] = i;
    for (;;) {
      for (int i = 0; i < t; ++i) pick[i] = a.elems[idx[i]];
      ++deg[pick];
      int i = t - 1;
      while (i >= 0 && idx[i] == f.k - t + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  BigInt out = 0;
  for (const auto& [a, d] : deg) out += BigInt(d) * d;
  return out;
}

BigInt total_t_intersection_pairwise(const SetFamily& f, int t) {
  if (t < 1 || t > f.k) throw std::invalid_argument("t must be in [1,k]");
  BigInt out = 0;
  for (const KSubset& a : f.sets) {
    for (const KSubset& b : f.sets) out += binom(intersection_size(a, b), t);
  }
  return out;
}

bool is_t_intersecting(const SetFamily& f, int t) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  for (std::size_t i = 0; i < f.sets.size(); ++i) {
    for (std::size_t j = i + 1; j < f.sets.size(); ++j) {
      if (intersection_size(f.sets[i], f.sets[j]) < t) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> find_full_t_stars(const SetFamily& f, int t) {
  if (t < 1 || t > f.k) throw std::invalid_argument("t must be in [1,k]");
  BigInt star_size = binom(f.n - t, f.k - t);
  std::vector<std::vector<int>> out;
  if (star_size > BigInt(static_cast<long>(f.size()))) return out;
  // Candidate cores are t-subsets of members (a full star is nonempty).
  std::map<std::vector<int>, long> deg;
  std::vector<int> pick(t);
  for (const KSubset& a : f.sets) {
    std::vector<int> idx(t);
    for (int i = 0; i < t; ++i) idx[i] = i;
    for (;;) {
      for (int i = 0; i < t; ++i) pick[i] = a.elems[idx[i]];
      ++deg[pick];
      int i = t - 1;
      while (i >= 0 && idx[i] == f.k - t + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  for (const auto& [a, d] : deg) {
    if (BigInt(d) == star_size) out.push_back(a);
  }
  return out;  // map iteration is already sorted
}

std::optional<std::vector<int>> min_s_cover(const SetFamily& f, int s,
                                            int max_size) {
  if (s < 1) throw std::invalid_argument("s must be >= 1");
  if (max_size < 0) return std::nullopt;
  if (f.sets.empty()) return std::vector<int>{};
  int cap = std::min(max_size, f.n);
  for (int size = 1; size <= cap; ++size) {
    if (binom_u64(f.n, size) > 50'000'000ULL) {
      throw ResourceLimitError("cover search space too large");
    }
    // Lex enumeration of size-subsets of [n] yields the least witness first.
    std::vector<int> u(size);
    for (int i = 0; i < size; ++i) u[i] = i + 1;
    for (;;) {
      bool ok = true;
      for (const KSubset& a : f.sets) {
        int hit = 0;
        for (int x : u) {
          if (a.contains(x)) ++hit;
        }
        if (hit < s) {
          ok = false;
          break;
        }
      }
      if (ok) return u;
      int i = size - 1;
      while (i >= 0 && u[i] == f.n - size + i + 1) --i;
      if (i < 0) break;
      ++u[i];
      for (int j = i + 1; j < size; ++j) u[j] = u[j - 1] + 1;
    }
  }
  return std::nullopt;
}

SetFamily link(const SetFamily& f, int x) {
  if (x < 1 || x > f.n) throw std::invalid_argument("element out of range");
  std::vector<KSubset> out;
  out.reserve(f.size());
  for (const KSubset& a : f.sets) {
    if (!a.contains(x)) {
      throw std::invalid_argument("link element missing from a member");
    }
    std::vector<int> e;
    e.reserve(f.k - 1);
    for (int y : a.elems) {
      if (y != x) e.push_back(y > x ? y - 1 : y);
    }
    out.push_back(make_ksubset(f.n - 1, std::move(e)));
  }
  return make_family(f.n - 1, f.k - 1, std::move(out));
}

BigInt level_prefix_sum(int n, int k, int t, long r) {
  BigInt sum = 0;
  for (long i = t; i <= t + r - 1; ++i) sum += binom(n - i, k - t);
  return sum;
}

SizeDecomposition decompose_size(int n, int k, int t, const BigInt& m) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("bad (n,k)");
  if (t < 1 || t > k) throw std::invalid_argument("t must be in [1,k]");
  if (m < 1 || m > binom(n, k)) throw std::invalid_argument("M out of range");
  BigInt prefix = 0;
  long r = 0;
  for (;;) {
    BigInt level =
        (n - (t + r) >= 0) ? binom(n - (t + r), k - t) : BigInt(0);
    if (level == 0) {
      // Levels exhausted: for t >= 2 only M <= C(n-t+1,k-t+1) decomposes.
      throw std::invalid_argument("M out of range for this t");
    }
    if (prefix + level >= m) {
      Rational delta(m - prefix, level);
      delta.canonicalize();
      return SizeDecomposition{t, r, delta, m};
    }
    prefix += level;
    ++r;
  }
}

BigInt recompose_size(int n, int k, const SizeDecomposition& d) {
  Rational m = Rational(level_prefix_sum(n, k, d.t, d.r)) +
               d.delta * Rational(binom(n - (d.t + d.r), k - d.t));
  m.canonicalize();
  if (m.get_den() != 1) {
    throw std::invalid_argument("decomposition does not yield an integer size");
  }
  return m.get_num();
}

}  // namespace tic
