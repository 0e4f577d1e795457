#include "tic/bounds.hpp"

#include <algorithm>
#include <functional>

#include "tic/canonical.hpp"
#include "tic/construct.hpp"

namespace tic {

ConvexMaxResult convex_max(const Rational& a, const Rational& b,
                           const Rational& m, int num_vars) {
  if (num_vars < 1) throw std::invalid_argument("need at least one variable");
  if (a < 0 || b < a) throw std::invalid_argument("need 0 <= a <= b");
  long r = num_vars - 1;
  if (m < Rational(r) * a + b || m > Rational(num_vars) * b) {
    throw std::invalid_argument("infeasible (a,b,M)");
  }
  long r0;
  if (a == b) {
    r0 = r;
  } else {
    r0 = std::min<long>(r, rational_floor((m - Rational(num_vars) * a) / (b - a)));
  }
  Rational leftover = m - Rational(r0) * b - Rational(r - r0) * a;
  ConvexMaxResult out;
  out.r0 = r0;
  out.value = Rational(r0) * b * b + Rational(r - r0) * a * a + leftover * leftover;
  out.value.canonicalize();
  out.witness.reserve(num_vars);
  for (long i = 0; i < r0; ++i) out.witness.push_back(b);
  out.witness.push_back(leftover);
  for (long i = 0; i < r - r0; ++i) out.witness.push_back(a);
  return out;
}

BigInt hypothesis_constant(int s, int k, int t, long r) {
  if (s < 1 || s > t) throw std::invalid_argument("need 1 <= s <= t");
  if (t > 16) throw ResourceLimitError("constant too large to evaluate");
  unsigned long p = 1UL << (s - 1);  // 2^(s-1)
  BigInt base = BigInt(k) * k * big_pow(t, 4) * big_pow(r + 1, 7);
  return big_pow(2, p - 1) * big_pow(10, (8UL << (s - 1)) - 2) * big_pow(base, p);
}

BigInt required_ground_set(int k, int t, long r) {
  if (k < 1 || t < 1 || r < 0) throw std::invalid_argument("bad (k,t,r)");
  if (t == 1) {
    return BigInt(3000) * big_pow(r + 1, 3) * (BigInt(k) + r) * k * k;
  }
  BigInt c1 = hypothesis_constant(1, k, t, r);
  BigInt ct = hypothesis_constant(t, k, t, r);
  return c1 * big_pow(BigInt(3) * t * ct, 2UL * t);
}

HypothesisReport hypothesis_report(int n, int k, int t, long r,
                                   const Rational& delta) {
  if (delta < 0 || delta > 1) throw std::invalid_argument("delta must be in [0,1]");
  HypothesisReport rep;
  rep.n = n;
  rep.k = k;
  rep.t = t;
  rep.r = r;
  rep.delta = delta;
  rep.required_n = required_ground_set(k, t, r);
  if (t == 1) {
    Rational lo(BigInt(150) * k * k * k * big_pow(r + 1, 2), BigInt(n));
    Rational hi = 1 - Rational(BigInt(150) * k * k * k * big_pow(r + 1, 3), BigInt(n));
    lo.canonicalize();
    hi.canonicalize();
    rep.delta_lo = lo;
    rep.delta_hi = hi;
  } else {
    BigInt c1 = hypothesis_constant(1, k, t, r);
    Rational q(BigInt(60) * k * k * big_pow(r + 1, 6) * big_pow(t, 4), c1);
    q.canonicalize();
    rep.delta_lo = q;
    rep.delta_hi = 1 - q;
  }
  rep.n_ok = BigInt(n) >= rep.required_n;
  rep.delta_ok = delta == 1 || (delta >= rep.delta_lo && delta <= rep.delta_hi);
  rep.met = rep.n_ok && rep.delta_ok;
  return rep;
}

Rational literal_bound_value(int n, int k, int t, long r, const Rational& delta,
                             const BigInt& m) {
  long floor_delta = rational_floor(delta);
  BigInt mid = binom(n - t, k - t);
  BigInt tail = 0;
  for (long i = t + 1; i <= t + r; ++i) tail += binom(n - i, k - t - 1);
  Rational value = Rational(t - 1) * Rational(m) * Rational(m) +
                   (Rational(r) + delta * delta) * Rational(mid) * Rational(mid) +
                   Rational(BigInt(n) - (t + r + floor_delta - 1)) *
                       Rational(tail) * Rational(tail);
  value.canonicalize();
  return value;
}

namespace {

BoundReport make_report(int n, int k, int t, long r, const Rational& delta,
                        const BigInt& m) {
  BoundReport rep;
  rep.n = n;
  rep.k = k;
  rep.t = t;
  rep.r = r;
  rep.delta = delta;
  rep.m = m;
  rep.bound_value = literal_bound_value(n, k, t, r, delta, m);
  if (delta == 1 && t + r + 1 <= n) {
    rep.folded_value = literal_bound_value(n, k, t, r + 1, 0, m);
  }
  try {
    SetFamily ref = sandwich_family(n, k, t, r, m);
    rep.reference_value = total_intersection(ref);
    rep.bound_holds = rep.bound_value >= Rational(*rep.reference_value);
  } catch (const ResourceLimitError&) {
    // Too large to materialize: report the bound without a reference.
  }
  rep.hypotheses = hypothesis_report(n, k, t, r, delta);
  return rep;
}

Rational exact_size(int n, int k, int t, long r, const Rational& delta) {
  Rational m = Rational(level_prefix_sum(n, k, t, r)) +
               delta * Rational(binom(n - (t + r), k - t));
  m.canonicalize();
  return m;
}

}  // namespace

BoundReport upper_bound_t1(int n, int k, long r, const Rational& delta) {
  if (n < 1 || k < 1 || k > n || r < 0) throw std::invalid_argument("bad parameters");
  if (1 + r > n) throw std::invalid_argument("r too large for this ground set");
  if (delta < 0 || delta > 1) throw std::invalid_argument("delta must be in [0,1]");
  Rational m = exact_size(n, k, 1, r, delta);
  if (m.get_den() != 1) {
    throw std::invalid_argument("delta does not give an integer size");
  }
  return make_report(n, k, 1, r, delta, BigInt(m.get_num()));
}

BoundReport upper_bound_general(int n, int k, int t, long r,
                                const Rational& delta, const BigInt& m) {
  if (t < 2) throw std::invalid_argument("t must be >= 2 here");
  if (n < 1 || k < t || k > n || r < 0) throw std::invalid_argument("bad parameters");
  if (t + r > n) throw std::invalid_argument("r too large for this ground set");
  if (delta < 0 || delta > 1) throw std::invalid_argument("delta must be in [0,1]");
  if (exact_size(n, k, t, r, delta) != Rational(m)) {
    throw std::invalid_argument("M inconsistent with (r,delta)");
  }
  return make_report(n, k, t, r, delta, m);
}

namespace {

std::vector<int> common_elements(const SetFamily& f) {
  std::vector<int> common;
  if (f.sets.empty()) return common;
  common = f.sets.front().elems;
  for (const KSubset& a : f.sets) {
    std::vector<int> next;
    std::set_intersection(common.begin(), common.end(), a.elems.begin(),
                          a.elems.end(), std::back_inserter(next));
    common = std::move(next);
  }
  return common;
}

}  // namespace

bool verify_sandwich(const SetFamily& f, int t, long r) {
  if (t < 1 || t > f.k || r < 0 || t + r > f.n) {
    throw std::invalid_argument("bad (t,r) for this family");
  }
  BigInt lo = level_prefix_sum(f.n, f.k, t, r);
  BigInt hi = level_prefix_sum(f.n, f.k, t, r + 1);
  BigInt size(static_cast<long>(f.size()));
  if (size < lo || size > hi) {
    throw std::invalid_argument("family size outside the sandwich range");
  }
  if (f.sets.empty()) return true;  // only reachable when |L^(r)| = 0

  BigInt star_size = binom(f.n - t, f.k - t);
  std::vector<int> common = common_elements(f);
  if (static_cast<int>(common.size()) < t - 1) return false;

  // Choose T (image of the first t-1 labels) among the common elements,
  // then an r-set S of elements whose t-star over T lies fully in F, then
  // check the leftover members share an extra element playing label t+r.
  std::vector<int> tsel(t - 1);
  std::function<bool(std::size_t, int)> choose_t = [&](std::size_t pos,
                                                       int from) -> bool {
    if (pos == tsel.size()) {
      std::vector<int> star_candidates;
      for (int x = 1; x <= f.n; ++x) {
        if (std::binary_search(tsel.begin(), tsel.end(), x)) continue;
        std::vector<int> core = tsel;
        core.push_back(x);
        if (t_degree(f, core) == star_size) star_candidates.push_back(x);
      }
      if (static_cast<long>(star_candidates.size()) < r) return false;
      std::vector<int> ssel(r);
      std::function<bool(std::size_t, std::size_t)> choose_s =
          [&](std::size_t spos, std::size_t sfrom) -> bool {
        if (spos == ssel.size()) {
          std::vector<int> rest_common;
          bool first = true;
          for (const KSubset& a : f.sets) {
            bool hits = false;
            for (int s : ssel) {
              if (a.contains(s)) {
                hits = true;
                break;
              }
            }
            if (hits) continue;
            if (first) {
              rest_common = a.elems;
              first = false;
            } else {
              std::vector<int> next;
              std::set_intersection(rest_common.begin(), rest_common.end(),
                                    a.elems.begin(), a.elems.end(),
                                    std::back_inserter(next));
              rest_common = std::move(next);
            }
          }
          if (first) return true;  // every member already meets S
          for (int e : rest_common) {
            if (!std::binary_search(tsel.begin(), tsel.end(), e) &&
                std::find(ssel.begin(), ssel.end(), e) == ssel.end()) {
              return true;
            }
          }
          return false;
        }
        for (std::size_t i = sfrom; i < star_candidates.size(); ++i) {
          ssel[spos] = star_candidates[i];
          if (choose_s(spos + 1, i + 1)) return true;
        }
        return false;
      };
      return choose_s(0, 0);
    }
    for (std::size_t i = from; i < common.size(); ++i) {
      tsel[pos] = common[i];
      if (choose_t(pos + 1, i + 1)) return true;
    }
    return false;
  };
  return choose_t(0, 0);
}

StarUnionMinimum min_star_union_size(int n, int k, int t, long r) {
  if (t < 1 || t > k || k > n) throw std::invalid_argument("bad (n,k,t)");
  if (r < 0) throw std::invalid_argument("r must be >= 0");
  if (r == 0) {
    return StarUnionMinimum{0, {SetFamily{n, t, {}}}};
  }
  std::uint64_t core_count = binom_u64(n, t);
  if (core_count < static_cast<std::uint64_t>(r)) {
    throw std::invalid_argument("fewer than r distinct cores exist");
  }
  if (r > 20 ||
      binom_u64(static_cast<long>(core_count), r) > 20'000'000ULL) {
    throw ResourceLimitError("too many core configurations to enumerate");
  }
  SetFamily cores = lex_segment(n, t, binom(n, t));

  // Union size by inclusion-exclusion over the chosen cores: the k-sets
  // containing a group of cores with u distinct elements number C(n-u,k-u).
  BigInt best = -1;
  std::vector<std::vector<std::size_t>> argmin;
  std::vector<std::size_t> pick(r);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos,
                                                          std::size_t from) {
    if (pos == pick.size()) {
      BigInt size = 0;
      for (std::uint64_t sub = 1; sub < (1ULL << r); ++sub) {
        std::vector<int> u;
        int bits = 0;
        for (long j = 0; j < r; ++j) {
          if (sub & (1ULL << j)) {
            const auto& e = cores.sets[pick[j]].elems;
            u.insert(u.end(), e.begin(), e.end());
            ++bits;
          }
        }
        std::sort(u.begin(), u.end());
        u.erase(std::unique(u.begin(), u.end()), u.end());
        int usz = static_cast<int>(u.size());
        BigInt term = binom(n - usz, k - usz);
        if (bits % 2 == 1) {
          size += term;
        } else {
          size -= term;
        }
      }
      if (best < 0 || size < best) {
        best = size;
        argmin.clear();
        argmin.push_back(pick);
      } else if (size == best) {
        argmin.push_back(pick);
      }
      return;
    }
    for (std::size_t i = from; i < cores.size(); ++i) {
      pick[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);

  std::vector<SetFamily> classes;
  for (const auto& config : argmin) {
    std::vector<KSubset> members;
    for (std::size_t i : config) members.push_back(cores.sets[i]);
    SetFamily canon = canonical_form(make_family(n, t, std::move(members))).family;
    bool seen = false;
    for (const SetFamily& c : classes) {
      if (c == canon) {
        seen = true;
        break;
      }
    }
    if (!seen) classes.push_back(std::move(canon));
  }
  std::sort(classes.begin(), classes.end(),
            [](const SetFamily& a, const SetFamily& b) {
              return std::lexicographical_compare(
                  a.sets.begin(), a.sets.end(), b.sets.begin(), b.sets.end(),
                  [](const KSubset& x, const KSubset& y) {
                    return x.elems < y.elems;
                  });
            });
  return StarUnionMinimum{best, std::move(classes)};
}

BigInt full_star_total_intersection(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("bad (n,k)");
  BigInt first = binom(n - 1, k - 1);
  BigInt out = first * first;
  if (n >= 2) {
    BigInt second = binom(n - 2, k - 2);
    out += BigInt(n - 1) * second * second;
  }
  return out;
}

}  // namespace tic
