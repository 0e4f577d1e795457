#include "tic/shifting.hpp"

#include <algorithm>
#include <thread>

#include "tic/construct.hpp"

namespace tic {

SetFamily shift(const SetFamily& f, int i, int j) {
  if (i == j || i < 1 || j < 1 || i > f.n || j > f.n) {
    throw std::invalid_argument("shift needs distinct i, j in [n]");
  }
  std::vector<KSubset> out;
  out.reserve(f.size());
  for (const KSubset& a : f.sets) {
    if (a.contains(i) && !a.contains(j)) {
      std::vector<int> e;
      e.reserve(a.elems.size());
      for (int x : a.elems) e.push_back(x == i ? j : x);
      KSubset b = make_ksubset(f.n, std::move(e));
      out.push_back(f.contains(b) ? a : b);
    } else {
      out.push_back(a);
    }
  }
  return make_family(f.n, f.k, std::move(out));
}

SetFamily compress(const SetFamily& f) {
  SetFamily cur = f;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 1; j <= cur.n; ++j) {
      for (int i = j + 1; i <= cur.n; ++i) {
        SetFamily next = shift(cur, i, j);
        if (!(next == cur)) {
          cur = std::move(next);
          changed = true;
        }
      }
    }
  }
  return cur;
}

namespace {

// Candidate pool for the replacement move. kAll materializes the whole
// complement; kLexLevel uses the next level segment for the family's size.
std::vector<KSubset> swap_candidates(const SetFamily& f, CandidatePool pool) {
  std::vector<KSubset> out;
  if (pool == CandidatePool::kAll) {
    if (binom_u64(f.n, f.k) > kMaterializeCap) {
      throw ResourceLimitError("candidate space too large; use the lex pool");
    }
    SetFamily all = lex_segment(f.n, f.k, binom(f.n, f.k));
    for (KSubset& a : all.sets) {
      if (!f.contains(a)) out.push_back(std::move(a));
    }
  } else {
    SizeDecomposition d =
        decompose_size(f.n, f.k, 1, BigInt(static_cast<long>(f.size())));
    long next = std::min<long>(d.r + 1, f.n - f.k + 1);
    SetFamily seg = lex_t_segment(f.n, f.k, 1, next);
    for (KSubset& a : seg.sets) {
      if (!f.contains(a)) out.push_back(std::move(a));
    }
  }
  return out;
}

struct Best {
  bool found = false;
  std::int64_t delta = 0;
  const KSubset* inserted = nullptr;
  const KSubset* removed = nullptr;
};

// Total order on swaps: larger gain, then lex-least insert, then lex-least
// resulting family (which means lex-greatest removed member).
bool better(const Best& a, const Best& b) {
  if (!b.found) return a.found;
  if (!a.found) return false;
  if (a.delta != b.delta) return a.delta > b.delta;
  auto ins = lex_compare(*a.inserted, *b.inserted);
  if (ins != std::strong_ordering::equal) return ins == std::strong_ordering::less;
  return lex_compare(*a.removed, *b.removed) == std::strong_ordering::greater;
}

}  // namespace

std::optional<Move> improve_once(const SetFamily& f, CandidatePool pool,
                                 int threads) {
  if (f.sets.empty()) return std::nullopt;
  std::vector<KSubset> cand = swap_candidates(f, pool);
  if (cand.empty()) return std::nullopt;

  DegreeVector deg = degree_vector(f);
  std::vector<std::int64_t> removal_base(f.size());
  for (std::size_t g = 0; g < f.size(); ++g) {
    std::int64_t s = 0;
    for (int x : f.sets[g].elems) s += deg[x - 1];
    removal_base[g] = s - f.k;  // post-removal degree sum over G
  }

  auto scan = [&](std::size_t lo, std::size_t hi) {
    Best best;
    for (std::size_t c = lo; c < hi; ++c) {
      const KSubset& ins = cand[c];
      std::int64_t ins_deg = 0;
      for (int x : ins.elems) ins_deg += deg[x - 1];
      for (std::size_t g = 0; g < f.size(); ++g) {
        std::int64_t gain =
            2 * (ins_deg - intersection_size(ins, f.sets[g]) - removal_base[g]);
        Best cur{true, gain, &ins, &f.sets[g]};
        if (better(cur, best)) best = cur;
      }
    }
    return best;
  };

  Best overall;
  int workers = std::max(1, threads);
  if (workers == 1 || cand.size() < 64) {
    overall = scan(0, cand.size());
  } else {
    std::vector<Best> part(workers);
    std::vector<std::thread> pool_threads;
    std::size_t chunk = (cand.size() + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      std::size_t lo = std::min(cand.size(), w * chunk);
      std::size_t hi = std::min(cand.size(), lo + chunk);
      pool_threads.emplace_back([&, w, lo, hi] { part[w] = scan(lo, hi); });
    }
    for (auto& th : pool_threads) th.join();
    for (const Best& b : part) {
      if (better(b, overall)) overall = b;
    }
  }

  if (!overall.found || overall.delta <= 0) return std::nullopt;
  return Move{*overall.removed, *overall.inserted, overall.delta};
}

SetFamily apply_move(const SetFamily& f, const Move& m) {
  if (!f.contains(m.removed) || f.contains(m.inserted)) {
    throw std::invalid_argument("move does not apply to this family");
  }
  std::vector<KSubset> sets;
  sets.reserve(f.size());
  for (const KSubset& a : f.sets) {
    if (!(a == m.removed)) sets.push_back(a);
  }
  sets.push_back(m.inserted);
  return make_family(f.n, f.k, std::move(sets));
}

LocalSearchResult local_search(SetFamily f, long max_moves, CandidatePool pool,
                               int threads) {
  if (max_moves < 0) throw std::invalid_argument("max_moves must be >= 0");
  MoveTrace trace;
  for (long i = 0; i < max_moves; ++i) {
    std::optional<Move> m = improve_once(f, pool, threads);
    if (!m) break;
    f = apply_move(f, *m);
    trace.push_back(std::move(*m));
  }
  return LocalSearchResult{std::move(f), std::move(trace)};
}

}  // namespace tic
