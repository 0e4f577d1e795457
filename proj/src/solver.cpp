#include "tic/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "tic/canonical.hpp"
#include "tic/construct.hpp"

namespace tic {

std::int64_t upper_bound_remaining(const DegreeVector& deg, int n, int k,
                                   std::uint64_t m, std::uint64_t slots_left) {
  std::int64_t current = 0;
  for (std::int64_t d : deg) current += d * d;
  if (slots_left == 0) return current;

  std::int64_t cap = static_cast<std::int64_t>(
      std::min<std::uint64_t>(m, binom_u64(n - 1, k - 1)));
  std::int64_t budget = static_cast<std::int64_t>(slots_left) * k;

  // Relax e*(2d+e) to e*(2d+c) with c the per-element headroom; the
  // linearized problem is solved exactly by a greedy fill.
  struct Slot {
    std::int64_t weight;
    std::int64_t room;
  };
  std::vector<Slot> slots;
  slots.reserve(deg.size());
  for (std::int64_t d : deg) {
    std::int64_t room =
        std::min<std::int64_t>(static_cast<std::int64_t>(slots_left), cap - d);
    if (room > 0) slots.push_back(Slot{2 * d + room, room});
  }
  std::sort(slots.begin(), slots.end(),
            [](const Slot& a, const Slot& b) { return a.weight > b.weight; });
  std::int64_t bound = current;
  for (const Slot& s : slots) {
    if (budget <= 0) break;
    std::int64_t take = std::min(budget, s.room);
    bound += take * s.weight;
    budget -= take;
  }
  return bound;
}

namespace {

constexpr std::size_t kOptimaCap = 200'000;

struct BranchResult {
  std::int64_t best = -1;
  std::vector<std::uint32_t> witness;
  std::vector<std::vector<std::uint32_t>> optima;
  std::uint64_t nodes = 0;
};

// One top-level branch (fixed first rank), searched with a branch-local
// incumbent so node counts never depend on sibling branches or threads.
struct BranchSearch {
  const std::vector<KSubset>& space;
  int n;
  int k;
  std::uint64_t m;
  bool enumerate_all;
  std::atomic<std::uint64_t>& global_nodes;
  std::uint64_t node_limit;
  std::atomic<bool>& aborted;

  BranchResult res{};
  DegreeVector deg{};
  std::int64_t current = 0;
  std::vector<std::uint32_t> stack{};

  void apply(std::uint32_t r) {
    const KSubset& a = space[r];
    for (int x : a.elems) {
      current += 2 * deg[x - 1] + 1;
      ++deg[x - 1];
    }
    stack.push_back(r);
  }

  void undo(std::uint32_t r) {
    const KSubset& a = space[r];
    for (int x : a.elems) {
      --deg[x - 1];
      current -= 2 * deg[x - 1] + 1;
    }
    stack.pop_back();
  }

  void leaf() {
    if (current > res.best) {
      res.best = current;
      res.witness = stack;
      if (enumerate_all) {
        res.optima.clear();
        res.optima.push_back(stack);
      }
    } else if (enumerate_all && current == res.best) {
      if (res.optima.size() >= kOptimaCap) {
        throw ResourceLimitError("too many optimal families to collect");
      }
      res.optima.push_back(stack);
    }
  }

  void dfs(std::uint32_t start, std::uint64_t depth) {
    std::uint32_t last =
        static_cast<std::uint32_t>(space.size() - (m - depth)) + 1;
    for (std::uint32_t r = start; r < last; ++r) {
      ++res.nodes;
      if (global_nodes.fetch_add(1, std::memory_order_relaxed) >= node_limit) {
        aborted.store(true, std::memory_order_relaxed);
        return;
      }
      apply(r);
      if (depth + 1 == m) {
        leaf();
      } else {
        std::int64_t ub =
            upper_bound_remaining(deg, n, k, m, m - (depth + 1));
        bool explore = enumerate_all ? (ub >= res.best) : (ub > res.best);
        if (explore) dfs(r + 1, depth + 1);
      }
      undo(r);
      if (aborted.load(std::memory_order_relaxed)) return;
    }
  }

  void run(std::uint32_t first) {
    deg.assign(n, 0);
    current = 0;
    stack.clear();
    ++res.nodes;
    if (global_nodes.fetch_add(1, std::memory_order_relaxed) >= node_limit) {
      aborted.store(true, std::memory_order_relaxed);
      return;
    }
    apply(first);
    if (m == 1) {
      leaf();
    } else {
      std::int64_t ub = upper_bound_remaining(deg, n, k, m, m - 1);
      bool explore = enumerate_all ? (ub >= res.best) : (ub > res.best);
      if (explore) dfs(first + 1, 1);
    }
    undo(first);
  }
};

SetFamily ranks_to_family(const std::vector<KSubset>& space, int n, int k,
                          const std::vector<std::uint32_t>& ranks) {
  std::vector<KSubset> sets;
  sets.reserve(ranks.size());
  for (std::uint32_t r : ranks) sets.push_back(space[r]);
  return make_family(n, k, std::move(sets));
}

}  // namespace

SolveResult max_total_intersection(int n, int k, std::uint64_t m,
                                   const SolveOptions& options) {
  auto t0 = std::chrono::steady_clock::now();
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("bad (n,k)");
  BigInt total = binom(n, k);
  if (m < 1 || BigInt(static_cast<unsigned long>(m)) > total) {
    throw std::invalid_argument("M out of range");
  }
  // Keep every intermediate value inside int64.
  if (BigInt(4) * k * BigInt(static_cast<unsigned long>(m)) * m >=
      (BigInt(1) << 62)) {
    throw ResourceLimitError("instance too large for the exact solver");
  }
  std::vector<KSubset> space = lex_segment(n, k, total).sets;
  std::uint32_t branches = static_cast<std::uint32_t>(space.size() - m) + 1;

  std::atomic<std::uint64_t> global_nodes{0};
  std::atomic<bool> aborted{false};
  std::vector<BranchResult> results(branches);

  int workers = std::max(1, options.threads);
  std::atomic<std::uint32_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (;;) {
        std::uint32_t b = next.fetch_add(1);
        if (b >= branches || aborted.load(std::memory_order_relaxed)) return;
        BranchSearch s{space,        n,
                       k,            m,
                       options.enumerate_all, global_nodes,
                       options.node_limit,    aborted};
        s.run(b);
        results[b] = std::move(s.res);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      aborted.store(true, std::memory_order_relaxed);
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  SolveResult out;
  out.n = n;
  out.k = k;
  out.m = m;
  out.exact = !aborted.load();
  std::int64_t best = -1;
  std::uint64_t nodes = 0;
  std::uint32_t best_branch = 0;
  for (std::uint32_t b = 0; b < branches; ++b) {
    nodes += results[b].nodes;
    if (results[b].best > best) {
      best = results[b].best;
      best_branch = b;
    }
  }
  out.nodes_explored = nodes;
  if (best < 0) {
    // Node limit hit before any complete family was formed.
    out.mi_value = 0;
    out.witness = SetFamily{n, k, {}};
    return out;
  }
  out.mi_value = best;
  out.witness = ranks_to_family(space, n, k, results[best_branch].witness);

  if (options.enumerate_all && out.exact) {
    std::vector<SetFamily> reps;
    for (std::uint32_t b = 0; b < branches; ++b) {
      if (results[b].best != best) continue;
      for (const auto& ranks : results[b].optima) {
        SetFamily cand = canonical_form(ranks_to_family(space, n, k, ranks)).family;
        bool seen = false;
        for (const SetFamily& r : reps) {
          if (r == cand) {
            seen = true;
            break;
          }
        }
        if (!seen) reps.push_back(std::move(cand));
      }
    }
    std::sort(reps.begin(), reps.end(),
              [](const SetFamily& a, const SetFamily& b) {
                return std::lexicographical_compare(
                    a.sets.begin(), a.sets.end(), b.sets.begin(), b.sets.end(),
                    [](const KSubset& x, const KSubset& y) {
                      return x.elems < y.elems;
                    });
              });
    out.optima = std::move(reps);
  }

  auto t1 = std::chrono::steady_clock::now();
  out.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
  return out;
}

std::vector<SetFamily> all_optimal_families(int n, int k, std::uint64_t m,
                                            const SolveOptions& options) {
  SolveOptions opt = options;
  opt.enumerate_all = true;
  SolveResult res = max_total_intersection(n, k, m, opt);
  if (!res.exact) {
    throw ResourceLimitError("node limit hit before enumerating optima");
  }
  return res.optima.value_or(std::vector<SetFamily>{});
}

}  // namespace tic
