#include "tic/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace tic {

namespace {

constexpr int kMaxGroundSet = 20;
constexpr std::uint64_t kNodeLimit = 2'000'000;

using Image = std::vector<std::vector<int>>;

Image sorted_image(const SetFamily& f) {
  Image img;
  img.reserve(f.size());
  for (const KSubset& a : f.sets) img.push_back(a.elems);
  std::sort(img.begin(), img.end());
  return img;
}

struct Search {
  const SetFamily& f;
  std::vector<int> assign;   // assign[x-1] = new label or 0
  std::vector<int> order;    // candidate olds, by descending degree
  Image best;
  std::vector<int> best_perm;
  std::uint64_t nodes = 0;

  explicit Search(const SetFamily& fam) : f(fam), assign(fam.n, 0) {}

  // Lex-least image still reachable: unassigned elements of each member
  // take the smallest labels not yet handed out, independently per member.
  Image optimistic(int depth) const {
    Image img;
    img.reserve(f.size());
    for (const KSubset& a : f.sets) {
      std::vector<int> e;
      e.reserve(a.elems.size());
      int unassigned = 0;
      for (int x : a.elems) {
        if (assign[x - 1] != 0) {
          e.push_back(assign[x - 1]);
        } else {
          ++unassigned;
        }
      }
      std::sort(e.begin(), e.end());
      for (int i = 1; i <= unassigned; ++i) e.push_back(depth + i);
      img.push_back(std::move(e));
    }
    std::sort(img.begin(), img.end());
    return img;
  }

  void dfs(int depth) {
    if (++nodes > kNodeLimit) {
      throw ResourceLimitError("canonical labeling exceeded node limit");
    }
    Image opt = optimistic(depth);
    if (!(opt < best)) return;
    if (depth == f.n) {
      best = std::move(opt);
      best_perm.assign(assign.begin(), assign.end());
      return;
    }
    for (int x : order) {
      if (assign[x - 1] != 0) continue;
      assign[x - 1] = depth + 1;
      dfs(depth + 1);
      assign[x - 1] = 0;
    }
  }
};

}  // namespace

SetFamily apply_permutation(const SetFamily& f, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != f.n) {
    throw std::invalid_argument("permutation size must equal n");
  }
  std::vector<bool> seen(f.n, false);
  for (int v : perm) {
    if (v < 1 || v > f.n || seen[v - 1]) {
      throw std::invalid_argument("not a permutation of [n]");
    }
    seen[v - 1] = true;
  }
  std::vector<KSubset> sets;
  sets.reserve(f.size());
  for (const KSubset& a : f.sets) {
    std::vector<int> e;
    e.reserve(a.elems.size());
    for (int x : a.elems) e.push_back(perm[x - 1]);
    sets.push_back(make_ksubset(f.n, std::move(e)));
  }
  return make_family(f.n, f.k, std::move(sets));
}

CanonicalForm canonical_form(const SetFamily& f) {
  if (f.n > kMaxGroundSet) {
    throw ResourceLimitError("ground set too large for canonical labeling");
  }
  std::vector<int> identity(f.n);
  std::iota(identity.begin(), identity.end(), 1);
  if (f.sets.empty()) return CanonicalForm{f, identity};

  Search s(f);
  s.best = sorted_image(f);
  s.best_perm = identity;
  DegreeVector deg = degree_vector(f);
  s.order.resize(f.n);
  std::iota(s.order.begin(), s.order.end(), 1);
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&deg](int a, int b) { return deg[a - 1] > deg[b - 1]; });
  s.dfs(0);

  return CanonicalForm{apply_permutation(f, s.best_perm), s.best_perm};
}

bool is_isomorphic(const SetFamily& a, const SetFamily& b) {
  if (a.n != b.n || a.k != b.k) {
    throw std::invalid_argument("families have mismatched (n,k)");
  }
  if (a.size() != b.size()) return false;
  DegreeVector da = degree_vector(a);
  DegreeVector db = degree_vector(b);
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a).family == canonical_form(b).family;
}

}  // namespace tic
