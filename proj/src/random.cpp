#include "tic/random.hpp"

#include <set>
#include <stdexcept>
#include <vector>

#include "tic/combinatorics.hpp"

namespace tic {

SetFamily random_family(int n, int k, std::uint64_t m, std::mt19937_64& rng) {
  std::uint64_t space = binom_u64(n, k);
  if (m > space) {
    throw std::invalid_argument("family size exceeds the number of k-subsets");
  }
  // Floyd's sampling: m distinct ranks drawn uniformly from [0, space).
  std::set<std::uint64_t> ranks;
  for (std::uint64_t j = space - m; j < space; ++j) {
    std::uniform_int_distribution<std::uint64_t> pick(0, j);
    std::uint64_t t = pick(rng);
    if (!ranks.insert(t).second) ranks.insert(j);
  }
  SetFamily f;
  f.n = n;
  f.k = k;
  f.sets.reserve(ranks.size());
  for (std::uint64_t r : ranks) f.sets.push_back(lex_unrank_u64(n, k, r));
  return f;
}

}  // namespace tic
