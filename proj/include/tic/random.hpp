#pragma once

#include <cstdint>
#include <random>

#include "tic/family.hpp"

namespace tic {

// Uniformly random family of m distinct k-subsets of [n]. Requires the
// whole space size to fit the fast binomial path.
SetFamily random_family(int n, int k, std::uint64_t m, std::mt19937_64& rng);

}  // namespace tic
