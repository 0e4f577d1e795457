#pragma once

// Canonical labeling under ground-set permutations: the canonical form is
// the image minimizing the lex-sorted member list, so two families are
// isomorphic exactly when their canonical forms coincide.

#include <vector>

#include "tic/family.hpp"

namespace tic {

struct CanonicalForm {
  SetFamily family;
  std::vector<int> perm;  // perm[x-1] = new label of old element x
};

SetFamily apply_permutation(const SetFamily& f, const std::vector<int>& perm);

// Branch-and-bound over label assignments with an optimistic-image prune;
// guarded by ground-set and node limits for pathological inputs.
CanonicalForm canonical_form(const SetFamily& f);

// Fast-rejects on size and sorted degree sequence before canonicalizing.
bool is_isomorphic(const SetFamily& a, const SetFamily& b);

}  // namespace tic
