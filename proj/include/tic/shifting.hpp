#pragma once

// Structural shifting S_{i,j} plus the replacement move optimizer: swap one
// member for one non-member whenever that strictly increases I(F).

#include <cstdint>
#include <optional>
#include <vector>

#include "tic/family.hpp"

namespace tic {

struct Move {
  KSubset removed;
  KSubset inserted;
  std::int64_t delta;  // I gain, always > 0 for recorded moves
};
using MoveTrace = std::vector<Move>;

// S_{i,j}: each member A with i in A, j not in A is replaced by
// A \ {i} ∪ {j} unless that set is already a member. Size-preserving.
SetFamily shift(const SetFamily& f, int i, int j);

// Fixpoint of all S_{i,j} with j < i under the documented sweep
// (ascending j, then ascending i, repeated until a full sweep is quiet).
SetFamily compress(const SetFamily& f);

enum class CandidatePool {
  kAll,       // every non-member
  kLexLevel,  // non-members inside the next lex level segment L^(r+1)
};

// Best single swap strictly increasing I, or nullopt at a local maximum.
// Ties: lex-least inserted set, then lex-least resulting family.
// Deterministic for any thread count.
std::optional<Move> improve_once(const SetFamily& f,
                                 CandidatePool pool = CandidatePool::kAll,
                                 int threads = 1);

SetFamily apply_move(const SetFamily& f, const Move& m);

struct LocalSearchResult {
  SetFamily family;
  MoveTrace trace;
};

// Iterates improve_once until no move improves or the budget runs out.
LocalSearchResult local_search(SetFamily f, long max_moves,
                               CandidatePool pool = CandidatePool::kAll,
                               int threads = 1);

}  // namespace tic
