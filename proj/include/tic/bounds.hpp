#pragma once

// Closed-form machinery: the box-constrained sum-of-squares maximizer, the
// literal upper-bound formulas for I at a given (r, delta) size, the
// hypothesis-range report (required ground-set size and admissible delta
// interval), sandwich verification, and star-union minima.

#include <optional>
#include <vector>

#include "tic/bigint.hpp"
#include "tic/family.hpp"

namespace tic {

struct ConvexMaxResult {
  Rational value;
  std::vector<Rational> witness;  // r0 copies of b, the leftover, then a's
  long r0 = 0;
};

// Maximum of sum x_i^2 over num_vars variables with a <= x_i <= b and
// sum x_i = m. Feasibility needs (num_vars-1)a + b <= m <= num_vars*b.
ConvexMaxResult convex_max(const Rational& a, const Rational& b,
                           const Rational& m, int num_vars);

struct HypothesisReport {
  int n = 0;
  int k = 0;
  int t = 1;
  long r = 0;
  Rational delta;
  BigInt required_n;
  Rational delta_lo;
  Rational delta_hi;  // delta = 1 is always admissible on top of [lo, hi]
  bool n_ok = false;
  bool delta_ok = false;
  bool met = false;
};

// C_s = 2^(2^(s-1)-1) * 10^(2^(s+2)-2) * (k^2 t^4 (r+1)^7)^(2^(s-1)).
BigInt hypothesis_constant(int s, int k, int t, long r);

// Smallest ground set the closed-form guarantees assume:
// 3000 (r+1)^3 (k+r) k^2 when t = 1, and C_1 (3 t C_t)^(2t) when t >= 2.
BigInt required_ground_set(int k, int t, long r);

HypothesisReport hypothesis_report(int n, int k, int t, long r,
                                   const Rational& delta);

struct BoundReport {
  int n = 0;
  int k = 0;
  int t = 1;
  long r = 0;
  Rational delta;
  BigInt m;  // family size described by (t, r, delta)
  Rational bound_value;
  // Exact I of the lex family of size m; absent when m would be too large
  // to materialize.
  std::optional<BigInt> reference_value;
  std::optional<bool> bound_holds;  // bound_value >= reference_value
  // The same formula read at (r+1, delta -> 0); reported when delta = 1,
  // where the literal value is known to dip below the exact reference.
  std::optional<Rational> folded_value;
  HypothesisReport hypotheses;
};

// Literal formula, any t >= 1:
// (t-1) m^2 + (r + delta^2) C(n-t,k-t)^2
//   + (n - (t + r + floor(delta) - 1)) (sum_{i=t+1}^{t+r} C(n-i,k-t-1))^2
Rational literal_bound_value(int n, int k, int t, long r,
                             const Rational& delta, const BigInt& m);

// t = 1 evaluator; m follows from (r, delta).
BoundReport upper_bound_t1(int n, int k, long r, const Rational& delta);

// t >= 2 evaluator; m must equal the (r, delta) size exactly.
BoundReport upper_bound_general(int n, int k, int t, long r,
                                const Rational& delta, const BigInt& m);

// True iff some relabeling of [n] places F between L^(r) and L^(r+1).
// Throws when |F| is outside [|L^(r)|, |L^(r+1)|].
bool verify_sandwich(const SetFamily& f, int t, long r);

struct StarUnionMinimum {
  BigInt min_size;
  // Minimizing core configurations as canonical t-uniform families.
  std::vector<SetFamily> core_classes;
};

// Minimum union size over all r-element sets of distinct t-cores.
StarUnionMinimum min_star_union_size(int n, int k, int t, long r);

// C(n-1,k-1)^2 + (n-1) C(n-2,k-2)^2 = I of a full 1-star.
BigInt full_star_total_intersection(int n, int k);

}  // namespace tic
