#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tic/bounds.hpp"
#include "tic/canonical.hpp"
#include "tic/construct.hpp"

using namespace tic;

TEST_CASE("convex_max anchors") {
  ConvexMaxResult r = convex_max(0, 5, 12, 3);
  CHECK(r.value == 54);
  CHECK(r.r0 == 2);
  CHECK(r.witness == std::vector<Rational>{5, 5, 2});

  r = convex_max(2, 2, 6, 3);
  CHECK(r.value == 12);
  CHECK(r.witness == std::vector<Rational>{2, 2, 2});

  r = convex_max(0, 3, 3, 3);
  CHECK(r.value == 9);
  CHECK(r.witness == std::vector<Rational>{3, 0, 0});

  CHECK_THROWS_AS(convex_max(0, 1, 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(convex_max(2, 1, 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(convex_max(-1, 2, 3, 3), std::invalid_argument);
}

TEST_CASE("convex_max equals the vertex oracle and dominates random points") {
  std::mt19937_64 rng(41);
  auto rand_rational = [&](long lo, long hi) {
    long num = lo + static_cast<long>(rng() % (hi - lo + 1));
    long den = 1 + static_cast<long>(rng() % 4);
    Rational q(num, den);
    q.canonicalize();
    return q;
  };
  for (int inst = 0; inst < 100; ++inst) {
    int num_vars = 1 + static_cast<int>(rng() % 6);
    Rational a = rand_rational(0, 8);
    Rational b = a + rand_rational(0, 8);
    // Feasible sum: between (num_vars-1)a + b and num_vars*b.
    Rational lo = (num_vars - 1) * a + b;
    Rational hi = Rational(num_vars) * b;
    Rational lam(static_cast<long>(rng() % 101), 100);
    lam.canonicalize();
    Rational m = lo + lam * (hi - lo);
    m.canonicalize();
    ConvexMaxResult r = convex_max(a, b, m, num_vars);
    CHECK(r.value == oracle::convex_vertex_max(a, b, m, num_vars));

    // Witness really is feasible and attains the value.
    Rational sum = 0, sq = 0;
    for (const Rational& x : r.witness) {
      CHECK(x >= a);
      CHECK(x <= b);
      sum += x;
      sq += x * x;
    }
    CHECK(sum == m);
    CHECK(sq == r.value);

    // Random feasible points never beat it. Points are drawn by bounded
    // redistribution from the witness.
    std::vector<Rational> x = r.witness;
    for (int pt = 0; pt < 100; ++pt) {
      if (num_vars >= 2) {
        std::size_t i = rng() % x.size();
        std::size_t j = rng() % x.size();
        if (i != j) {
          Rational room = std::min(Rational(b - x[i]), Rational(x[j] - a));
          Rational frac(static_cast<long>(rng() % 5), 4);
          frac.canonicalize();
          Rational step = room * frac;
          x[i] += step;
          x[j] -= step;
        }
      }
      Rational val = 0;
      for (const Rational& xi : x) {
        CHECK(xi >= a);
        CHECK(xi <= b);
        val += xi * xi;
      }
      CHECK(val <= r.value);
    }
  }
}

TEST_CASE("hypothesis constants") {
  // C_1 = 10^6 k^2 t^4 (r+1)^7.
  CHECK(hypothesis_constant(1, 3, 2, 1) == BigInt("18432000000"));
  CHECK(hypothesis_constant(1, 2, 2, 0) == BigInt("64000000"));
  // C_2 = 2 * 10^14 * (k^2 t^4 (r+1)^7)^2.
  CHECK(hypothesis_constant(2, 2, 2, 0) == BigInt("819200000000000000"));
  // Growth is doubly exponential in s; s may not exceed t.
  CHECK(hypothesis_constant(3, 2, 3, 0) ==
        BigInt(8) * big_pow(10, 30) * big_pow(BigInt(4) * 81, 4));
  CHECK_THROWS_AS(hypothesis_constant(3, 2, 2, 0), std::invalid_argument);
}

TEST_CASE("required ground set sizes") {
  CHECK(required_ground_set(3, 1, 1) == 864000);
  CHECK(required_ground_set(2, 1, 0) == 24000);
  BigInt c1 = hypothesis_constant(1, 2, 2, 0);
  BigInt c2 = hypothesis_constant(2, 2, 2, 0);
  CHECK(required_ground_set(2, 2, 0) == c1 * big_pow(6 * c2, 4));
  CHECK(required_ground_set(2, 2, 0) > big_pow(10, 80));
}

TEST_CASE("hypothesis report anchors") {
  HypothesisReport h = hypothesis_report(10, 3, 1, 1, Rational(1, 2));
  CHECK(!h.met);
  CHECK(h.required_n == 864000);
  CHECK(!h.n_ok);

  h = hypothesis_report(1000000, 2, 1, 0, Rational(1, 2));
  CHECK(h.required_n == 24000);
  CHECK(h.n_ok);
  CHECK(h.delta_lo == Rational(3, 2500));  // 1200 / 10^6 reduced
  CHECK(h.delta_hi == Rational(2497, 2500));
  CHECK(h.delta_ok);
  CHECK(h.met);

  // delta = 1 is admissible even when the interval excludes it.
  h = hypothesis_report(1000000, 2, 1, 0, 1);
  CHECK(h.delta_ok);
  CHECK(h.met);

  // Tiny delta falls below the interval.
  h = hypothesis_report(1000000, 2, 1, 0, Rational(1, 1000000));
  CHECK(h.n_ok);
  CHECK(!h.delta_ok);
  CHECK(!h.met);

  // t >= 2 is out of reach at any desk-scale n.
  h = hypothesis_report(1000000, 2, 2, 0, Rational(1, 2));
  CHECK(!h.met);
}

TEST_CASE("t=1 bound evaluator anchors") {
  BoundReport r = upper_bound_t1(10, 3, 1, 0);
  CHECK(r.bound_value == 1872);
  REQUIRE(r.reference_value.has_value());
  CHECK(*r.reference_value == 1872);
  CHECK(r.bound_holds == true);
  CHECK(!r.folded_value.has_value());
  CHECK(r.m == 36);

  r = upper_bound_t1(10, 3, 1, 1);
  CHECK(r.bound_value == 3104);
  REQUIRE(r.reference_value.has_value());
  CHECK(*r.reference_value == 4392);
  CHECK(r.bound_holds == false);
  REQUIRE(r.folded_value.has_value());
  CHECK(*r.folded_value == 4392);
  CHECK(r.m == 64);

  // r = 0, delta = 1: the bound collapses to C(n-1,k-1)^2 and the full-star
  // value exceeds it for k >= 2.
  r = upper_bound_t1(10, 3, 0, 1);
  CHECK(r.bound_value == 1296);
  CHECK(*r.reference_value == 1872);
  CHECK(r.bound_holds == false);
}

TEST_CASE("t=1 bound equality at level boundaries") {
  for (int n = 4; n <= 14; ++n) {
    for (int k = 2; k <= 4 && k <= n; ++k) {
      for (long r = 1; r <= 3 && 1 + r <= n; ++r) {
        BoundReport rep = upper_bound_t1(n, k, r, 0);
        REQUIRE(rep.reference_value.has_value());
        CHECK(rep.bound_value == Rational(*rep.reference_value));
        CHECK(rep.bound_holds == true);
      }
    }
  }
}

TEST_CASE("general bound evaluator anchors") {
  BoundReport r = upper_bound_general(8, 3, 2, 0, 1, 6);
  CHECK(r.bound_value == 72);  // literal reading
  REQUIRE(r.folded_value.has_value());
  CHECK(*r.folded_value == 78);  // (r+1, delta=0) reading
  REQUIRE(r.reference_value.has_value());
  CHECK(*r.reference_value == 78);
  CHECK(r.bound_holds == false);  // the literal value dips below

  r = upper_bound_general(8, 3, 2, 1, 0, 6);
  CHECK(r.bound_value == 78);
  CHECK(*r.reference_value == 78);
  CHECK(r.bound_holds == true);

  // t = k, M = 1: bound meets the single-set diagonal.
  r = upper_bound_general(6, 3, 3, 0, 1, 1);
  CHECK(r.bound_value == 3);
  CHECK(*r.reference_value == 3);
  CHECK(r.bound_holds == true);

  CHECK_THROWS_AS(upper_bound_general(8, 3, 2, 0, 1, 7),
                  std::invalid_argument);
  CHECK_THROWS_AS(upper_bound_general(8, 3, 1, 0, 1, 6),
                  std::invalid_argument);
}

TEST_CASE("verify_sandwich anchors") {
  CHECK(verify_sandwich(full_t_star(6, 3, {1}), 1, 1));
  SetFamily f = make_family(
      6, 3,
      {make_ksubset(6, {1, 2, 3}), make_ksubset(6, {1, 2, 4}),
       make_ksubset(6, {1, 2, 5}), make_ksubset(6, {1, 3, 4})});
  CHECK(verify_sandwich(f, 1, 0));
  SetFamily clique = make_family(
      6, 3,
      {make_ksubset(6, {1, 2, 3}), make_ksubset(6, {1, 2, 4}),
       make_ksubset(6, {1, 3, 4}), make_ksubset(6, {2, 3, 4})});
  CHECK(!verify_sandwich(clique, 1, 0));
  // Size outside the sandwich range is rejected.
  CHECK_THROWS_AS(verify_sandwich(lex_segment(6, 3, 17), 1, 1),
                  std::invalid_argument);
}

TEST_CASE("sandwich families verify across the small grid") {
  for (int n = 4; n <= 7; ++n) {
    for (int k = 2; k <= 3 && k <= n; ++k) {
      for (int t = 1; t <= k; ++t) {
        for (long r = 0; r + t <= n && r <= 3; ++r) {
          BigInt a = lex_t_segment_size(n, k, t, r);
          BigInt b = lex_t_segment_size(n, k, t, r + 1);
          for (BigInt m = a; m <= b; ++m) {
            SetFamily f = sandwich_family(n, k, t, r, m);
            CHECK(verify_sandwich(f, t, r));
          }
        }
      }
    }
  }
  // Permuted sandwiches still verify.
  SetFamily mid = sandwich_family(7, 3, 2, 1, 7);
  std::vector<int> perm{4, 7, 1, 3, 6, 2, 5};
  CHECK(verify_sandwich(apply_permutation(mid, perm), 2, 1));
}

TEST_CASE("min star union anchors") {
  StarUnionMinimum m = min_star_union_size(4, 2, 1, 2);
  CHECK(m.min_size == 5);
  CHECK(m.core_classes.size() == 1);

  m = min_star_union_size(6, 3, 2, 1);
  CHECK(m.min_size == binom(4, 1));
  CHECK(m.core_classes.size() == 1);

  m = min_star_union_size(6, 3, 2, 2);
  CHECK(m.min_size == 7);
  REQUIRE(m.core_classes.size() == 1);
  // The winning cores share t-1 = 1 element.
  const SetFamily& cores = m.core_classes.front();
  CHECK(cores.size() == 2);
  CHECK(intersection_size(cores.sets[0], cores.sets[1]) == 1);

  m = min_star_union_size(6, 3, 2, 0);
  CHECK(m.min_size == 0);
}

TEST_CASE("min star union matches the lex segment size where stars are proper") {
  for (int n = 4; n <= 8; ++n) {
    for (int k = 2; k <= 4 && k <= n; ++k) {
      for (int t = 1; t <= 2 && t <= k; ++t) {
        for (long r = 1; r <= 3; ++r) {
          if (t + r - 1 > n) continue;
          if (binom_u64(n, t) < static_cast<std::uint64_t>(r)) continue;
          StarUnionMinimum m = min_star_union_size(n, k, t, r);
          CHECK(m.min_size == lex_t_segment_size(n, k, t, r));
          if (t < k && n > k) {
            CHECK(m.core_classes.size() == 1);
          }
        }
      }
    }
  }
  // Degenerate corners. t = k: every star is the single set {core}, so any
  // r distinct cores give union size r. n = k: every star is {[n]}. In both
  // the minimizer class is not unique.
  StarUnionMinimum deg = min_star_union_size(6, 2, 2, 2);
  CHECK(deg.min_size == 2);
  CHECK(deg.core_classes.size() == 2);
  deg = min_star_union_size(4, 4, 2, 2);
  CHECK(deg.min_size == 1);
  CHECK(deg.core_classes.size() == 2);
}

TEST_CASE("star formula matches the materialized star") {
  CHECK(full_star_total_intersection(4, 2) == 12);
  CHECK(full_star_total_intersection(10, 3) == 1872);
  for (int n = 2; n <= 14; ++n) {
    for (int k = 2; k <= n; ++k) {
      CHECK(full_star_total_intersection(n, k) ==
            total_intersection(full_t_star(n, k, {1})));
    }
  }
  for (int k = 2; k <= 8; ++k) {
    CHECK(full_star_total_intersection(k, k) == k);
  }
}
