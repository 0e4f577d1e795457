#include "tic/hamming.hpp"

#include <cassert>
#include <stdexcept>

#include "tic/bounds.hpp"
#include "tic/combinatorics.hpp"

namespace tic {

ConstantWeightCode to_code(const SetFamily& f) {
  ConstantWeightCode code;
  code.n = f.n;
  code.k = f.k;
  code.words.reserve(f.size());
  for (const auto& s : f.sets) {
    std::string w(static_cast<std::size_t>(f.n), '0');
    for (int x : s.elems) w[static_cast<std::size_t>(x - 1)] = '1';
    code.words.push_back(std::move(w));
  }
  return code;
}

SetFamily from_code(const ConstantWeightCode& code) {
  std::vector<KSubset> sets;
  sets.reserve(code.words.size());
  for (const auto& w : code.words) {
    if (static_cast<int>(w.size()) != code.n) {
      throw std::invalid_argument("word length does not match code length");
    }
    std::vector<int> elems;
    for (int i = 0; i < code.n; ++i) {
      char c = w[static_cast<std::size_t>(i)];
      if (c == '1') {
        elems.push_back(i + 1);
      } else if (c != '0') {
        throw std::invalid_argument("words must consist of 0 and 1");
      }
    }
    if (static_cast<int>(elems.size()) != code.k) {
      throw std::invalid_argument("word weight does not match code weight");
    }
    sets.push_back(make_ksubset(code.n, std::move(elems)));
  }
  return make_family(code.n, code.k, std::move(sets));
}

BigInt total_hamming_distance(const SetFamily& f) {
  BigInt m(static_cast<long>(f.size()));
  BigInt total = 2 * BigInt(f.k) * m * m - 2 * total_intersection(f);
#ifndef NDEBUG
  if (f.size() <= 64) {
    BigInt direct = 0;
    for (const auto& a : f.sets) {
      for (const auto& b : f.sets) {
        direct += 2 * (f.k - intersection_size(a, b));
      }
    }
    assert(direct == total);
  }
#endif
  return total;
}

AverageDistance average_distance(const SetFamily& f,
                                 PairConvention convention) {
  if (f.size() < 2) {
    throw std::invalid_argument("average distance needs at least two words");
  }
  BigInt m(static_cast<long>(f.size()));
  // Diagonal pairs contribute zero, so the ordered-pair total equals the
  // total over ordered distinct pairs.
  BigInt total = total_hamming_distance(f);
  AverageDistance out;
  out.convention = convention;
  if (convention == PairConvention::kOrderedDistinct) {
    out.total = total;
    out.pair_count = m * (m - 1);
  } else {
    out.total = total / 2;
    out.pair_count = m * (m - 1) / 2;
  }
  out.mean = Rational(out.total) / Rational(out.pair_count);
  out.mean.canonicalize();
  return out;
}

MinDistanceResult min_avg_distance(int n, int k, const BigInt& m,
                                   const SolveOptions& options) {
  if (m < 2) {
    throw std::invalid_argument("need at least two words");
  }
  SolveResult solve =
      max_total_intersection(n, k, to_u64(m, "family size"), options);
  if (!solve.exact) {
    throw ResourceLimitError("node limit reached before proving optimality");
  }
  MinDistanceResult out;
  out.n = n;
  out.k = k;
  out.m = m;
  out.total = 2 * BigInt(k) * m * m - 2 * solve.mi_value;
  out.mean = Rational(out.total) / Rational(m * (m - 1));
  out.mean.canonicalize();
  out.witness = to_code(solve.witness);
  out.solve = std::move(solve);
  try {
    SizeDecomposition dec = decompose_size(n, k, 1, m);
    BoundReport rep = upper_bound_t1(n, k, dec.r, dec.delta);
    Rational lb = Rational(2 * BigInt(k) * m * m) - 2 * rep.bound_value;
    lb.canonicalize();
    out.total_lower_bound = lb;
    out.lower_bound_sound = (lb <= Rational(out.total));
  } catch (const std::exception&) {
    // Bound not applicable at this size; leave the fields empty.
  }
  return out;
}

}  // namespace tic
