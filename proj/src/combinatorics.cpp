#include "tic/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <mutex>

namespace tic {

namespace {

constexpr int kTableRows = 65;  // C(64,32) still fits in 63 bits

struct U64Table {
  // row n holds C(n,0..n); sentinel ~0 marks does-not-fit
  std::uint64_t c[kTableRows][kTableRows];

  U64Table() {
    constexpr std::uint64_t kLimit = std::uint64_t(1) << 62;
    for (int n = 0; n < kTableRows; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) {
        std::uint64_t a = c[n - 1][k - 1];
        std::uint64_t b = (k <= n - 1) ? c[n - 1][k] : 0;
        c[n][k] = (a >= kLimit || b >= kLimit || a + b >= kLimit)
                      ? ~std::uint64_t(0)
                      : a + b;
      }
      for (int k = n + 1; k < kTableRows; ++k) c[n][k] = 0;
    }
  }
};

const U64Table& u64_table() {
  static const U64Table t;
  return t;
}

struct BigTable {
  BigInt c[kTableRows][kTableRows];

  BigTable() {
    for (int n = 0; n < kTableRows; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) {
        c[n][k] = c[n - 1][k - 1] + ((k <= n - 1) ? c[n - 1][k] : BigInt(0));
      }
    }
  }
};

const BigTable& big_table() {
  static const BigTable t;
  return t;
}

}  // namespace

bool KSubset::contains(int x) const {
  return std::binary_search(elems.begin(), elems.end(), x);
}

KSubset make_ksubset(int n, std::vector<int> elems) {
  if (n < 0) throw std::invalid_argument("ground set size must be nonnegative");
  std::sort(elems.begin(), elems.end());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] < 1 || elems[i] > n) {
      throw std::invalid_argument("set element out of range [1,n]");
    }
    if (i > 0 && elems[i] == elems[i - 1]) {
      throw std::invalid_argument("repeated element in set");
    }
  }
  return KSubset{n, std::move(elems)};
}

BigInt binom(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial needs n >= 0");
  if (k < 0 || k > n) return 0;
  if (n < kTableRows) return big_table().c[n][k];
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

std::uint64_t binom_u64(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial needs n >= 0");
  if (k < 0 || k > n) return 0;
  if (n < kTableRows) {
    std::uint64_t v = u64_table().c[n][k];
    if (v == ~std::uint64_t(0)) {
      throw ResourceLimitError("binomial coefficient exceeds 64 bits");
    }
    return v;
  }
  BigInt exact = binom(n, k);
  if (!exact.fits_ulong_p()) {
    throw ResourceLimitError("binomial coefficient exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(exact.get_ui());
}

std::strong_ordering lex_compare(const KSubset& a, const KSubset& b) {
  if (a.n != b.n || a.k() != b.k()) {
    throw std::invalid_argument("lex_compare needs matching n and k");
  }
  return std::lexicographical_compare_three_way(
      a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end());
}

bool lex_less(const KSubset& a, const KSubset& b) {
  return lex_compare(a, b) == std::strong_ordering::less;
}

BigInt lex_rank(const KSubset& a) {
  // Count subsets that agree on a prefix and then take a smaller element.
  BigInt rank = 0;
  int k = a.k();
  int prev = 0;
  for (int i = 1; i <= k; ++i) {
    int ai = a.elems[i - 1];
    for (int v = prev + 1; v < ai; ++v) {
      rank += binom(a.n - v, k - i);
    }
    prev = ai;
  }
  return rank;
}

KSubset lex_unrank(int n, int k, const BigInt& rank) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("bad (n,k)");
  if (sgn(rank) < 0 || rank >= binom(n, k)) {
    throw std::out_of_range("lex rank out of range");
  }
  KSubset out;
  out.n = n;
  out.elems.reserve(k);
  BigInt rest = rank;
  int v = 1;
  for (int i = 1; i <= k; ++i) {
    for (;; ++v) {
      BigInt block = binom(n - v, k - i);
      if (rest < block) break;
      rest -= block;
    }
    out.elems.push_back(v);
    ++v;
  }
  return out;
}

std::uint64_t lex_rank_u64(const KSubset& a) {
  std::uint64_t rank = 0;
  int k = a.k();
  int prev = 0;
  for (int i = 1; i <= k; ++i) {
    int ai = a.elems[i - 1];
    for (int v = prev + 1; v < ai; ++v) {
      rank += binom_u64(a.n - v, k - i);
    }
    prev = ai;
  }
  return rank;
}

KSubset lex_unrank_u64(int n, int k, std::uint64_t rank) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("bad (n,k)");
  if (rank >= binom_u64(n, k)) throw std::out_of_range("lex rank out of range");
  KSubset out;
  out.n = n;
  out.elems.reserve(k);
  int v = 1;
  for (int i = 1; i <= k; ++i) {
    for (;; ++v) {
      std::uint64_t block = binom_u64(n - v, k - i);
      if (rank < block) break;
      rank -= block;
    }
    out.elems.push_back(v);
    ++v;
  }
  return out;
}

int intersection_size(const KSubset& a, const KSubset& b) {
  int count = 0;
  auto ia = a.elems.begin(), ib = b.elems.begin();
  while (ia != a.elems.end() && ib != b.elems.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

std::uint64_t to_mask(const KSubset& a) {
  if (a.n > 64) throw std::invalid_argument("mask view needs n <= 64");
  std::uint64_t mask = 0;
  for (int x : a.elems) mask |= std::uint64_t(1) << (x - 1);
  return mask;
}

KSubset from_mask(int n, int k, std::uint64_t mask) {
  KSubset out;
  out.n = n;
  out.elems.reserve(k);
  while (mask != 0) {
    int x = std::countr_zero(mask) + 1;
    out.elems.push_back(x);
    mask &= mask - 1;
  }
  if (out.k() != k) throw std::invalid_argument("mask popcount mismatch");
  return out;
}

}  // namespace tic
