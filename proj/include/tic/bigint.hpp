#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tic {

// Exact arithmetic everywhere a count or a delta can leave 64 bits.
using BigInt = mpz_class;
using Rational = mpq_class;

// Thrown when a configurable resource guard (node limit, materialization
// cap, 64-bit fast path) stops a computation. Callers must treat the
// result as absent, never as a silently wrong value.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

// Parses "3", "-2", "1/3". Always canonicalized.
Rational parse_rational(const std::string& s);

std::string rational_to_string(const Rational& q);

// floor(q) for rationals that fit a signed long.
long rational_floor(const Rational& q);

// Checked narrowing; throws ResourceLimitError when the value is too big.
std::uint64_t to_u64(const BigInt& v, const char* what);

}  // namespace tic
