#include "tic/bigint.hpp"

#include <limits>

namespace tic {

Rational parse_rational(const std::string& s) {
  if (s.empty()) {
    throw std::invalid_argument("empty rational literal");
  }
  Rational q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  return q.get_str();
}

long rational_floor(const Rational& q) {
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!f.fits_slong_p()) {
    throw ResourceLimitError("rational floor exceeds long range");
  }
  return f.get_si();
}

std::uint64_t to_u64(const BigInt& v, const char* what) {
  if (sgn(v) < 0 || !v.fits_ulong_p()) {
    throw ResourceLimitError(std::string(what) + " does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(v.get_ui());
}

}  // namespace tic
