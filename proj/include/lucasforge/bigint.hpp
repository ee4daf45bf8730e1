#pragma once
// Exact integer and rational scalars. GMP supplies the arithmetic; this
// header pins the names and the canonical decimal text forms used by every
// report and serializer in the library.

#include <gmpxx.h>

#include <string>

namespace lucasforge {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

// Reduced form, "p/q" or plain "p" when q == 1.
inline std::string to_string(const Rational& v) { return v.get_str(); }

inline bool is_integer(const Rational& v) { return v.get_den() == 1; }

// Largest integer <= v.
inline BigInt floor_to_int(const Rational& v) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
  return q;
}

inline bool divides(const BigInt& d, const BigInt& n) {
  return d != 0 && mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace lucasforge
