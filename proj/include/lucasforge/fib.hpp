#pragma once
// Exact integer specializations: Fibonacci numbers, fibonomials, the
// FiboCatalan families, and the classical Catalan / super Catalan numbers.
// Every value is an exact big integer (or exact rational where the quantity
// is genuinely fractional); divisions that the theory guarantees to be exact
// raise NotDivisible when they are not, which always means a bug.

#include <mutex>
#include <vector>

#include "lucasforge/bigint.hpp"
#include "lucasforge/errors.hpp"

namespace lucasforge {

inline constexpr long kFibDefaultMaxIndex = 10000;

// Memoized Fibonacci layer. Concurrent readers are fine; the factorial chain
// fills under an internal lock and recomputation is idempotent.
class FibCache {
 public:
  explicit FibCache(long max_index = kFibDefaultMaxIndex);

  long max_index() const noexcept { return max_index_; }

  // F_n by fast doubling.
  BigInt fib(long n) const;

  // F_n! = F_n F_{n-1} ... F_1, with F_0! = 1.
  BigInt fib_factorial(long n) const;

  // F_n! / (F_k! F_{n-k}!), always an integer.
  BigInt fibonomial(long n, long k) const;

  // C_{n,F} = binom(2n,n)_F / F_{n+1}.
  BigInt fibocatalan(long n) const;

  // S(m,n)_F = F_{2m}! F_{2n}! / (F_m! F_n! F_{m+n}!); S(0,0)_F = 1.
  BigInt super_fibocatalan(long m, long n) const;

  // J_{r,F} F_{2n}! / (F_n! F_{n+r+1}!) with J_{r,F} = F_{2r+1}!/F_r!.
  BigInt generalized_fibocatalan(long r, long n) const;

  // gcd(F_m, F_n); equals F_{gcd(m,n)}.
  BigInt fib_gcd(long m, long n) const;

 private:
  void ensure(long n) const;
  BigInt factorial_quotient(const std::vector<long>& nums,
                            const std::vector<long>& dens,
                            const char* what) const;

  mutable std::mutex mu_;
  mutable std::vector<BigInt> fib_;       // fib_[i] = F_i
  mutable std::vector<BigInt> fib_fact_;  // fib_fact_[i] = F_i!
  long max_index_;
};

// Classical (non-Fibonacci) families. These need no cache: GMP computes the
// binomials and factorials directly.
BigInt binomial(long n, long k);  // 0 outside 0 <= k <= n
BigInt catalan(long n);
BigInt super_catalan(long m, long n);  // (2m)!(2n)!/(m!n!(m+n)!); S(0,0) = 1
BigInt rational_catalan(long a, long b);  // Cat(a,b); throws NotCoprime

// The raw Gessel quotient (2n)!/(n!(n+r+1)!) as an exact reduced rational;
// it need not be integral, which is exactly why it is exposed this way.
// Multiplying by J_r = (2r+1)!/r! gives the integer generalized Catalan.
Rational gen_catalan_raw(long r, long n);
BigInt gessel_j(long r);  // J_r = (2r+1)!/r!

// (1/(n+2)) * binom(2n+1, n), exact; the classical contrast quantity that is
// a fraction at n = 2.
Rational classical_corollary_contrast(long n);

}  // namespace lucasforge
