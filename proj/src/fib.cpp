#include "lucasforge/fib.hpp"

#include <numeric>
#include <string>

namespace lucasforge {

namespace {

void check_range(long n, long guard, const char* what) {
  if (n < 0 || n > guard)
    throw IndexOutOfRange(std::string(what) + ": index " + std::to_string(n) +
                          " outside [0, " + std::to_string(guard) + "]");
}

BigInt int_factorial(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return BigInt(0);
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

FibCache::FibCache(long max_index) : max_index_(max_index) {
  fib_ = {BigInt(0), BigInt(1)};
  fib_fact_ = {BigInt(1), BigInt(1)};
}

void FibCache::ensure(long n) const {
  while (static_cast<long>(fib_.size()) <= n) {
    auto i = fib_.size();
    fib_.push_back(fib_[i - 1] + fib_[i - 2]);
    fib_fact_.push_back(fib_fact_[i - 1] * fib_.back());
  }
}

BigInt FibCache::fib(long n) const {
  check_range(n, max_index_, "fib");
  // Fast doubling: F(2k) = F(k)(2F(k+1) - F(k)), F(2k+1) = F(k)^2 + F(k+1)^2.
  BigInt a = 0, b = 1;  // F(k), F(k+1), k built from the high bit down
  for (int bit = 63; bit >= 0; --bit) {
    BigInt d = a * (2 * b - a);
    BigInt e = a * a + b * b;
    a = d;
    b = e;
    if ((static_cast<unsigned long>(n) >> bit) & 1UL) {
      a = std::move(b);
      b = d + a;
    }
  }
  return a;
}

BigInt FibCache::fib_factorial(long n) const {
  check_range(n, max_index_, "fib_factorial");
  std::lock_guard lock(mu_);
  ensure(n);
  return fib_fact_[n];
}

BigInt FibCache::factorial_quotient(const std::vector<long>& nums,
                                    const std::vector<long>& dens,
                                    const char* what) const {
  BigInt num = 1, den = 1;
  {
    std::lock_guard lock(mu_);
    long top = 0;
    for (long i : nums) top = std::max(top, i);
    for (long j : dens) top = std::max(top, j);
    ensure(top);
    for (long i : nums) num *= fib_fact_[i];
    for (long j : dens) den *= fib_fact_[j];
  }
  if (!divides(den, num))
    throw NotDivisible(std::string(what) + ": Fibonacci factorial quotient is not integral");
  return num / den;
}

BigInt FibCache::fibonomial(long n, long k) const {
  check_range(n, max_index_, "fibonomial");
  if (k < 0 || k > n)
    throw IndexOutOfRange("fibonomial: k outside [0, n]");
  return factorial_quotient({n}, {k, n - k}, "fibonomial");
}

BigInt FibCache::fibocatalan(long n) const {
  check_range(n, max_index_, "fibocatalan");
  check_range(2 * n, max_index_, "fibocatalan");
  BigInt b = fibonomial(2 * n, n);
  BigInt f = fib(n + 1);
  if (!divides(f, b)) throw NotDivisible("fibocatalan: F_{n+1} does not divide binom(2n,n)_F");
  return b / f;
}

BigInt FibCache::super_fibocatalan(long m, long n) const {
  check_range(m, max_index_, "super_fibocatalan");
  check_range(n, max_index_, "super_fibocatalan");
  check_range(2 * std::max(m, n), max_index_, "super_fibocatalan");
  return factorial_quotient({2 * m, 2 * n}, {m, n, m + n}, "super_fibocatalan");
}

BigInt FibCache::generalized_fibocatalan(long r, long n) const {
  check_range(r, max_index_, "generalized_fibocatalan");
  check_range(n, max_index_, "generalized_fibocatalan");
  check_range(std::max(2 * r + 1, std::max(2 * n, n + r + 1)), max_index_,
              "generalized_fibocatalan");
  return factorial_quotient({2 * r + 1, 2 * n}, {r, n, n + r + 1}, "generalized_fibocatalan");
}

BigInt FibCache::fib_gcd(long m, long n) const {
  return gcd(fib(m), fib(n));
}

BigInt catalan(long n) {
  if (n < 0) throw IndexOutOfRange("catalan: negative index");
  BigInt b = binomial(2 * n, n);
  return b / (n + 1);  // exact: (n+1) | binom(2n,n)
}

BigInt super_catalan(long m, long n) {
  if (m < 0 || n < 0) throw IndexOutOfRange("super_catalan: negative index");
  BigInt num = int_factorial(2 * m) * int_factorial(2 * n);
  BigInt den = int_factorial(m) * int_factorial(n) * int_factorial(m + n);
  if (!divides(den, num)) throw NotDivisible("super_catalan: quotient is not integral");
  return num / den;
}

BigInt rational_catalan(long a, long b) {
  if (a < 1 || b < 1) throw IndexOutOfRange("rational_catalan: indices must be >= 1");
  if (std::gcd(a, b) != 1)
    throw NotCoprime("rational_catalan: gcd(" + std::to_string(a) + ", " + std::to_string(b) +
                     ") != 1");
  BigInt num = binomial(a + b, a);
  BigInt den(a + b);
  if (!divides(den, num)) throw NotDivisible("rational_catalan: quotient is not integral");
  return num / den;
}

Rational gen_catalan_raw(long r, long n) {
  if (r < 0 || n < 0) throw IndexOutOfRange("gen_catalan_raw: negative index");
  Rational q(int_factorial(2 * n), int_factorial(n) * int_factorial(n + r + 1));
  q.canonicalize();
  return q;
}

BigInt gessel_j(long r) {
  if (r < 0) throw IndexOutOfRange("gessel_j: negative index");
  BigInt num = int_factorial(2 * r + 1);
  BigInt den = int_factorial(r);
  return num / den;  // exact: r! | (2r+1)!
}

Rational classical_corollary_contrast(long n) {
  if (n < 0) throw IndexOutOfRange("classical_corollary_contrast: negative index");
  Rational q(binomial(2 * n + 1, n), BigInt(n + 2));
  q.canonicalize();
  return q;
}

}  // namespace lucasforge
