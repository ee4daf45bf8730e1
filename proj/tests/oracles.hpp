#pragma once
// Independent oracles used by the tests. Everything here recomputes values
// from first principles (plain recurrences and products) without touching
// the caches or the exact-division path under test.

#include <vector>

#include "lucasforge/bigint.hpp"
#include "lucasforge/poly2.hpp"

namespace oracles {

using lucasforge::BigInt;
using lucasforge::Poly2;
using lucasforge::Rational;

// F_n by the plain recurrence.
inline BigInt fib(long n) {
  BigInt a = 0, b = 1;
  for (long i = 0; i < n; ++i) {
    BigInt next = a + b;
    a = b;
    b = next;
  }
  return a;
}

inline BigInt fib_factorial(long n) {
  BigInt p = 1;
  for (long i = 1; i <= n; ++i) p *= fib(i);
  return p;
}

inline Rational fibonomial(long n, long k) {
  Rational q(fib_factorial(n), fib_factorial(k) * fib_factorial(n - k));
  q.canonicalize();
  return q;
}

// C_n by the convolution recurrence C_n = sum C_i C_{n-1-i}.
inline BigInt catalan(long n) {
  std::vector<BigInt> c{1};
  for (long i = 1; i <= n; ++i) {
    BigInt sum = 0;
    for (long j = 0; j < i; ++j) sum += c[j] * c[i - 1 - j];
    c.push_back(sum);
  }
  return c[n];
}

// {n} by the plain polynomial recurrence.
inline Poly2 lucas_poly(int n) {
  Poly2 prev(0), cur(1);
  if (n == 0) return prev;
  const Poly2 s = Poly2::var_s();
  const Poly2 t = Poly2::var_t();
  for (int i = 2; i <= n; ++i) {
    Poly2 next = s * cur + t * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

inline Poly2 lucas_factorial(int n) {
  Poly2 p(1);
  for (int i = 1; i <= n; ++i) p *= lucas_poly(i);
  return p;
}

// F_k F_2k ... F_nk.
inline BigInt kdiv_fib_factorial(long n, long k) {
  BigInt p = 1;
  for (long i = 1; i <= n; ++i) p *= fib(i * k);
  return p;
}

}  // namespace oracles
