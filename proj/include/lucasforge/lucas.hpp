#pragma once
// Lucas polynomials {n}, Lucas factorials {n}!, Lucas atoms P_d, lucanomials,
// and the Lucas analogues of the Catalan-type families, including the
// k-divisible extension.
//
// {0} = 0, {1} = 1, {n} = s{n-1} + t{n-2}. The atoms are the factors with
// {n} = prod_{d|n} P_d; P_1 = 1 and each P_d for d >= 2 is obtained by exact
// division of {d} by the atoms of its proper divisors. All factorial
// quotients below are computed by exact polynomial division, which the cited
// theory guarantees to succeed; a failure raises InternalInconsistency.

#include <map>
#include <mutex>
#include <vector>

#include "lucasforge/poly2.hpp"

namespace lucasforge {

inline constexpr int kLucasDefaultMaxIndex = 500;

// Memoized store for {n}, {n}!, P_d and the k-divisible factorial chains.
// Concurrent readers are safe; fills happen under an internal lock and are
// idempotent. All returned values are independent copies.
class LucasCache {
 public:
  explicit LucasCache(int max_index = kLucasDefaultMaxIndex);

  int max_index() const noexcept { return max_index_; }

  Poly2 poly(int n) const;       // {n}
  Poly2 factorial(int n) const;  // {n}!
  Poly2 atom(int d) const;       // P_d, d >= 1

  // {n}! / ({k}! {n-k}!)
  Poly2 lucanomial(int n, int k) const;

  // C_{{n}} = lucanomial(2n, n) / {n+1}
  Poly2 catalan(int n) const;

  // Cat{a,b} = lucanomial(a+b, a) / {a+b}, gcd(a,b) = 1
  Poly2 rational_catalan(int a, int b) const;

  // S{m,n} = {2m}!{2n}! / ({m}!{n}!{m+n}!); S{0,0} = 1
  Poly2 super(int m, int n) const;

  // J_{{r}} {2n}! / ({n}!{n+r+1}!) with J_{{r}} = {2r+1}!/{r}!
  Poly2 generalized(int r, int n) const;

  // {n:k}! = {k}{2k}...{nk}; {0:k}! = 1
  Poly2 kdiv_factorial(int n, int k) const;

  // {n:k}! / ({m:k}! {n-m:k}!)
  Poly2 kdiv_lucanomial(int n, int m, int k) const;

  // S{m,n:k} = {2m:k}!{2n:k}! / ({m:k}!{n:k}!{m+n:k}!)
  Poly2 super_kdiv(int m, int n, int k) const;

 private:
  void ensure_poly(int n) const;  // callers hold mu_
  void ensure_factorial(int n) const;
  void ensure_atom(int d) const;

  void check_index(int n, const char* what) const;
  Poly2 factorial_quotient(const std::vector<int>& nums, const std::vector<int>& dens,
                           int k, const char* what) const;

  mutable std::mutex mu_;
  mutable std::vector<Poly2> polys_;
  mutable std::vector<Poly2> factorials_;
  mutable std::vector<Poly2> atoms_;                      // atoms_[d] = P_d; [0] unused
  mutable std::map<int, std::vector<Poly2>> kdiv_chains_;  // k -> partial products
  int max_index_;
};

}  // namespace lucasforge
