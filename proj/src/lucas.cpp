#include "lucasforge/lucas.hpp"

#include <numeric>
#include <string>

namespace lucasforge {

LucasCache::LucasCache(int max_index) : max_index_(max_index) {
  polys_ = {Poly2(0), Poly2(1)};
  factorials_ = {Poly2(1), Poly2(1)};
  atoms_ = {Poly2(1), Poly2(1)};  // P_1 = 1; index 0 is never used
}

void LucasCache::check_index(int n, const char* what) const {
  if (n < 0 || n > max_index_)
    throw IndexOutOfRange(std::string(what) + ": index " + std::to_string(n) +
                          " outside [0, " + std::to_string(max_index_) + "]");
}

void LucasCache::ensure_poly(int n) const {
  const Poly2 s = Poly2::var_s();
  const Poly2 t = Poly2::var_t();
  while (static_cast<int>(polys_.size()) <= n) {
    auto i = polys_.size();
    polys_.push_back(s * polys_[i - 1] + t * polys_[i - 2]);
  }
}

void LucasCache::ensure_factorial(int n) const {
  ensure_poly(n);
  while (static_cast<int>(factorials_.size()) <= n) {
    auto i = factorials_.size();
    factorials_.push_back(factorials_[i - 1] * polys_[i]);
  }
}

void LucasCache::ensure_atom(int d) const {
  ensure_poly(d);
  while (static_cast<int>(atoms_.size()) <= d) {
    int e = static_cast<int>(atoms_.size());
    Poly2 proper(1);
    for (int f = 1; f < e; ++f)
      if (e % f == 0) proper *= atoms_[f];
    try {
      atoms_.push_back(exact_div(polys_[e], proper));
    } catch (const NotDivisible&) {
      throw InternalInconsistency("lucas atom P_" + std::to_string(e) +
                                  ": proper-divisor atom product does not divide {n}");
    }
  }
}

Poly2 LucasCache::poly(int n) const {
  check_index(n, "lucas poly");
  std::lock_guard lock(mu_);
  ensure_poly(n);
  return polys_[n];
}

Poly2 LucasCache::factorial(int n) const {
  check_index(n, "lucas factorial");
  std::lock_guard lock(mu_);
  ensure_factorial(n);
  return factorials_[n];
}

Poly2 LucasCache::atom(int d) const {
  check_index(d, "lucas atom");
  if (d < 1) throw IndexOutOfRange("lucas atom: index must be >= 1");
  std::lock_guard lock(mu_);
  ensure_atom(d);
  return atoms_[d];
}

Poly2 LucasCache::factorial_quotient(const std::vector<int>& nums,
                                     const std::vector<int>& dens, int k,
                                     const char* what) const {
  Poly2 num(1), den(1);
  if (k == 1) {
    std::lock_guard lock(mu_);
    int top = 0;
    for (int i : nums) top = std::max(top, i);
    for (int j : dens) top = std::max(top, j);
    ensure_factorial(top);
    for (int i : nums) num *= factorials_[i];
    for (int j : dens) den *= factorials_[j];
  } else {
    for (int i : nums) num *= kdiv_factorial(i, k);
    for (int j : dens) den *= kdiv_factorial(j, k);
  }
  try {
    return exact_div(num, den);
  } catch (const NotDivisible&) {
    throw InternalInconsistency(std::string(what) +
                                ": factorial quotient is not a polynomial");
  }
}

Poly2 LucasCache::lucanomial(int n, int k) const {
  check_index(n, "lucanomial");
  if (k < 0 || k > n) throw IndexOutOfRange("lucanomial: k outside [0, n]");
  return factorial_quotient({n}, {k, n - k}, 1, "lucanomial");
}

Poly2 LucasCache::catalan(int n) const {
  check_index(n, "lucas catalan");
  check_index(2 * n, "lucas catalan");
  Poly2 b = lucanomial(2 * n, n);
  try {
    return exact_div(b, poly(n + 1));
  } catch (const NotDivisible&) {
    throw InternalInconsistency("lucas catalan: {n+1} does not divide lucanomial(2n,n)");
  }
}

Poly2 LucasCache::rational_catalan(int a, int b) const {
  if (a < 1 || b < 1) throw IndexOutOfRange("rational lucas catalan: indices must be >= 1");
  if (std::gcd(a, b) != 1)
    throw NotCoprime("rational lucas catalan: gcd(" + std::to_string(a) + ", " +
                     std::to_string(b) + ") != 1");
  check_index(a + b, "rational lucas catalan");
  try {
    return exact_div(lucanomial(a + b, a), poly(a + b));
  } catch (const NotDivisible&) {
    throw InternalInconsistency("rational lucas catalan: {a+b} does not divide lucanomial");
  }
}

Poly2 LucasCache::super(int m, int n) const {
  if (m < 0 || n < 0) throw IndexOutOfRange("super lucas: negative index");
  check_index(2 * std::max(m, n), "super lucas");
  if (m == 0 && n == 0) return Poly2(1);  // all factorials cancel
  return factorial_quotient({2 * m, 2 * n}, {m, n, m + n}, 1, "super lucas");
}

Poly2 LucasCache::generalized(int r, int n) const {
  if (r < 0 || n < 0) throw IndexOutOfRange("generalized lucas catalan: negative index");
  check_index(std::max(2 * r + 1, std::max(2 * n, n + r + 1)), "generalized lucas catalan");
  return factorial_quotient({2 * r + 1, 2 * n}, {r, n, n + r + 1}, 1,
                            "generalized lucas catalan");
}

Poly2 LucasCache::kdiv_factorial(int n, int k) const {
  if (k < 1) throw IndexOutOfRange("kdiv factorial: k must be >= 1");
  if (n < 0) throw IndexOutOfRange("kdiv factorial: negative index");
  check_index(n * k, "kdiv factorial");
  if (k == 1) return factorial(n);
  std::lock_guard lock(mu_);
  auto& chain = kdiv_chains_[k];
  if (chain.empty()) chain.push_back(Poly2(1));  // {0:k}! = 1
  ensure_poly(n * k);
  while (static_cast<int>(chain.size()) <= n) {
    auto i = chain.size();
    chain.push_back(chain[i - 1] * polys_[static_cast<int>(i) * k]);
  }
  return chain[n];
}

Poly2 LucasCache::kdiv_lucanomial(int n, int m, int k) const {
  if (m < 0 || m > n) throw IndexOutOfRange("kdiv lucanomial: m outside [0, n]");
  check_index(n * k, "kdiv lucanomial");
  return factorial_quotient({n}, {m, n - m}, k, "kdiv lucanomial");
}

Poly2 LucasCache::super_kdiv(int m, int n, int k) const {
  if (m < 0 || n < 0) throw IndexOutOfRange("super lucas kdiv: negative index");
  if (k < 1) throw IndexOutOfRange("super lucas kdiv: k must be >= 1");
  check_index(2 * std::max(m, n) * k, "super lucas kdiv");
  if (m == 0 && n == 0) return Poly2(1);
  return factorial_quotient({2 * m, 2 * n}, {m, n, m + n}, k, "super lucas kdiv");
}

}  // namespace lucasforge
