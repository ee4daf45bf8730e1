#pragma once
// Sparse bivariate polynomials in the formal variables s and t over exact
// integers. The term map is canonical: no zero coefficients are ever stored,
// so two values are equal iff their maps are identical, and the zero
// polynomial is the empty map.
//
// Terms are kept in display order (descending s-degree, ties by ascending
// t-degree), which makes formatting a plain traversal.

#include <iosfwd>
#include <map>
#include <string>

#include "lucasforge/bigint.hpp"
#include "lucasforge/errors.hpp"

namespace lucasforge {

struct Monomial {
  int deg_s = 0;
  int deg_t = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    if (a.deg_s != b.deg_s) return a.deg_s > b.deg_s;
    return a.deg_t < b.deg_t;
  }
};

class Poly2 {
 public:
  using TermMap = std::map<Monomial, BigInt, MonomialOrder>;

  Poly2() = default;
  Poly2(long constant);  // NOLINT: implicit, so `p + 1` and `Poly2(0)` read naturally
  explicit Poly2(const BigInt& constant);

  static Poly2 var_s() { return monomial(1, 1, 0); }
  static Poly2 var_t() { return monomial(1, 0, 1); }
  static Poly2 monomial(const BigInt& coeff, int deg_s, int deg_t);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  std::size_t term_count() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }

  // -1 for the zero polynomial.
  int deg_s() const;
  int deg_t() const;

  BigInt coeff(int deg_s, int deg_t) const;

  // True iff every stored coefficient is positive; vacuously true for zero.
  bool has_nonneg_coeffs() const;

  BigInt eval(const BigInt& s0, const BigInt& t0) const;

  Poly2 operator-() const;
  Poly2& operator+=(const Poly2& rhs);
  Poly2& operator-=(const Poly2& rhs);
  Poly2& operator*=(const Poly2& rhs);

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend bool operator==(const Poly2&, const Poly2&) = default;

 private:
  void add_term(const Monomial& m, const BigInt& c);

  TermMap terms_;
};

// Quotient q with q*b == a exactly. Operands are treated as polynomials in s
// whose coefficients are integer polynomials in t; each round eliminates the
// whole leading s-slice of the running remainder against the leading s-slice
// of b, which itself requires an exact division in Z[t]. Throws NotDivisible
// as soon as a step fails or a nonzero remainder survives, DivisionByZero for
// b == 0.
Poly2 exact_div(const Poly2& a, const Poly2& b);

Poly2 pow(const Poly2& base, int exponent);

// Canonical text form; parse(to_string(p)) == p. Grammar: terms joined by
// " + " / " - ", each term [coeff "*"] ["s" ["^" int]] ["*"] ["t" ["^" int]],
// with "*" mandatory between the coefficient and a variable and between the
// two variables. Unit coefficients and exponents are omitted; zero is "0".
std::string to_string(const Poly2& p);
Poly2 parse_poly(const std::string& text);  // throws ParseError with position

std::ostream& operator<<(std::ostream& os, const Poly2& p);

}  // namespace lucasforge
