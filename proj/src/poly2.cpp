#include "lucasforge/poly2.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

namespace lucasforge {

Poly2::Poly2(long constant) {
  if (constant != 0) terms_.emplace(Monomial{0, 0}, BigInt(constant));
}

Poly2::Poly2(const BigInt& constant) {
  if (constant != 0) terms_.emplace(Monomial{0, 0}, constant);
}

Poly2 Poly2::monomial(const BigInt& coeff, int deg_s, int deg_t) {
  Poly2 p;
  if (coeff != 0) p.terms_.emplace(Monomial{deg_s, deg_t}, coeff);
  return p;
}

bool Poly2::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0} &&
         terms_.begin()->second == 1;
}

int Poly2::deg_s() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.deg_s);
  return d;
}

int Poly2::deg_t() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.deg_t);
  return d;
}

BigInt Poly2::coeff(int deg_s, int deg_t) const {
  auto it = terms_.find(Monomial{deg_s, deg_t});
  return it == terms_.end() ? BigInt(0) : it->second;
}

bool Poly2::has_nonneg_coeffs() const {
  for (const auto& [m, c] : terms_)
    if (c < 0) return false;
  return true;
}

BigInt Poly2::eval(const BigInt& s0, const BigInt& t0) const {
  BigInt acc = 0;
  BigInt sp, tp;
  for (const auto& [m, c] : terms_) {
    mpz_pow_ui(sp.get_mpz_t(), s0.get_mpz_t(), static_cast<unsigned long>(m.deg_s));
    mpz_pow_ui(tp.get_mpz_t(), t0.get_mpz_t(), static_cast<unsigned long>(m.deg_t));
    acc += c * sp * tp;
  }
  return acc;
}

void Poly2::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly2 Poly2::operator-() const {
  Poly2 r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly2& Poly2::operator+=(const Poly2& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 r;
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r.add_term(Monomial{ma.deg_s + mb.deg_s, ma.deg_t + mb.deg_t}, ca * cb);
    }
  }
  return r;
}

Poly2& Poly2::operator*=(const Poly2& rhs) {
  *this = *this * rhs;
  return *this;
}

Poly2 pow(const Poly2& base, int exponent) {
  Poly2 acc(1);
  for (int i = 0; i < exponent; ++i) acc *= base;
  return acc;
}

namespace {

// Univariate slice of a Poly2 at a fixed s-degree: t-degree -> coefficient.
using TPoly = std::map<int, BigInt>;

// Exact division in Z[t]; empty optional-like failure is signalled by throw.
TPoly exact_div_t(TPoly num, const TPoly& den) {
  TPoly quot;
  const auto& [dlead_deg, dlead_coeff] = *den.rbegin();
  while (!num.empty()) {
    const auto& [nlead_deg, nlead_coeff] = *num.rbegin();
    if (nlead_deg < dlead_deg || !divides(dlead_coeff, nlead_coeff))
      throw NotDivisible("t-coefficient polynomial does not divide exactly");
    BigInt c = nlead_coeff / dlead_coeff;
    int shift = nlead_deg - dlead_deg;
    quot.emplace(shift, c);
    for (const auto& [d, v] : den) {
      auto [it, inserted] = num.emplace(d + shift, -c * v);
      if (!inserted) {
        it->second -= c * v;
        if (it->second == 0) num.erase(it);
      }
    }
  }
  return quot;
}

// Slices of a polynomial grouped by s-degree, highest first.
std::vector<std::pair<int, TPoly>> s_slices(const Poly2& p) {
  std::vector<std::pair<int, TPoly>> slices;
  for (const auto& [m, c] : p.terms()) {
    if (slices.empty() || slices.back().first != m.deg_s)
      slices.emplace_back(m.deg_s, TPoly{});
    slices.back().second.emplace(m.deg_t, c);
  }
  return slices;
}

}  // namespace

Poly2 exact_div(const Poly2& a, const Poly2& b) {
  if (b.is_zero()) throw DivisionByZero("exact_div: divisor is zero");
  if (a.is_zero()) return Poly2{};

  auto bs = s_slices(b);
  const int b_lead_s = bs.front().first;
  const TPoly& b_lead = bs.front().second;

  Poly2 rem = a;
  Poly2 quot;
  while (!rem.is_zero()) {
    auto rs = s_slices(rem);
    const int r_lead_s = rs.front().first;
    if (r_lead_s < b_lead_s)
      throw NotDivisible("exact_div: nonzero remainder of lower s-degree");
    TPoly c = exact_div_t(rs.front().second, b_lead);
    Poly2 term;
    for (const auto& [dt, v] : c) term += Poly2::monomial(v, r_lead_s - b_lead_s, dt);
    quot += term;
    rem -= term * b;
  }
  return quot;
}

namespace {

void append_magnitude_term(std::string& out, const BigInt& mag, const Monomial& m) {
  bool have_factor = false;
  if (mag != 1 || (m.deg_s == 0 && m.deg_t == 0)) {
    out += mag.get_str();
    have_factor = true;
  }
  if (m.deg_s > 0) {
    if (have_factor) out += '*';
    out += 's';
    if (m.deg_s > 1) out += "^" + std::to_string(m.deg_s);
    have_factor = true;
  }
  if (m.deg_t > 0) {
    if (have_factor) out += '*';
    out += 't';
    if (m.deg_t > 1) out += "^" + std::to_string(m.deg_t);
  }
}

}  // namespace

std::string to_string(const Poly2& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool neg = c < 0;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    append_magnitude_term(out, abs(c), m);
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly2& p) { return os << to_string(p); }

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : text_(text) {}

  Poly2 parse() {
    Poly2 result;
    skip_spaces();
    if (at_end()) throw ParseError("empty polynomial text", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = take() == '-';
    result += parse_term(negative);
    skip_spaces();
    while (!at_end()) {
      char op = take();
      if (op != '+' && op != '-')
        throw ParseError(std::string("expected '+' or '-', got '") + op + "'", pos_ - 1);
      result += parse_term(op == '-');
      skip_spaces();
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }

  void skip_spaces() {
    while (!at_end() && peek() == ' ') ++pos_;
  }

  BigInt parse_number() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) throw ParseError("expected a number", pos_);
    return BigInt(text_.substr(start, pos_ - start));
  }

  int parse_exponent() {
    if (!at_end() && peek() == '^') {
      ++pos_;
      BigInt e = parse_number();
      if (!e.fits_sint_p()) throw ParseError("exponent too large", pos_);
      return static_cast<int>(e.get_si());
    }
    return 1;
  }

  Poly2 parse_term(bool negative) {
    skip_spaces();
    if (at_end()) throw ParseError("expected a term", pos_);

    BigInt coeff = 1;
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_number();
      saw_coeff = true;
    }
    int ds = 0;
    int dt = 0;
    bool saw_var = false;
    if (!at_end() && (peek() == 's' || peek() == 't' || peek() == '*')) {
      if (saw_coeff) {
        if (peek() != '*')
          throw ParseError("'*' required between coefficient and variable", pos_);
        ++pos_;
      }
      if (at_end() || (peek() != 's' && peek() != 't'))
        throw ParseError("expected variable 's' or 't'", pos_);
      if (peek() == 's') {
        ++pos_;
        ds = parse_exponent();
        if (!at_end() && (peek() == 't' || peek() == '*')) {
          if (peek() != '*') throw ParseError("'*' required between variables", pos_);
          ++pos_;
          if (at_end() || peek() != 't') throw ParseError("expected variable 't'", pos_);
          ++pos_;
          dt = parse_exponent();
        }
      } else {
        ++pos_;
        dt = parse_exponent();
      }
      saw_var = true;
    }
    if (!saw_coeff && !saw_var)
      throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
    if (!at_end() && (peek() == 's' || peek() == 't' || peek() == '^' ||
                      std::isdigit(static_cast<unsigned char>(peek()))))
      throw ParseError(std::string("unexpected character '") + peek() + "' in term", pos_);
    if (negative) coeff = -coeff;
    return Poly2::monomial(coeff, ds, dt);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly2 parse_poly(const std::string& text) { return PolyParser(text).parse(); }

}  // namespace lucasforge
