#include "khc/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "khc/error.hpp"

namespace khc {

PolyRing::PolyRing(std::vector<std::string> names, OrderKind order)
    : names_(std::move(names)), order_(order) {
  if (names_.size() > kMaxVars) throw Error("at most " + std::to_string(kMaxVars) + " variables supported");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error("empty variable name");
    if (!seen.insert(n).second) throw Error("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Polynomial::Polynomial(PolyRingPtr ring, const Rational& constant) : ring_(std::move(ring)) {
  if (constant != 0) terms_.push_back({Monomial{}, constant});
}

Polynomial::Polynomial(PolyRingPtr ring, Monomial mono, const Rational& coeff) : ring_(std::move(ring)) {
  if (coeff != 0) terms_.push_back({mono, coeff});
}

Polynomial Polynomial::from_terms(PolyRingPtr ring, std::vector<Term> terms) {
  const PolyRing& r = *ring;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return r.compare(a.mono, b.mono) > 0; });
  Polynomial p(std::move(ring));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::from_sorted_terms(PolyRingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::variable(PolyRingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw Error("variable index out of range");
  return Polynomial(std::move(ring), Monomial::variable(index));
}

std::uint32_t Polynomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

void Polynomial::require_same_ring(const Polynomial& other) const {
  if (ring_ == other.ring_) return;
  if (!ring_ || !other.ring_) {
    // A default-constructed zero adopts the other operand's ring.
    if ((!ring_ && terms_.empty()) || (!other.ring_ && other.terms_.empty())) return;
  } else if (*ring_ == *other.ring_) {
    return;
  }
  throw RingMismatch();
}

Polynomial Polynomial::add_scaled(const Polynomial& a, const Polynomial& b, const Rational& scale) {
  a.require_same_ring(b);
  PolyRingPtr ring = a.ring_ ? a.ring_ : b.ring_;
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() && ib != b.terms_.end()) {
    int c = ring->compare(ia->mono, ib->mono);
    if (c > 0) {
      out.push_back(*ia++);
    } else if (c < 0) {
      out.push_back({ib->mono, ib->coeff * scale});
      ++ib;
    } else {
      Rational s = ia->coeff + ib->coeff * scale;
      if (s != 0) out.push_back({ia->mono, std::move(s)});
      ++ia;
      ++ib;
    }
  }
  for (; ia != a.terms_.end(); ++ia) out.push_back(*ia);
  for (; ib != b.terms_.end(); ++ib) out.push_back({ib->mono, ib->coeff * scale});
  return from_sorted_terms(std::move(ring), std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) { return *this = add_scaled(*this, other, 1); }
Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this = add_scaled(*this, other, -1); }

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= scalar;
  return *this;
}

Polynomial Polynomial::times_term(const Monomial& mono, const Rational& coeff) const {
  Polynomial r(ring_);
  if (coeff == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * mono, t.coeff * coeff});
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_ring(b);
  PolyRingPtr ring = a.ring_ ? a.ring_ : b.ring_;
  if (a.is_zero() || b.is_zero()) return Polynomial(ring);
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& large = a.size() <= b.size() ? b : a;
  Polynomial acc(ring);
  for (const auto& t : small.terms_) acc += large.times_term(t.mono, t.coeff);
  return acc;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial Polynomial::pow(long exponent) const {
  if (exponent < 0) throw Error("negative exponent in polynomial power");
  Polynomial result(ring_, Rational(1));
  Polynomial base = *this;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e != 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  Rational inv = 1 / leading_coeff();
  return *this * inv;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != other.terms_[i].mono || terms_[i].coeff != other.terms_[i].coeff) return false;
  return true;
}

std::string monomial_to_string(const Monomial& mono, const PolyRing& ring) {
  if (mono.is_one()) return "1";
  std::string s;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (mono[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.names()[i];
    if (mono[i] > 1) s += '^' + std::to_string(mono[i]);
  }
  return s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (c < 0) {
      s += '-';
      c = -c;
    } else if (!first) {
      s += '+';
    }
    first = false;
    const bool unit = c == 1;
    if (!unit) s += c.get_str();
    if (!t.mono.is_one()) {
      if (!unit) s += '*';
      s += monomial_to_string(t.mono, *ring_);
    } else if (unit) {
      s += '1';
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, const PolyRingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    Polynomial p = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("parse error at position " + std::to_string(pos_) + ": " + msg, pos_);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool negate = false;
    skip_ws();
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial t = term();
    acc = negate ? -t : t;
    for (;;) {
      skip_ws();
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  bool factor_starts() {
    skip_ws();
    char c = peek();
    return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  Polynomial term() {
    skip_ws();
    Rational coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num(natural());
      mpz_class den(1);
      if (accept('/')) {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
        den = mpz_class(natural());
        if (den == 0) fail("zero denominator");
      }
      coeff = Rational(num, den);
      coeff.canonicalize();
      have_coeff = true;
    }
    Polynomial result(ring_, coeff);
    bool have_factor = false;
    for (;;) {
      skip_ws();
      std::size_t save = pos_;
      bool star = accept('*');
      if (!factor_starts()) {
        if (star) {
          pos_ = save;
          fail("expected factor after '*'");
        }
        break;
      }
      result *= factor();
      have_factor = true;
    }
    if (!have_coeff && !have_factor) fail("expected term");
    return result;
  }

  Polynomial factor() {
    skip_ws();
    Polynomial base(ring_);
    if (accept('(')) {
      base = expr();
      if (!accept(')')) fail("expected ')'");
    } else {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      base = Polynomial::variable(ring_, *idx);
    }
    if (accept('^')) {
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      std::string digits = natural();
      if (digits.size() > 9) fail("exponent too large");
      long e = std::stol(digits);
      base = base.pow(e);
    }
    return base;
  }

  std::string natural() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  const PolyRingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const PolyRingPtr& ring) {
  return Parser(text, ring).parse();
}

}  // namespace khc
