#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "khc/monomial.hpp"

namespace khc {

/// Exact rational scalar.  GMP keeps it canonical: gcd(num, den) = 1,
/// den > 0, zero is 0/1.
using Rational = mpq_class;

/// The ambient polynomial ring A = ℚ[vars] with a fixed monomial order.
/// Variable precedence follows declaration order.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> names, OrderKind order);

  std::size_t nvars() const { return names_.size(); }
  OrderKind order() const { return order_; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  int compare(const Monomial& a, const Monomial& b) const {
    return khc::compare(a, b, order_, names_.size());
  }

  bool operator==(const PolyRing& other) const {
    return names_ == other.names_ && order_ == other.order_;
  }

 private:
  std::vector<std::string> names_;
  OrderKind order_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse polynomial over ℚ.  Terms are kept strictly descending in the
/// ring order with nonzero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(PolyRingPtr ring, const Rational& constant);
  Polynomial(PolyRingPtr ring, Monomial mono, const Rational& coeff = 1);

  /// Builds from arbitrary terms: sorts, merges equal monomials, drops zeros.
  static Polynomial from_terms(PolyRingPtr ring, std::vector<Term> terms);
  /// Adopts terms that are already strictly descending with nonzero coefficients.
  static Polynomial from_sorted_terms(PolyRingPtr ring, std::vector<Term> terms);
  static Polynomial variable(PolyRingPtr ring, std::size_t index);

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Rational& leading_coeff() const { return terms_.front().coeff; }
  /// Max total degree over the terms; 0 for the zero polynomial.
  std::uint32_t degree() const;
  bool is_homogeneous() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  Polynomial times_term(const Monomial& mono, const Rational& coeff) const;
  Polynomial pow(long exponent) const;
  /// Divides by the leading coefficient.
  Polynomial monic() const;

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  void require_same_ring(const Polynomial& other) const;
  static Polynomial add_scaled(const Polynomial& a, const Polynomial& b, const Rational& scale);

  PolyRingPtr ring_;
  std::vector<Term> terms_;
};

/// Parses `text` in the polynomial grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := coeff ('*'? factor)*
///   factor := (var | '(' expr ')') ('^' nat)?
///   coeff  := nat ('/' nat)? | empty
/// Whitespace is ignored.  Throws ParseError with a byte position.
Polynomial parse_polynomial(std::string_view text, const PolyRingPtr& ring);

/// Canonical printing of a monomial (`x^2*y`, or `1`).
std::string monomial_to_string(const Monomial& mono, const PolyRing& ring);

}  // namespace khc
