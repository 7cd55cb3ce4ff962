#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace khc {

/// Upper bound on the number of ring variables (including auxiliary ones).
inline constexpr std::size_t kMaxVars = 16;

enum class OrderKind { grevlex, lex };

/// Total degrees above this limit raise DegreeOverflow.  Defaults to the
/// capacity of the exponent storage.
std::uint32_t max_degree();
void set_max_degree(std::uint32_t limit);

/// Exponent vector.  Unused trailing slots are zero, so two monomials of the
/// same ring compare and multiply without knowing the variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(std::size_t index, std::uint32_t power = 1);

  std::uint16_t operator[](std::size_t i) const { return exp_[i]; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_ || (mask_ & ~other.mask_) != 0) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp_[i] > other.exp_[i]) return false;
    return true;
  }

  /// True when the two monomials share no variable.
  bool coprime(const Monomial& other) const { return (mask_ & other.mask_) == 0; }

  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  /// this / divisor; requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;

  bool operator==(const Monomial& other) const { return exp_ == other.exp_; }
  bool operator!=(const Monomial& other) const { return exp_ != other.exp_; }

 private:
  void refresh();

  std::array<std::uint16_t, kMaxVars> exp_{};
  std::uint32_t degree_ = 0;
  std::uint32_t mask_ = 0;
};

/// Three-way comparison under `order` on the first `nvars` variables:
/// positive when a > b.
inline int compare(const Monomial& a, const Monomial& b, OrderKind order, std::size_t nvars) {
  if (order == OrderKind::grevlex) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (std::size_t i = nvars; i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }
  for (std::size_t i = 0; i < nvars; ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace khc
