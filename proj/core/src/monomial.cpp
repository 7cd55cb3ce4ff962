#include "khc/monomial.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>

#include "khc/error.hpp"

namespace khc {

namespace {

std::atomic<std::uint32_t> g_max_degree{std::numeric_limits<std::uint16_t>::max()};

void check_degree(std::uint64_t degree) {
  if (degree > g_max_degree.load(std::memory_order_relaxed))
    throw DegreeOverflow("monomial degree " + std::to_string(degree) + " exceeds limit " +
                         std::to_string(g_max_degree.load()));
}

}  // namespace

std::uint32_t max_degree() { return g_max_degree.load(); }

void set_max_degree(std::uint32_t limit) {
  g_max_degree.store(std::min<std::uint32_t>(limit, std::numeric_limits<std::uint16_t>::max()));
}

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > kMaxVars) throw Error("too many variables for a monomial");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) throw Error("negative exponent");
    total += static_cast<std::uint64_t>(exponents[i]);
    check_degree(static_cast<std::uint64_t>(exponents[i]));
    exp_[i] = static_cast<std::uint16_t>(exponents[i]);
  }
  check_degree(total);
  refresh();
}

Monomial Monomial::variable(std::size_t index, std::uint32_t power) {
  if (index >= kMaxVars) throw Error("variable index out of range");
  check_degree(power);
  Monomial m;
  m.exp_[index] = static_cast<std::uint16_t>(power);
  m.refresh();
  return m;
}

void Monomial::refresh() {
  degree_ = 0;
  mask_ = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    degree_ += exp_[i];
    if (exp_[i] != 0) mask_ |= 1u << i;
  }
}

Monomial Monomial::operator*(const Monomial& other) const {
  check_degree(static_cast<std::uint64_t>(degree_) + other.degree_);
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = static_cast<std::uint16_t>(exp_[i] + other.exp_[i]);
  r.degree_ = degree_ + other.degree_;
  r.mask_ = mask_ | other.mask_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = std::max(exp_[i], other.exp_[i]);
  r.refresh();
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = std::min(exp_[i], other.exp_[i]);
  r.refresh();
  return r;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = static_cast<std::uint16_t>(exp_[i] - divisor.exp_[i]);
  r.degree_ = degree_ - divisor.degree_;
  r.refresh();
  return r;
}

}  // namespace khc
