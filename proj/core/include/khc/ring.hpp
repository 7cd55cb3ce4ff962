#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "khc/detail/gb_engine.hpp"
#include "khc/polynomial.hpp"

namespace khc {

/// R = A / I_R with A = ℚ[vars].  Holds the reduced Gröbner basis of I_R
/// (used for every normal form in R), dim R and codim = nvars - dim R.
class RingPresentation {
 public:
  /// `relations` may be empty (R = A).  A unit defining ideal is accepted;
  /// dim() then reports -1.
  RingPresentation(PolyRingPtr ambient, std::vector<Polynomial> relations, bool domain = false);
  RingPresentation(const RingPresentation&) = delete;
  RingPresentation& operator=(const RingPresentation&) = delete;

  static std::shared_ptr<const RingPresentation> make(std::vector<std::string> vars,
                                                      const std::vector<std::string>& relations,
                                                      OrderKind order = OrderKind::grevlex, bool domain = false);

  const PolyRingPtr& ambient() const { return ambient_; }
  std::size_t nvars() const { return ambient_->nvars(); }
  const std::vector<Polynomial>& relations() const { return relations_; }
  /// Reduced, monic Gröbner basis of I_R, descending by leading monomial.
  const std::vector<Polynomial>& relation_basis() const { return basis_; }
  bool is_free() const { return basis_.empty(); }
  bool is_unit_ideal() const { return unit_; }
  /// User assertion that I_R is prime.
  bool domain() const { return domain_; }
  int dim() const { return dim_; }
  int codim() const { return dim_ < 0 ? -1 : static_cast<int>(nvars()) - dim_; }

  Polynomial reduce(const Polynomial& f) const;
  Polynomial parse(std::string_view text) const;
  Polynomial variable(std::size_t index) const { return Polynomial::variable(ambient_, index); }
  Polynomial one() const { return Polynomial(ambient_, Rational(1)); }
  Polynomial zero() const { return Polynomial(ambient_); }

  detail::ModuleOrder module_order() const { return {ambient_->order(), ambient_->nvars()}; }
  /// Basis of I_R in engine form (single component 0).
  const std::vector<detail::Vec>& relation_vecs() const { return basis_vecs_; }

 private:
  PolyRingPtr ambient_;
  std::vector<Polynomial> relations_;
  std::vector<Polynomial> basis_;
  std::vector<detail::Vec> basis_vecs_;
  detail::ReducerIndex index_;
  bool domain_;
  bool unit_ = false;
  int dim_ = 0;
};

using RingPtr = std::shared_ptr<const RingPresentation>;

/// Normal form of f modulo I_R.
Polynomial reduce_mod_ring(const Polynomial& f, const RingPresentation& ring);

/// dim A/I where `leads` are the leading monomials of a Gröbner basis of I:
/// the largest set of variables containing no leading monomial's support.
/// Returns -1 when some leading monomial is 1.
int dimension_from_leads(const std::vector<Monomial>& leads, std::size_t nvars);

/// dim R, or -1 for the unit ideal.
int krull_dimension(const RingPresentation& ring);

namespace detail {
Vec to_vec(const Polynomial& p, std::uint32_t comp);
Polynomial from_vec(const Vec& v, const PolyRingPtr& ring, std::uint32_t comp);
}  // namespace detail

}  // namespace khc
