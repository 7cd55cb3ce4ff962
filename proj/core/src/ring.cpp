#include "khc/ring.hpp"

#include <algorithm>

#include "khc/error.hpp"

namespace khc {

namespace detail {

Vec to_vec(const Polynomial& p, std::uint32_t comp) {
  Vec v;
  v.reserve(p.size());
  for (const auto& t : p.terms()) v.push_back({t.mono, comp, t.coeff});
  return v;
}

Polynomial from_vec(const Vec& v, const PolyRingPtr& ring, std::uint32_t comp) {
  std::vector<Term> terms;
  for (const auto& t : v)
    if (t.comp == comp) terms.push_back({t.mono, t.coeff});
  return Polynomial::from_sorted_terms(ring, std::move(terms));
}

}  // namespace detail

RingPresentation::RingPresentation(PolyRingPtr ambient, std::vector<Polynomial> relations, bool domain)
    : ambient_(std::move(ambient)), relations_(std::move(relations)), domain_(domain) {
  std::vector<detail::Vec> gens;
  for (const auto& r : relations_) {
    if (r.ring() && *r.ring() != *ambient_) throw RingMismatch("relation lives in a different ring");
    if (!r.is_zero()) gens.push_back(detail::to_vec(r, 0));
  }
  detail::GBOptions opts;
  opts.top_rank = 1;
  opts.product_criterion = true;
  auto out = detail::buchberger(module_order(), opts, {}, std::move(gens));
  basis_vecs_ = std::move(out.basis);
  for (const auto& v : basis_vecs_) basis_.push_back(detail::from_vec(v, ambient_, 0));
  index_.reset(&basis_vecs_);
  std::vector<Monomial> leads;
  for (const auto& v : basis_vecs_) leads.push_back(v.front().mono);
  dim_ = dimension_from_leads(leads, nvars());
  unit_ = dim_ < 0;
}

std::shared_ptr<const RingPresentation> RingPresentation::make(std::vector<std::string> vars,
                                                               const std::vector<std::string>& relations,
                                                               OrderKind order, bool domain) {
  auto ambient = std::make_shared<const PolyRing>(std::move(vars), order);
  std::vector<Polynomial> rel;
  for (const auto& text : relations) rel.push_back(parse_polynomial(text, ambient));
  return std::make_shared<const RingPresentation>(ambient, std::move(rel), domain);
}

Polynomial RingPresentation::reduce(const Polynomial& f) const {
  if (basis_vecs_.empty() || f.is_zero()) return f;
  if (f.ring() && *f.ring() != *ambient_) throw RingMismatch();
  auto v = detail::reduce(detail::to_vec(f, 0), basis_vecs_, index_, module_order(), detail::ReduceMode::full, 1);
  return detail::from_vec(v, ambient_, 0);
}

Polynomial RingPresentation::parse(std::string_view text) const { return parse_polynomial(text, ambient_); }

Polynomial reduce_mod_ring(const Polynomial& f, const RingPresentation& ring) { return ring.reduce(f); }

int dimension_from_leads(const std::vector<Monomial>& leads, std::size_t nvars) {
  for (const auto& m : leads)
    if (m.is_one()) return -1;
  // Largest independent set; subsets of equal size are visited in
  // lexicographic order so the witness is deterministic.
  std::vector<std::uint32_t> supports;
  for (const auto& m : leads) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (m[i] != 0) s |= 1u << i;
    supports.push_back(s);
  }
  for (std::size_t size = nvars; size > 0; --size) {
    std::vector<bool> pick(nvars, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::uint32_t set = 0;
      for (std::size_t i = 0; i < nvars; ++i)
        if (pick[i]) set |= 1u << i;
      bool independent = std::none_of(supports.begin(), supports.end(),
                                      [&](std::uint32_t s) { return (s & ~set) == 0; });
      if (independent) return static_cast<int>(size);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return 0;
}

int krull_dimension(const RingPresentation& ring) { return ring.dim(); }

}  // namespace khc
