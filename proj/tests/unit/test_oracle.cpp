// Cross-checks against dense linear algebra on homogeneous pieces. Nothing in
// here goes through Groebner bases except the values under test.
#include <doctest.h>

#include <map>
#include <random>

#include "khc/closure.hpp"
#include "khc/groebner.hpp"

using namespace khc;

namespace {

using Row = std::vector<Rational>;

std::vector<std::vector<int>> monomials(std::size_t n, int d) {
  if (n == 1) return {{d}};
  std::vector<std::vector<int>> out;
  for (int a = d; a >= 0; --a)
    for (auto rest : monomials(n - 1, d - a)) {
      rest.insert(rest.begin(), a);
      out.push_back(std::move(rest));
    }
  return out;
}

class Piece {
 public:
  Piece(const RingPtr& ring, int d) : ring_(ring), d_(d), basis_(monomials(ring->nvars(), d)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
  }

  std::size_t dim() const { return basis_.size(); }

  Row coords(const Polynomial& p) const {
    Row v(dim());
    for (const auto& t : p.terms()) {
      std::vector<int> e(ring_->nvars());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.mono[i];
      v[index_.at(e)] = t.coeff;
    }
    return v;
  }

  Polynomial monomial(std::size_t k) const { return Polynomial(ring_->ambient(), Monomial(basis_[k])); }

 private:
  RingPtr ring_;
  int d_;
  std::vector<std::vector<int>> basis_;
  std::map<std::vector<int>, std::size_t> index_;
};

// Incremental row echelon form over QQ.
class Echelon {
 public:
  Row reduce(Row v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational c = v[pivots_[i]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * rows_[i][j];
    }
    return v;
  }

  bool insert(const Row& v) {
    Row r = reduce(v);
    std::size_t p = 0;
    while (p < r.size() && r[p] == 0) ++p;
    if (p == r.size()) return false;
    const Rational lead = r[p];
    for (auto& c : r) c /= lead;
    for (auto& row : rows_) {
      const Rational c = row[p];
      if (c == 0) continue;
      for (std::size_t j = 0; j < row.size(); ++j) row[j] -= c * r[j];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }

  bool contains(const Row& v) const {
    for (const auto& c : reduce(v))
      if (c != 0) return false;
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
};

// (gens) ∩ A_d, with gens homogeneous polynomials of the ambient ring.
Echelon span(const RingPtr& ring, const std::vector<Polynomial>& gens, int d) {
  Piece piece(ring, d);
  Echelon e;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const int shift = d - static_cast<int>(g.degree());
    if (shift < 0) continue;
    for (const auto& m : monomials(ring->nvars(), shift)) e.insert(piece.coords(g.times_term(Monomial(m), 1)));
  }
  return e;
}

std::vector<Polynomial> with_relations(const RingPtr& ring, std::vector<Polynomial> gens) {
  for (const auto& f : ring->relations()) gens.push_back(f);
  return gens;
}

Polynomial random_form(const RingPtr& ring, int d, std::mt19937_64& rng, int density = 100) {
  std::uniform_int_distribution<int> coeff(-3, 3), keep(1, 100);
  Piece piece(ring, d);
  Polynomial p(ring->ambient());
  for (std::size_t k = 0; k < piece.dim(); ++k)
    if (keep(rng) <= density) p += piece.monomial(k) * Rational(coeff(rng));
  return p;
}

std::vector<Polynomial> random_ideal(const RingPtr& ring, std::mt19937_64& rng, int count, int max_deg) {
  std::uniform_int_distribution<int> deg(1, max_deg);
  std::vector<Polynomial> out;
  for (int i = 0; i < count; ++i) out.push_back(random_form(ring, deg(rng), rng, 40));
  return out;
}

// J W + I as a list of ambient polynomials.
std::vector<Polynomial> product_with_relations(const RingPtr& ring, const std::vector<Polynomial>& j,
                                               const std::vector<Polynomial>& w) {
  std::vector<Polynomial> q;
  for (const auto& a : j)
    for (const auto& b : w) q.push_back(a * b);
  return with_relations(ring, q);
}

// Whether f w lies in (q) for every w.
bool in_colon(const RingPtr& ring, const std::vector<Polynomial>& q, const std::vector<Polynomial>& w,
              const Polynomial& f) {
  for (const auto& wi : w) {
    Polynomial p = f * wi;
    if (p.is_zero()) continue;
    const int e = static_cast<int>(p.degree());
    if (!span(ring, q, e).contains(Piece(ring, e).coords(p))) return false;
  }
  return true;
}

// dim of ((q) : W) in degree d, computed as the kernel of A_d -> ⊕ (A/(q))_{d+e_w}.
std::size_t colon_dim(const RingPtr& ring, const std::vector<Polynomial>& q, const std::vector<Polynomial>& w, int d) {
  Piece source(ring, d);
  std::vector<Row> images(source.dim());
  for (const auto& wi : w) {
    const int e = d + static_cast<int>(wi.degree());
    Echelon qe = span(ring, q, e);
    Piece target(ring, e);
    for (std::size_t k = 0; k < source.dim(); ++k) {
      Row r = qe.reduce(target.coords(source.monomial(k) * wi));
      images[k].insert(images[k].end(), r.begin(), r.end());
    }
  }
  Echelon rank;
  for (const auto& r : images) rank.insert(r);
  return source.dim() - rank.rank();
}

RingPtr space() { return RingPresentation::make({"x", "y", "z"}, {}); }

}  // namespace

TEST_CASE("membership agrees with graded linear algebra") {
  std::mt19937_64 rng(11);
  auto r = space();
  for (int trial = 0; trial < 12; ++trial) {
    auto gens = random_ideal(r, rng, 3, 3);
    auto gb = SubmoduleBasis::ideal(r, Ambient::over_A, gens);
    for (int d = 1; d <= 5; ++d) {
      Echelon e = span(r, gens, d);
      // generic forms and forms forced into the ideal
      Polynomial inside = r->zero();
      for (const auto& g : gens)
        if (static_cast<int>(g.degree()) <= d) inside += g * random_form(r, d - static_cast<int>(g.degree()), rng);
      for (const auto& p : {random_form(r, d, rng), random_form(r, d, rng, 20), inside}) {
        if (p.is_zero()) continue;
        CHECK(gb.contains(p) == e.contains(Piece(r, d).coords(p)));
      }
    }
  }
}

TEST_CASE("hilbert function of the basis leading terms") {
  std::mt19937_64 rng(12);
  auto r = space();
  for (int trial = 0; trial < 10; ++trial) {
    auto gens = random_ideal(r, rng, 3, 3);
    auto basis = SubmoduleBasis::ideal(r, Ambient::over_A, gens).ideal_basis();
    for (int d = 0; d <= 6; ++d) {
      std::size_t standard = 0;
      for (const auto& m : monomials(3, d)) {
        Monomial mono(m);
        bool divisible = false;
        for (const auto& g : basis) divisible = divisible || g.leading_monomial().divides(mono);
        if (!divisible) ++standard;
      }
      CHECK(standard == Piece(r, d).dim() - span(r, gens, d).rank());
    }
  }
}

TEST_CASE("quotient and intersection dimensions") {
  std::mt19937_64 rng(13);
  auto r = space();
  for (int trial = 0; trial < 8; ++trial) {
    auto a = random_ideal(r, rng, 3, 2);
    auto b = random_ideal(r, rng, 2, 2);
    auto ia = SubmoduleBasis::ideal(r, Ambient::over_A, a);
    auto ib = SubmoduleBasis::ideal(r, Ambient::over_A, b);
    auto meet = intersect(ia, ib).ideal_basis();
    std::vector<Polynomial> sum = a;
    sum.insert(sum.end(), b.begin(), b.end());
    Polynomial g = random_form(r, 1, rng);
    if (g.is_zero()) continue;
    auto colon = ideal_quotient(ia, g).ideal_basis();
    for (const auto& f : colon) CHECK(in_colon(r, a, {g}, f));
    for (int d = 0; d <= 5; ++d) {
      CHECK(span(r, meet, d).rank() + span(r, sum, d).rank() == span(r, a, d).rank() + span(r, b, d).rank());
      CHECK(span(r, colon, d).rank() == colon_dim(r, a, {g}, d));
    }
  }
}

TEST_CASE("closures of parameter ideals match the colon by W") {
  struct Case {
    const char* relation;
    int a;
  };
  std::mt19937_64 rng(14);
  for (const Case& c : {Case{"x^3+y^3+z^3", 1}, Case{"x^5+y^5+z^5", 3}}) {
    auto r = RingPresentation::make({"x", "y", "z"}, {c.relation}, OrderKind::grevlex, true);
    auto spec = MultiplierModuleSpec::maximal_ideal_power(r, c.a);
    auto g = build_rgamma(spec);
    std::vector<Polynomial> w = power_generators({r->parse("x"), r->parse("y"), r->parse("z")}, c.a);
    std::vector<std::vector<Polynomial>> ideals = {{r->parse("x"), r->parse("y")},
                                                   {r->parse("x^2"), r->parse("y^2")},
                                                   {r->parse("x"), r->parse("y^2")}};
    for (int i = 0; i < 3; ++i) ideals.push_back({random_form(r, 1, rng), random_form(r, 1 + i % 2, rng)});
    int tested = 0;
    for (const auto& j : ideals) {
      if (!check_parameters(*r, j)) continue;
      ++tested;
      INFO(c.relation << " " << ideal_to_string(j));
      auto kh = kh_closure(j, g).closure.ideal_basis();
      auto cl = clpi_closure(j, spec).closure.ideal_basis();
      auto q = product_with_relations(r, j, w);
      auto with_i = with_relations(r, kh);
      for (const auto& f : kh) CHECK(in_colon(r, q, w, f));
      for (const auto& f : cl) CHECK(in_colon(r, q, w, f));
      for (int d = 0; d <= 8; ++d) {
        const std::size_t expect = colon_dim(r, q, w, d);
        CHECK(span(r, with_i, d).rank() == expect);
        CHECK(span(r, with_relations(r, cl), d).rank() == expect);
      }
    }
    CHECK(tested >= 4);
  }
}
