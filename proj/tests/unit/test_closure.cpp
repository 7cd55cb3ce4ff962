#include <doctest.h>

#include "khc/closure.hpp"
#include "khc/error.hpp"

using namespace khc;

namespace {

RingPtr cone(std::vector<std::string> vars, const char* f) {
  return RingPresentation::make(std::move(vars), {f}, OrderKind::grevlex, true);
}
RingPtr cubic() { return cone({"x", "y", "z"}, "x^3+y^3+z^3"); }
RingPtr quintic() { return cone({"x", "y", "z"}, "x^5+y^5+z^5"); }

std::vector<Polynomial> polys(const RingPtr& r, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (auto t : texts) out.push_back(r->parse(t));
  return out;
}

bool same(const SubmoduleBasis& a, const RingPtr& r, std::initializer_list<const char*> texts) {
  return ideal_equal(a, ideal_of(r, polys(r, texts)));
}

}  // namespace

TEST_CASE("cubic cone with W = m") {
  auto r = cubic();
  auto g = build_rgamma(MultiplierModuleSpec::maximal_ideal_power(r, 1));
  CHECK(homology(g.complex(), 0).target_rank() >= 1);

  auto xy = kh_closure(polys(r, {"x", "y"}), g);
  CHECK(same(xy.closure, r, {"x", "y", "z^2"}));
  auto xy_h = kh_closure(polys(r, {"x", "y"}), g, KHRoute::homology);
  CHECK(ideal_equal(xy.closure, xy_h.closure));

  auto sq = kh_closure(polys(r, {"x^2", "y^2", "z^2"}), g);
  CHECK(same(sq.closure, r, {"x^2", "y^2", "z^2"}));
  CHECK_FALSE(sq.closure.contains(r->parse("x*y*z")));

  auto cu = kh_closure(polys(r, {"x^3", "y^3", "z^3"}), g);
  CHECK(same(cu.closure, r, {"x^3", "y^3", "z^3", "x^2*y^2*z^2"}));

  auto mixed = kh_closure(polys(r, {"x^4", "x*y", "y^2"}), g);
  CHECK(mixed.closure.contains(r->parse("x*z^3")));
  CHECK_FALSE(mixed.closure.contains(r->parse("y*z^2")));
}

TEST_CASE("empty and unit inputs") {
  auto r = cubic();
  auto g = build_rgamma(MultiplierModuleSpec::maximal_ideal_power(r, 1));
  CHECK(kh_closure({}, g).closure.is_zero());
  CHECK(kh_closure(polys(r, {"1"}), g).closure.is_everything());
  CHECK(kh_closure(polys(r, {"x^3+y^3+z^3"}), g).closure.is_zero());
}

TEST_CASE("quintic cone with W = m^3") {
  auto r = quintic();
  auto g = build_rgamma(MultiplierModuleSpec::maximal_ideal_power(r, 3));
  CHECK(same(kh_closure(polys(r, {"x", "y"}), g).closure, r, {"x", "y", "z^2"}));
  for (auto preset : {CounterexamplePreset::quintic_semiprime, CounterexamplePreset::quintic_star,
                      CounterexamplePreset::quintic_bs_witness}) {
    auto rep = check_counterexamples(preset);
    INFO(to_string(preset));
    for (const auto& d : rep.details) INFO(d);
    CHECK(rep.passed);
  }
}

TEST_CASE("hironaka hull stabilizes on the quintic square") {
  auto r = quintic();
  auto g = build_rgamma(MultiplierModuleSpec::maximal_ideal_power(r, 3));
  auto hull = hironaka_hull(polys(r, {"x^2", "x*y", "y^2"}), g, HironakaMode::over_R, 5);
  CHECK(hull.diagnostics.stabilized);
  CHECK(hull.diagnostics.iterations == 2);
  CHECK(same(hull.closure, r, {"y^2", "x*y", "x^2", "z^3", "y*z^2", "x*z^2"}));
  CHECK_THROWS_AS(hironaka_hull(polys(r, {"x"}), g, HironakaMode::over_A, 0), Error);
}

TEST_CASE("clpi agrees with KH on parameter-like ideals") {
  auto r = cubic();
  auto w = MultiplierModuleSpec::maximal_ideal_power(r, 1);
  auto g = build_rgamma(w);
  for (auto gens : {polys(r, {"x", "y"}), polys(r, {"x^2", "y^2"}), polys(r, {"x", "y^2"})})
    CHECK(ideal_equal(clpi_closure(gens, w).closure, kh_closure(gens, g).closure));
}

TEST_CASE("test ideal") {
  auto r = cubic();
  auto t = kh_test_ideal(r, MultiplierModuleSpec::maximal_ideal_power(r, 1));
  CHECK(same(t, r, {"x", "y", "z"}));
  auto q = quintic();
  CHECK(same(kh_test_ideal(q, MultiplierModuleSpec::maximal_ideal_power(q, 3)), q,
             {"x^3", "x^2*y", "x^2*z", "x*y^2", "x*y*z", "x*z^2", "y^3", "y^2*z", "y*z^2", "z^3"}));
  auto a1 = cone({"x", "y", "z"}, "x^2+y^2+z^2");
  CHECK(kh_test_ideal(a1, MultiplierModuleSpec::unit_module(a1)).is_everything());
}

TEST_CASE("canonical module of a hypersurface is cyclic") {
  auto r = cubic();
  auto omega = canonical_module(r);
  CHECK(omega.target_rank() == 1);
  CHECK(same(annihilator(omega), r, {}));
}

TEST_CASE("checkers on the cubic") {
  auto r = cubic();
  auto g = build_rgamma(MultiplierModuleSpec::maximal_ideal_power(r, 1));
  auto x = polys(r, {"x", "y"});
  CHECK(check_colon_capturing(g, x, 2, 1, 2).passed());
  CHECK(check_colon_capturing(g, x, 2, 1, 1).passed());
  CHECK_THROWS_AS(check_colon_capturing(g, x, 1, 1, 1), Error);
  CHECK_THROWS_AS(check_colon_capturing(g, polys(r, {"x", "x"}), 2, 1, 1), Error);
  CHECK(check_depth_vanishing(g, x).passed());
  CHECK(check_axioms(polys(r, {"x", "y^2"}), g, 7).passed());
}

TEST_CASE("rational singularities close nothing") {
  auto a1 = cone({"x", "y", "z"}, "x^2+y^2+z^2");
  auto g = build_rgamma(MultiplierModuleSpec::unit_module(a1));
  CHECK(homology_is_zero(g.complex(), -1));
  for (auto gens : {polys(a1, {"x", "y"}), polys(a1, {"x^2", "y*z"}), polys(a1, {"x*y", "z^3"})}) {
    auto c = kh_closure(gens, g);
    CHECK(ideal_equal(c.closure, c.input));
  }
  auto plane = RingPresentation::make({"x", "y"}, {});
  auto gp = build_rgamma(MultiplierModuleSpec::unit_module(plane));
  auto c = kh_closure(polys(plane, {"x^2", "x*y^3", "y^5"}), gp);
  CHECK(ideal_equal(c.closure, c.input));
}
