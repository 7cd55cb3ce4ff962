#include <doctest.h>

#include "khc/error.hpp"
#include "khc/homalg.hpp"

using namespace khc;

namespace {

RingPtr plane() { return RingPresentation::make({"x", "y"}, {}); }
RingPtr space() { return RingPresentation::make({"x", "y", "z"}, {}); }
RingPtr cubic() { return RingPresentation::make({"x", "y", "z"}, {"x^3+y^3+z^3"}, OrderKind::grevlex, true); }

std::vector<Polynomial> polys(const RingPtr& r, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (auto t : texts) out.push_back(r->parse(t));
  return out;
}

std::vector<std::size_t> ranks(const Complex& c) {
  std::vector<std::size_t> out;
  for (int h = c.lo(); h <= c.hi(); ++h) out.push_back(c.rank(h));
  return out;
}

bool same_ideal(const SubmoduleBasis& a, const RingPtr& r, std::initializer_list<const char*> texts) {
  return ideal_equal(a, SubmoduleBasis::ideal(r, a.free_module().ambient, polys(r, texts)));
}

PresentedModule cyclic(const RingPtr& r, Ambient a, const std::vector<Polynomial>& gens) {
  std::vector<ModuleElement> cols;
  for (const auto& g : gens) cols.push_back({g});
  return PresentedModule(PolyMatrix::from_columns(r, a, 1, cols));
}

}  // namespace

TEST_CASE("koszul complex shapes") {
  auto r = space();
  auto k1 = koszul_complex(polys(r, {"x"}), r);
  CHECK(ranks(k1) == std::vector<std::size_t>{1, 1});
  CHECK(k1.d(1).at(0, 0) == r->parse("x"));

  auto k3 = koszul_complex(polys(r, {"x", "y", "z"}), r);
  CHECK(ranks(k3) == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(k3.d(1).to_string() == "[x, y, z]");
  CHECK(k3.d(3).to_string() == "[z; -y; x]");

  auto k0 = koszul_complex({}, r);
  CHECK(ranks(k0) == std::vector<std::size_t>{1});
}

TEST_CASE("koszul homology on a regular sequence") {
  auto r = plane();
  auto k = koszul_complex(polys(r, {"x", "y"}), r);
  CHECK(homology(k, 1).is_zero());
  CHECK(homology(k, 2).is_zero());
  auto h0 = homology(k, 0);
  CHECK(same_ideal(annihilator(h0), r, {"x", "y"}));
  // random variable subsets in a bigger ring
  auto s = space();
  for (auto sub : {std::vector<const char*>{"y", "z"}, {"x", "z"}, {"z", "x", "y"}}) {
    std::vector<Polynomial> f;
    for (auto v : sub) f.push_back(s->parse(v));
    auto kc = koszul_complex(f, s);
    for (int h = 1; h <= kc.hi(); ++h) CHECK(homology(kc, h).is_zero());
  }
  // non-regular: x, x gives H_1 ≠ 0
  auto kx = koszul_complex(polys(r, {"x", "x"}), r);
  CHECK_FALSE(homology(kx, 1).is_zero());
}

TEST_CASE("differentials compose to zero") {
  auto r = space();
  Complex ok(r, Ambient::over_A, 0, {1, 1}, {PolyMatrix::from_columns(r, Ambient::over_A, 1, {{r->parse("x")}})});
  CHECK(ok.rank(5) == 0);
  auto d1 = PolyMatrix::from_columns(r, Ambient::over_A, 1, {{r->parse("x")}});
  auto d2 = PolyMatrix::from_columns(r, Ambient::over_A, 1, {{r->parse("y")}});
  CHECK_THROWS_AS(Complex(r, Ambient::over_A, 0, {1, 1, 1}, {d1, d2}), InternalInconsistency);
}

TEST_CASE("tensor products") {
  auto r = plane();
  auto kx = koszul_complex(polys(r, {"x"}), r);
  auto ky = koszul_complex(polys(r, {"y"}), r);
  auto kxy = koszul_complex(polys(r, {"x", "y"}), r);
  auto t = tensor_complexes(kx, ky);
  CHECK(ranks(t) == ranks(kxy));
  CHECK(t.dump() == kxy.dump());
  auto unit = tensor_complexes(kxy, Complex::unit(r, Ambient::over_A));
  CHECK(unit.dump() == kxy.dump());
  // Euler characteristic and convolution of ranks
  auto s = space();
  auto k3 = koszul_complex(polys(s, {"x", "y", "z"}), s);
  auto kk = tensor_complexes(k3, koszul_complex(polys(s, {"x^2", "y"}), s));
  CHECK(ranks(kk) == std::vector<std::size_t>{1, 5, 10, 10, 5, 1});
}

TEST_CASE("dualize and shift") {
  auto r = plane();
  auto kx = koszul_complex(polys(r, {"x"}), r);
  auto dual = dualize(kx);
  CHECK(dual.lo() == -1);
  CHECK(dual.hi() == 0);
  CHECK(dual.d(0).at(0, 0) == r->parse("x"));
  auto k2 = koszul_complex(polys(r, {"x", "y"}), r);
  auto twice = dualize(dualize(k2));
  CHECK(ranks(twice) == ranks(k2));
  for (int h = 1; h <= 2; ++h) CHECK(twice.d(h) == k2.d(h).scaled(Rational(-1)));
  CHECK(shift(k2, 0).dump() == k2.dump());
  CHECK(shift(shift(k2, 3), -3).dump() == k2.dump());
  auto sh = shift(k2, 2);
  CHECK(sh.lo() == 2);
  CHECK(annihilator(homology(sh, 2)).contains(r->parse("x")));
  CHECK(homology(sh, 3).is_zero());

  auto c = cubic();
  Complex over_r(c, Ambient::over_R, 0, {1}, {});
  CHECK_THROWS_AS(dualize(over_r), Error);
}

TEST_CASE("hypersurface canonical module via the dual resolution") {
  auto c = cubic();
  auto res = free_resolution(cyclic(c, Ambient::over_A, polys(c, {"x^3+y^3+z^3"})), 3);
  CHECK(ranks(res) == std::vector<std::size_t>{1, 1});
  auto dual = dualize(res);
  auto ext1 = homology(dual, -1);
  CHECK(same_ideal(annihilator(ext1), c, {"x^3+y^3+z^3"}));
  CHECK(ext1.target_rank() == 1);
}

TEST_CASE("free resolutions") {
  auto s = space();
  auto res = free_resolution(cyclic(s, Ambient::over_A, polys(s, {"x", "y", "z"})), 3);
  CHECK(ranks(res) == std::vector<std::size_t>{1, 3, 3, 1});
  for (int h = 1; h <= 3; ++h) CHECK(homology(res, h).is_zero());

  auto p = free_resolution(cyclic(s, Ambient::over_A, polys(s, {"x^2-y*z"})), 3);
  CHECK(ranks(p) == std::vector<std::size_t>{1, 1});

  // x, y is a regular sequence on the cubic, so R/(x, y) has the Koszul
  // resolution over R; the residue field has an eventually periodic one.
  auto c = cubic();
  auto rr = free_resolution(cyclic(c, Ambient::over_R, polys(c, {"x", "y"})), 4);
  CHECK(ranks(rr) == std::vector<std::size_t>{1, 2, 1});
  for (int h = 1; h <= 2; ++h) CHECK(homology(rr, h).is_zero());
  auto m = free_resolution(cyclic(c, Ambient::over_R, polys(c, {"x", "y", "z"})), 4);
  CHECK(ranks(m) == std::vector<std::size_t>{1, 3, 4, 4, 4});
  for (int h = 1; h < 4; ++h) CHECK(homology(m, h).is_zero());
  auto h0 = homology(rr, 0);
  CHECK(same_ideal(annihilator(h0), c, {"x", "y"}));
}

TEST_CASE("truncation") {
  auto s = space();
  auto k3 = koszul_complex(polys(s, {"x", "y", "z"}), s);
  CHECK(truncate(k3, 0, 3).dump() == k3.dump());
  auto t = truncate(k3, 0, 1);
  CHECK(ranks(t) == std::vector<std::size_t>{1, 3});
  CHECK(same_ideal(annihilator(homology(t, 0)), s, {"x", "y", "z"}));
}

TEST_CASE("chain maps and induced maps") {
  auto r = plane();
  auto k = koszul_complex(polys(r, {"x", "y"}), r);
  auto unit = Complex::unit(r, Ambient::over_A);
  auto aug = augmentation_chain_map(polys(r, {"x", "y"}), unit);
  auto h0 = induced_map_on_homology(aug, 0);
  CHECK(h0.rows() == 1);
  CHECK(h0.cols() == 1);
  auto empty = augmentation_chain_map(std::vector<Polynomial>{}, k);
  CHECK(empty.target().dump() == k.dump());
  CHECK(induced_map_on_homology(empty, 0) == PolyMatrix::identity(r, Ambient::over_A, 1));

  // image of R → H_0(K(x,y)) is R/(x,y)
  auto target = homology(aug.target(), 0);
  auto img = image_module(h0, target);
  CHECK(same_ideal(annihilator(img), r, {"x", "y"}));
  auto lean = image_of_cycles(aug.target(), 0, {ModuleElement{r->one()}});
  CHECK(same_ideal(annihilator(lean), r, {"x", "y"}));

  // a square that fails is rejected
  auto bad = PolyMatrix::identity(r, Ambient::over_A, 2);
  CHECK_THROWS_AS(ChainMap(k, k, 1, {bad.scaled(Rational(0)).hconcat(PolyMatrix(r, Ambient::over_A, 2, 0)),
                                     PolyMatrix::identity(r, Ambient::over_A, 1)}),
                  InternalInconsistency);
  // zero map on homology
  ChainMap zero(k, k, 0, {});
  CHECK(induced_map_on_homology(zero, 0).is_zero());
}

TEST_CASE("windowed tensor and augmentation agree with the full ones") {
  auto r = cubic();
  auto f = polys(r, {"x", "y^2", "z", "x*y"});
  auto k = koszul_complex(f, r);
  auto short_k = koszul_complex(f, r, Ambient::over_A, 2);
  CHECK(short_k.hi() == 2);
  CHECK(short_k.d(2) == k.d(2));
  auto kz = koszul_complex(polys(r, {"z"}), r);
  auto full = tensor_complexes(k, kz);
  auto window = tensor_complexes(k, kz, 1, 2);
  CHECK(window.lo() == 1);
  CHECK(window.hi() == 2);
  CHECK(window.d(2) == full.d(2));
  CHECK(window.rank(1) == full.rank(1));

  auto g = shift(dualize(free_resolution(cyclic(r, Ambient::over_A, polys(r, {"x", "y", "z"})), 3)), 1);
  auto aug_full = augmentation_chain_map(f, g);
  auto aug_win = augmentation_chain_map(f, g, 0, 1);
  CHECK(aug_win.at(0) == aug_full.at(0));
  CHECK(aug_win.target().d(1) == aug_full.target().d(1));
}

TEST_CASE("zero homology detection") {
  auto r = space();
  auto k = koszul_complex(polys(r, {"x", "y", "z"}), r);
  CHECK(homology_is_zero(k, 1));
  CHECK(homology_is_zero(k, 2));
  CHECK_FALSE(homology_is_zero(k, 0));
  auto bad = koszul_complex(polys(r, {"x", "x*y"}), r);
  CHECK_FALSE(homology_is_zero(bad, 1));
}
