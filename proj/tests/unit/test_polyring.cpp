#include <doctest.h>

#include <random>

#include "khc/error.hpp"
#include "khc/ring.hpp"

using namespace khc;

namespace {

RingPtr cubic() { return RingPresentation::make({"x", "y", "z"}, {"x^3+y^3+z^3"}); }

Polynomial random_poly(const PolyRingPtr& ring, std::mt19937& rng, int terms, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::uniform_int_distribution<int> c(-5, 5);
  Polynomial p(ring);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> exps(ring->nvars());
    for (auto& x : exps) x = e(rng);
    p += Polynomial(ring, Monomial(exps), Rational(c(rng)) / (1 + (t % 3)));
  }
  return p;
}

}  // namespace

TEST_CASE("parse and print") {
  auto r = cubic();
  auto f = r->parse("x^3+y^3+z^3");
  CHECK(f.size() == 3);
  CHECK(f.to_string() == "x^3+y^3+z^3");
  CHECK(r->parse("0").is_zero());
  CHECK(r->parse("(x+y)^2 - x^2 - 2*x*y") == r->parse("y^2"));
  CHECK(r->parse("-1/2x y").to_string() == "-1/2*x*y");
  CHECK(r->parse("3/6*x").to_string() == "1/2*x");
  CHECK(r->parse("2(x+1)") == r->parse("2*x+2"));
}

TEST_CASE("parse errors") {
  auto r = cubic();
  CHECK_THROWS_AS(r->parse("x+"), ParseError);
  CHECK_THROWS_AS(r->parse("x+w"), ParseError);
  CHECK_THROWS_AS(r->parse("1/0"), ParseError);
  CHECK_THROWS_AS(r->parse("(x"), ParseError);
  try {
    r->parse("x + y * q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
  }
}

TEST_CASE("arithmetic") {
  auto r = cubic();
  auto x = r->variable(0), y = r->variable(1), z = r->variable(2);
  CHECK((x + (-x)).is_zero());
  CHECK((x + y) * (x - y) == r->parse("x^2-y^2"));
  CHECK((x + y + z).pow(2).size() == 6);
  CHECK_THROWS_AS(x.pow(-1), Error);
  auto other = RingPresentation::make({"a", "b"}, {});
  CHECK_THROWS_AS(x + other->variable(0), RingMismatch);
}

TEST_CASE("round trip on random polynomials") {
  auto r = cubic();
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto p = random_poly(r->ambient(), rng, 6, 4);
    CHECK(r->parse(p.to_string()) == p);
  }
}

TEST_CASE("reduction modulo the ring") {
  auto r = cubic();
  CHECK(r->reduce(r->parse("x^3")) == r->parse("-y^3-z^3"));
  auto q = RingPresentation::make({"x", "y", "z"}, {"x^5+y^5+z^5"});
  CHECK(q->reduce(q->parse("x^5")) == q->parse("-y^5-z^5"));
  auto free = RingPresentation::make({"x", "y"}, {});
  auto f = free->parse("x^7+3*y");
  CHECK(free->reduce(f) == f);
}

TEST_CASE("reduction is compatible with arithmetic") {
  auto r = cubic();
  std::mt19937 rng(11);
  for (int i = 0; i < 30; ++i) {
    auto a = random_poly(r->ambient(), rng, 4, 4);
    auto b = random_poly(r->ambient(), rng, 4, 4);
    CHECK(r->reduce(a + b) == r->reduce(a) + r->reduce(b));
    CHECK(r->reduce(a * b) == r->reduce(r->reduce(a) * r->reduce(b)));
    CHECK(r->reduce(r->reduce(a)) == r->reduce(a));
  }
}

TEST_CASE("exact arithmetic") {
  auto r = cubic();
  std::mt19937 rng(5);
  for (int i = 0; i < 30; ++i) {
    auto a = random_poly(r->ambient(), rng, 5, 3);
    auto b = random_poly(r->ambient(), rng, 5, 3);
    CHECK((a + b) - b == a);
  }
}

TEST_CASE("monomial orders are multiplicative with 1 minimal") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> e(0, 4);
  auto random_mono = [&] {
    std::vector<int> v(4);
    for (auto& x : v) x = e(rng);
    return Monomial(v);
  };
  for (auto kind : {OrderKind::grevlex, OrderKind::lex}) {
    for (int i = 0; i < 300; ++i) {
      auto a = random_mono(), b = random_mono(), m = random_mono();
      int c = compare(a, b, kind, 4);
      CHECK(compare(a * m, b * m, kind, 4) == c);
      CHECK(compare(b, a, kind, 4) == -c);
      if (!a.is_one()) CHECK(compare(a, Monomial(), kind, 4) > 0);
      CHECK((c == 0) == (a == b));
    }
  }
}

TEST_CASE("degree guard") {
  auto r = cubic();
  auto saved = max_degree();
  set_max_degree(10);
  CHECK_THROWS_AS(r->variable(0).pow(11), DegreeOverflow);
  set_max_degree(saved);
}

TEST_CASE("krull dimension") {
  CHECK(krull_dimension(*cubic()) == 2);
  CHECK(krull_dimension(*RingPresentation::make({"x", "y"}, {})) == 2);
  CHECK(krull_dimension(*RingPresentation::make({"x", "y", "z", "w"}, {"x^4+y^4+z^4+w^4"})) == 3);
  CHECK(krull_dimension(*RingPresentation::make({"x", "y"}, {"x*y-1", "x"})) == -1);
  CHECK(cubic()->codim() == 1);
}
