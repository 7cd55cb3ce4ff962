// Runs the acceptance criteria; one PASS/FAIL line each, exit 1 on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "khc/closure.hpp"
#include "khc/error.hpp"

using namespace khc;

namespace {

struct Setup {
  std::string name;
  RingPtr ring;
  MultiplierModuleSpec w;
  RGammaComplex g;
  std::vector<Polynomial> params;
  /// Expected test ideal as a power of m (0 means R).
  unsigned tau_power;
};

std::vector<Polynomial> polys(const RingPtr& r, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (auto t : texts) out.push_back(r->parse(t));
  return out;
}

std::vector<Polynomial> variables(const RingPtr& r) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < r->nvars(); ++i) out.push_back(r->variable(i));
  return out;
}

bool same(const SubmoduleBasis& a, const RingPtr& r, std::initializer_list<const char*> texts) {
  return ideal_equal(a, ideal_of(r, polys(r, texts)));
}

Setup make_setup(const std::string& name, std::vector<std::string> vars, std::vector<std::string> rel, int wpower,
                 unsigned tau_power) {
  auto ring = RingPresentation::make(std::move(vars), rel, OrderKind::grevlex, true);
  auto w = wpower < 0 ? MultiplierModuleSpec::unit_module(ring)
                      : MultiplierModuleSpec::maximal_ideal_power(ring, static_cast<unsigned>(wpower));
  auto g = build_rgamma(w);
  std::vector<Polynomial> params = variables(ring);
  params.resize(static_cast<std::size_t>(ring->dim()));
  return {name, ring, w, std::move(g), params, tau_power};
}

/// Every (ideal, closure) pair computed by the run, for the global checks.
struct Ledger {
  struct Item {
    const Setup* setup;
    std::vector<Polynomial> ideal;
    SubmoduleBasis closure;
  };
  std::vector<Item> items;

  SubmoduleBasis kh(const Setup& s, const std::vector<Polynomial>& j) {
    SubmoduleBasis c = kh_closure(j, s.g).closure;
    items.push_back({&s, j, c});
    return c;
  }
};

/// Random homogeneous element of degree d with small integer coefficients.
Polynomial random_form(const RingPtr& r, unsigned d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  Polynomial f = r->zero();
  for (const auto& m : power_generators(variables(r), d)) f += m * Rational(coeff(rng));
  return r->reduce(f);
}

std::vector<Polynomial> random_parameter_pair(const Setup& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> deg(1, 2);
  for (;;) {
    std::vector<Polynomial> pair{random_form(s.ring, deg(rng), rng), random_form(s.ring, deg(rng), rng)};
    if (check_parameters(*s.ring, pair)) return pair;
  }
}

int failures = 0;

void report(int n, const std::string& what, const std::function<bool(std::ostringstream&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::ostringstream notes;
  bool ok = false;
  try {
    ok = body(notes);
  } catch (const Error& e) {
    notes << "error: " << e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << " [" << n << "] " << what << " (" << secs << " s)";
  if (!notes.str().empty()) std::cout << " -- " << notes.str();
  std::cout << std::endl;
}

}  // namespace

int main() {
  std::vector<Setup> rings;
  rings.push_back(make_setup("cubic", {"x", "y", "z"}, {"x^3+y^3+z^3"}, 1, 1));
  rings.push_back(make_setup("quartic", {"x", "y", "z", "w"}, {"x^4+y^4+z^4+w^4"}, 1, 1));
  rings.push_back(make_setup("quintic", {"x", "y", "z"}, {"x^5+y^5+z^5"}, 3, 3));
  rings.push_back(make_setup("septic", {"x", "y", "z"}, {"x^7+y^7+z^7"}, 5, 5));
  rings.push_back(make_setup("smooth", {"x", "y"}, {}, -1, 0));
  rings.push_back(make_setup("A1", {"x", "y", "z"}, {"x^2+y^2+z^2"}, -1, 0));
  const Setup& cubic = rings[0];
  const Setup& quartic = rings[1];
  const Setup& quintic = rings[2];
  const Setup& septic = rings[3];
  Ledger ledger;

  report(1, "cubic cone, W = m: KH((x,y)) = (x,y,z^2)", [&](auto&) {
    return same(ledger.kh(cubic, polys(cubic.ring, {"x", "y"})), cubic.ring, {"x", "y", "z^2"});
  });

  report(2, "cubic cone: diagonal and mixed transcripts", [&](auto& notes) {
    const auto& r = cubic.ring;
    auto d2 = ledger.kh(cubic, polys(r, {"x^2", "y^2", "z^2"}));
    auto d3 = ledger.kh(cubic, polys(r, {"x^3", "y^3", "z^3"}));
    auto br = ledger.kh(cubic, polys(r, {"x^4", "x*y", "y^2"}));
    bool a = same(d2, r, {"x^2", "y^2", "z^2"}) && !d2.contains(r->parse("x*y*z"));
    bool b = same(d3, r, {"x^3", "y^3", "z^3", "x^2*y^2*z^2"}) && d3.contains(r->parse("x^2*y^2*z^2"));
    bool c = br.contains(r->parse("x*z^3")) && !br.contains(r->parse("y*z^2"));
    notes << "diagonal2 " << a << ", diagonal3 " << b << ", mixed " << c;
    return a && b && c;
  });

  report(3, "quartic 4-variable cone, W = m: (x^3,y^3,z^3,w^3) closed, x^2y^2z^2w^2 not in it", [&](auto&) {
    const auto& r = quartic.ring;
    auto j = polys(r, {"x^3", "y^3", "z^3", "w^3"});
    auto c = ledger.kh(quartic, j);
    return ideal_equal(c, ideal_of(r, j)) && !c.contains(r->parse("x^2*y^2*z^2*w^2"));
  });

  report(4, "septic cone, W = m^5: KH((x^4,y^4,z^4)), m^7 not inside, m^8 inside", [&](auto& notes) {
    const auto& r = septic.ring;
    auto c = ledger.kh(septic, polys(r, {"x^4", "y^4", "z^4"}));
    bool eq = same(c, r, {"x^4", "y^4", "z^4", "x^2*y^3*z^3", "x^3*y^2*z^3", "x^3*y^3*z^2"});
    bool m7 = is_subset(ideal_of(r, power_generators(variables(r), 7)), c);
    bool m8 = is_subset(ideal_of(r, power_generators(variables(r), 8)), c);
    notes << "equal " << eq << ", m^7 inside " << m7 << ", m^8 inside " << m8;
    return eq && !m7 && m8;
  });

  report(5, "quintic cone, W = m^3: IKH, I2KH, IxKH and the two failures", [&](auto& notes) {
    const auto& r = quintic.ring;
    auto ikh = ledger.kh(quintic, polys(r, {"x", "y"}));
    auto i2kh = ledger.kh(quintic, power_generators(polys(r, {"x", "y"}), 2));
    auto ixkh = ledger.kh(quintic, polys(r, {"x^2", "x*y"}));
    bool a = same(ikh, r, {"x", "y", "z^2"});
    bool b = same(i2kh, r, {"y^2", "x*y", "x^2", "z^4", "y*z^3", "x*z^3"});
    bool c = !is_subset(ideal_product(ikh, ikh), i2kh);
    bool d = same(ixkh, r, {"x*y", "x^2", "x*z^3", "y^5+z^5"});
    bool e = !ideal_equal(ideal_product(ideal_of(r, polys(r, {"x"})), ikh), ixkh);
    notes << a << b << c << d << e;
    return a && b && c && d && e;
  });

  report(6, "quintic Hironaka over A and over R for (x,y)^2", [&](auto& notes) {
    const auto& r = quintic.ring;
    auto i2 = power_generators(polys(r, {"x", "y"}), 2);
    auto over_a = hironaka_preclosure(i2, quintic.g, HironakaMode::over_A).closure;
    auto over_r = hironaka_preclosure(i2, quintic.g, HironakaMode::over_R).closure;
    auto kh = ledger.kh(quintic, i2);
    std::initializer_list<const char*> expected = {"y^2", "x*y", "x^2", "z^3", "y*z^2", "x*z^2"};
    bool a = same(over_a, r, expected);
    bool b = same(over_r, r, expected);
    auto w = r->parse("x*z^2");
    bool c = over_a.contains(w) && over_r.contains(w) && !kh.contains(w);
    notes << "over-A " << a << ", over-R " << b << ", witness " << c;
    return a && b && c;
  });

  report(7, "KH = clpi on fixed and 10 random parameter pairs per ring", [&](auto& notes) {
    std::mt19937_64 rng(20240607);
    int checked = 0, bad = 0;
    for (const auto& s : rings) {
      std::vector<std::vector<Polynomial>> ideals = {polys(s.ring, {"x", "y"}), polys(s.ring, {"x^2", "y^2"}),
                                                     polys(s.ring, {"x", "y^2"})};
      for (int i = 0; i < 10; ++i) ideals.push_back(random_parameter_pair(s, rng));
      for (const auto& j : ideals) {
        ++checked;
        if (!ideal_equal(ledger.kh(s, j), clpi_closure(j, s.w).closure)) {
          ++bad;
          notes << s.name << " (" << ideal_to_string(j) << ") differs; ";
        }
      }
    }
    notes << checked << " ideals";
    return bad == 0;
  });

  report(9, "colon capturing, versions A and B", [&](auto& notes) {
    struct Triple {
      int t, a, k;
    };
    int runs = 0, b_runs = 0;
    bool ok = true;
    for (const auto& s : rings) {
      for (auto [t, a, k] : {Triple{2, 1, 1}, Triple{2, 1, 2}, Triple{3, 1, 2}, Triple{3, 2, 2}}) {
        auto rep = check_colon_capturing(s.g, s.params, t, a, k);
        ++runs;
        if (rep.version_b) ++b_runs;
        if (!rep.passed()) {
          ok = false;
          notes << s.name << " (" << t << "," << a << "," << k << ") fails; ";
        }
      }
    }
    notes << runs << " runs, " << b_runs << " with version B";
    return ok;
  });

  report(10, "depth vanishing of Koszul homology against RGamma", [&](auto& notes) {
    bool ok = true;
    for (const auto& s : rings) {
      auto rep = check_depth_vanishing(s.g, s.params);
      if (!rep.passed()) {
        ok = false;
        notes << s.name << " fails; ";
      }
    }
    return ok;
  });

  report(11, "rational singularities: 25 random ideals closed on Q[x,y] and A1", [&](auto& notes) {
    std::mt19937_64 rng(7);
    int bad = 0;
    for (const Setup* s : {&rings[4], &rings[5]}) {
      std::uniform_int_distribution<int> count(1, 3);
      std::uniform_int_distribution<unsigned> deg(1, 3);
      for (int i = 0; i < 25; ++i) {
        std::vector<Polynomial> j;
        int n = count(rng);
        while (static_cast<int>(j.size()) < n) {
          auto f = random_form(s->ring, deg(rng), rng);
          if (!f.is_zero()) j.push_back(f);
        }
        auto c = ledger.kh(*s, j);
        if (!ideal_equal(c, ideal_of(s->ring, j))) {
          ++bad;
          notes << s->name << " (" << ideal_to_string(j) << ") not closed; ";
        }
      }
    }
    return bad == 0;
  });

  report(12, "test ideal m, m, m^3, m^5 and tau * J^KH inside J", [&](auto& notes) {
    bool ok = true;
    std::vector<SubmoduleBasis> taus;
    for (const auto& s : rings) {
      auto tau = kh_test_ideal(s.ring, s.w);
      auto expected = s.tau_power == 0 ? std::vector<Polynomial>{s.ring->one()}
                                       : power_generators(variables(s.ring), s.tau_power);
      if (!ideal_equal(tau, ideal_of(s.ring, expected))) {
        ok = false;
        notes << s.name << " test ideal is " << ideal_to_string(tau.ideal_basis()) << "; ";
      }
      taus.push_back(tau);
    }
    std::size_t checked = 0;
    for (const auto& item : ledger.items) {
      std::size_t idx = static_cast<std::size_t>(item.setup - rings.data());
      ++checked;
      if (!is_subset(ideal_product(taus[idx], item.closure), ideal_of(item.setup->ring, item.ideal))) {
        ok = false;
        notes << item.setup->name << " (" << ideal_to_string(item.ideal) << ") escapes; ";
      }
    }
    notes << checked << " closures";
    return ok;
  });

  // Last, so that it covers every closure computed above.
  report(8, "closure axioms on every computed ideal", [&](auto& notes) {
    std::size_t bad = 0;
    std::uint64_t seed = 1;
    for (const auto& item : ledger.items) {
      auto rep = check_axioms(item.ideal, item.setup->g, seed++);
      if (!rep.passed()) {
        ++bad;
        notes << item.setup->name << " (" << ideal_to_string(item.ideal) << ") fails; ";
      }
    }
    notes << ledger.items.size() << " ideals";
    return bad == 0;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
