#include "khc/closure.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "khc/error.hpp"

namespace khc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

PolyMatrix row_matrix(const RingPtr& ring, Ambient ambient, const std::vector<Polynomial>& gens) {
  std::vector<ModuleElement> cols;
  std::vector<int> degs;
  for (const auto& g : gens) {
    cols.push_back({g});
    degs.push_back(g.is_zero() ? 0 : static_cast<int>(g.degree()));
  }
  PolyMatrix m = PolyMatrix::from_columns(ring, ambient, 1, cols);
  m.set_col_degrees(degs);
  return m;
}

PresentedModule cyclic_module(const RingPtr& ring, Ambient ambient, const std::vector<Polynomial>& gens) {
  return PresentedModule(row_matrix(ring, ambient, gens));
}

std::vector<Polynomial> as_polys(const std::vector<ModuleElement>& v) {
  std::vector<Polynomial> out;
  for (const auto& e : v) out.push_back(e.at(0));
  return out;
}

std::vector<int> degrees_of(const std::vector<ModuleElement>& cols, const std::vector<int>& row_deg) {
  std::vector<int> out;
  for (const auto& c : cols) {
    int best = 0;
    bool any = false;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i].is_zero()) continue;
      int d = static_cast<int>(c[i].degree()) + (i < row_deg.size() ? row_deg[i] : 0);
      best = any ? std::max(best, d) : d;
      any = true;
    }
    out.push_back(best);
  }
  return out;
}

// Generators of W as columns over A, together with the A-module they live
// in (given by a relation matrix whose cokernel is R or ω_R).
struct AmbientColumns {
  PolyMatrix base;
  std::vector<ModuleElement> columns;
};

AmbientColumns multiplier_columns(const MultiplierModuleSpec& w) {
  const RingPtr& ring = w.ring;
  AmbientColumns out;
  if (w.mode == MultiplierMode::submodule_of_omega) {
    PresentedModule omega = canonical_module(ring);
    out.base = omega.relations();
    for (const auto& col : w.omega_columns) {
      if (col.size() != omega.target_rank())
        throw Error("multiplier column does not match the presentation of the canonical module");
      out.columns.push_back(col);
    }
    return out;
  }
  out.base = row_matrix(ring, Ambient::over_A, ring->relation_basis());
  if (w.mode == MultiplierMode::unit) {
    out.columns.push_back({ring->one()});
  } else {
    for (const auto& g : reduced_generators(ring, w.generators)) out.columns.push_back({g});
  }
  return out;
}

PresentedModule multiplier_presentation(const MultiplierModuleSpec& w) {
  AmbientColumns a = multiplier_columns(w);
  SubmoduleBasis base = SubmoduleBasis::column_span(a.base);
  std::vector<ModuleElement> kept;
  for (auto& c : a.columns)
    if (!base.contains(c)) kept.push_back(std::move(c));
  if (kept.empty()) throw Error("multiplier module is zero");
  std::vector<int> degs = degrees_of(kept, a.base.row_degrees());
  return PresentedModule(relations_modulo(base, kept, degs));
}

// Annihilator over A of the image module, turned into an ideal of R.
SubmoduleBasis closure_from_image(const RingPtr& ring, const PresentedModule& image) {
  SubmoduleBasis ann = annihilator(image);
  return ideal_of(ring, ann.ideal_basis());
}

ClosureResult finish(SubmoduleBasis input, SubmoduleBasis closure, ClosureOp op, Clock::time_point t0,
                     std::size_t ambient_rank, std::size_t relations) {
  if (!is_subset(input, closure))
    throw InternalInconsistency("closure does not contain the input ideal (" + to_string(op) + ")");
  ClosureDiagnostics diag;
  diag.seconds = seconds_since(t0);
  diag.gb_size = closure.vecs().size();
  diag.ambient_rank = ambient_rank;
  diag.relations = relations;
  return {std::move(input), std::move(closure), op, diag};
}

// Image of H_0(G) in H_0(P ⊗ G) through the augmentation, by cycles.
PresentedModule image_in_total(const Complex& p, const Complex& g, const PresentedModule& h0, std::size_t* rank) {
  // H_0 of the total complex only involves total degrees 0 and 1.
  ChainMap aug = augmentation_chain_map(p, g, 0, 1);
  PolyMatrix cycles = aug.at(0) * h0.lift();
  *rank = aug.target().rank(0);
  return image_of_cycles(aug.target(), 0, cycles.columns(), cycles.col_degrees());
}

}  // namespace

// ---------------------------------------------------------------------------

MultiplierModuleSpec MultiplierModuleSpec::unit_module(RingPtr ring) {
  MultiplierModuleSpec s;
  s.ring = std::move(ring);
  s.mode = MultiplierMode::unit;
  return s;
}

MultiplierModuleSpec MultiplierModuleSpec::ideal(RingPtr ring, std::vector<Polynomial> generators) {
  MultiplierModuleSpec s;
  s.ring = std::move(ring);
  s.mode = MultiplierMode::submodule_of_R;
  s.generators = std::move(generators);
  return s;
}

MultiplierModuleSpec MultiplierModuleSpec::maximal_ideal_power(RingPtr ring, unsigned k) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(ring->variable(i));
  auto gens = k == 0 ? std::vector<Polynomial>{ring->one()} : power_generators(vars, k);
  return ideal(std::move(ring), std::move(gens));
}

PresentedModule canonical_module(const RingPtr& ring) {
  if (ring->is_unit_ideal()) throw Error("defining ideal is the unit ideal");
  Complex f = free_resolution(cyclic_module(ring, Ambient::over_A, ring->relation_basis()),
                              static_cast<int>(ring->nvars()));
  return homology(dualize(f), -ring->codim());
}

RGammaComplex::RGammaComplex(MultiplierModuleSpec spec, Complex complex, int resolution_length)
    : spec_(std::move(spec)), complex_(std::move(complex)), resolution_length_(resolution_length),
      quotient_(std::make_shared<Lazy>()) {}

const Complex& RGammaComplex::over_quotient() const {
  std::call_once(quotient_->once, [this] {
    if (!spec_.omega_is_R || spec_.mode == MultiplierMode::submodule_of_omega)
      throw Error("the quotient-ring model needs a multiplier module inside R ≅ ω_R");
    const RingPtr& ring = spec_.ring;
    std::vector<Polynomial> gens = spec_.mode == MultiplierMode::unit
                                       ? std::vector<Polynomial>{ring->one()}
                                       : reduced_generators(ring, spec_.generators);
    if (gens.empty()) throw Error("multiplier module is zero");
    PolyMatrix row = row_matrix(ring, Ambient::over_R, gens);
    PolyMatrix rel = syzygies(row);
    Complex f = free_resolution(PresentedModule(rel), ring->dim() + 1);
    quotient_->value = dualize_over_quotient(f);
  });
  if (!quotient_->value) throw Error("the quotient-ring model could not be built");
  return *quotient_->value;
}

RGammaComplex build_rgamma(const MultiplierModuleSpec& w, const BuildOptions& options) {
  if (!w.ring) throw Error("multiplier module without a ring");
  const RingPtr& ring = w.ring;
  if (ring->is_unit_ideal()) throw Error("defining ideal is the unit ideal; dimension is undefined");
  PresentedModule p = multiplier_presentation(w);
  const int n = static_cast<int>(ring->nvars());
  Complex f = free_resolution(p, n);
  Complex g = shift(dualize(f), ring->codim());
  if (options.verify) {
    for (int h = 1; h <= g.hi(); ++h)
      if (!homology_is_zero(g, h))
        throw InternalInconsistency("derived sections complex has homology in degree " + std::to_string(h));
    SubmoduleBasis ann = annihilator(homology(g, 0));
    for (const auto& r : ring->relation_basis())
      if (!ann.contains(r)) throw InternalInconsistency("H_0 of the derived sections complex is not an R-module");
  }
  return RGammaComplex(w, std::move(g), f.hi());
}

std::string to_string(ClosureOp op) {
  switch (op) {
    case ClosureOp::kh: return "kh";
    case ClosureOp::hir_over_A: return "hir-over-A";
    case ClosureOp::hir_over_R: return "hir-over-R";
    case ClosureOp::hir_hull: return "hir-hull";
    case ClosureOp::clpi: return "clpi";
  }
  return "?";
}

std::vector<Polynomial> reduced_generators(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    if (g.ring() && *g.ring() != *ring->ambient()) throw RingMismatch("generator from a different ring");
    Polynomial r = ring->reduce(g);
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return out;
}

SubmoduleBasis ideal_of(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  return SubmoduleBasis::ideal(ring, Ambient::over_R, reduced_generators(ring, gens));
}

// ---------------------------------------------------------------------------

ClosureResult kh_closure(const std::vector<Polynomial>& j, const RGammaComplex& g, KHRoute route) {
  auto t0 = Clock::now();
  const RingPtr& ring = g.ring();
  std::vector<Polynomial> f = reduced_generators(ring, j);
  SubmoduleBasis input = ideal_of(ring, f);
  if (f.empty() && ring->domain()) return finish(input, input, ClosureOp::kh, t0, 0, 0);
  const Complex& gc = g.complex();
  PresentedModule h0 = homology(gc, 0);
  Complex k = koszul_complex(f, ring, Ambient::over_A, 2 - gc.lo());
  std::size_t rank = 0;
  PresentedModule image = [&] {
    if (route == KHRoute::cycle_image) return image_in_total(k, gc, h0, &rank);
    ChainMap aug = augmentation_chain_map(k, gc, -1, 1);
    PresentedModule ht = homology(aug.target(), 0);
    rank = aug.target().rank(0);
    return image_module(induced_map_on_homology(aug, 0, h0, ht), ht);
  }();
  SubmoduleBasis closure = closure_from_image(ring, image);
  return finish(std::move(input), std::move(closure), ClosureOp::kh, t0, rank, image.relations().cols());
}

ClosureResult hironaka_preclosure(const std::vector<Polynomial>& j, const RGammaComplex& g, HironakaMode mode) {
  auto t0 = Clock::now();
  const RingPtr& ring = g.ring();
  std::vector<Polynomial> f = reduced_generators(ring, j);
  SubmoduleBasis input = ideal_of(ring, f);
  std::size_t rank = 0;
  PresentedModule image = [&] {
    if (mode == HironakaMode::over_A) {
      std::vector<Polynomial> gens = f;
      for (const auto& r : ring->relation_basis()) gens.push_back(r);
      Complex p = free_resolution(cyclic_module(ring, Ambient::over_A, gens), static_cast<int>(ring->nvars()));
      return image_in_total(p, g.complex(), homology(g.complex(), 0), &rank);
    }
    const Complex& gr = g.over_quotient();
    Complex p = free_resolution(cyclic_module(ring, Ambient::over_R, f), ring->dim() + 1);
    return image_in_total(p, gr, homology(gr, 0), &rank);
  }();
  SubmoduleBasis closure = closure_from_image(ring, image);
  ClosureOp op = mode == HironakaMode::over_A ? ClosureOp::hir_over_A : ClosureOp::hir_over_R;
  ClosureResult result = finish(std::move(input), std::move(closure), op, t0, rank, image.relations().cols());
  ClosureResult kh = kh_closure(f, g);
  if (!is_subset(kh.closure, result.closure))
    throw InternalInconsistency("Hironaka preclosure does not contain the KH closure");
  return result;
}

ClosureResult hironaka_hull(const std::vector<Polynomial>& j, const RGammaComplex& g, HironakaMode mode,
                            int max_iter) {
  if (max_iter < 1) throw Error("max-iter must be at least 1");
  auto t0 = Clock::now();
  ClosureResult current = hironaka_preclosure(j, g, mode);
  SubmoduleBasis input = current.input;
  int iterations = 1;
  bool stable = false;
  while (true) {
    if (ideal_equal(current.closure, current.input)) {
      stable = true;
      break;
    }
    if (iterations >= max_iter) break;
    current = hironaka_preclosure(current.closure.ideal_basis(), g, mode);
    ++iterations;
  }
  ClosureResult out = finish(std::move(input), current.closure, ClosureOp::hir_hull, t0,
                             current.diagnostics.ambient_rank, current.diagnostics.relations);
  out.diagnostics.iterations = iterations;
  out.diagnostics.stabilized = stable;
  return out;
}

ClosureResult clpi_closure(const std::vector<Polynomial>& j, const MultiplierModuleSpec& w) {
  auto t0 = Clock::now();
  const RingPtr& ring = w.ring;
  std::vector<Polynomial> f = reduced_generators(ring, j);
  SubmoduleBasis input = ideal_of(ring, f);
  AmbientColumns a = multiplier_columns(w);
  SubmoduleBasis base = SubmoduleBasis::column_span(a.base);
  std::vector<ModuleElement> wcols;
  for (auto& c : a.columns)
    if (!base.contains(c)) wcols.push_back(std::move(c));
  if (wcols.empty()) throw Error("multiplier module is zero");
  // J·W + (relations of the ambient module), then the colon by W.
  PolyMatrix jw = a.base;
  std::vector<ModuleElement> products;
  for (const auto& fi : f)
    for (const auto& c : wcols) {
      ModuleElement v = c;
      for (auto& x : v) x = x * fi;
      products.push_back(std::move(v));
    }
  if (!products.empty()) {
    PolyMatrix pm = PolyMatrix::from_columns(ring, Ambient::over_A, a.base.rows(), products);
    pm.set_row_degrees(a.base.row_degrees());
    pm.infer_col_degrees();
    jw = jw.hconcat(pm);
  }
  SubmoduleBasis colon = module_quotient(SubmoduleBasis::column_span(jw), wcols);
  SubmoduleBasis closure = ideal_of(ring, colon.ideal_basis());
  return finish(std::move(input), std::move(closure), ClosureOp::clpi, t0, a.base.rows(), jw.cols());
}

SubmoduleBasis kh_test_ideal(const RingPtr& ring, const MultiplierModuleSpec& w) {
  PresentedModule omega = canonical_module(ring);
  const std::size_t t = omega.target_rank();
  std::vector<ModuleElement> cols;
  switch (w.mode) {
    case MultiplierMode::unit:
      for (std::size_t i = 0; i < t; ++i) cols.push_back(unit_vector(ring, t, i));
      break;
    case MultiplierMode::submodule_of_R:
      if (t != 1) throw Error("canonical module is not cyclic; give the multiplier module inside ω_R");
      for (const auto& g : reduced_generators(ring, w.generators)) cols.push_back({g});
      break;
    case MultiplierMode::submodule_of_omega:
      for (const auto& c : w.omega_columns) {
        if (c.size() != t) throw Error("multiplier column does not map into the canonical module");
        cols.push_back(c);
      }
      break;
  }
  PolyMatrix quotient = omega.relations();
  if (!cols.empty()) {
    PolyMatrix wm = PolyMatrix::from_columns(ring, Ambient::over_A, t, cols);
    wm.set_row_degrees(quotient.row_degrees());
    wm.infer_col_degrees();
    quotient = quotient.hconcat(wm);
  }
  return ideal_of(ring, annihilator_of_cokernel(quotient).ideal_basis());
}

// ---------------------------------------------------------------------------

ColonCaptureReport check_colon_capturing(const RGammaComplex& g, const std::vector<Polynomial>& x, int t, int a,
                                         int k) {
  const RingPtr& ring = g.ring();
  if (!(t > a && a >= 1)) throw Error("colon capturing needs t > a >= 1");
  if (k < 1 || k > static_cast<int>(x.size()) || k > ring->dim()) throw Error("colon capturing needs 1 <= k <= dim R");
  ColonCaptureReport report;
  report.parameters_ok = check_parameters(*ring, x);
  if (!report.parameters_ok) throw Error("the given elements are not part of a system of parameters");

  auto prefix = [&](int upto) { return std::vector<Polynomial>(x.begin() + 1, x.begin() + upto); };
  std::vector<Polynomial> big = prefix(k);
  big.insert(big.begin(), x[0].pow(t));
  std::vector<Polynomial> small = prefix(k);
  small.insert(small.begin(), x[0].pow(t - a));
  SubmoduleBasis lhs = ideal_quotient(kh_closure(big, g).closure, x[0].pow(a));
  report.version_a = is_subset(lhs, kh_closure(small, g).closure);

  if (k + 1 <= static_cast<int>(x.size())) {
    std::vector<Polynomial> first(x.begin(), x.begin() + k);
    SubmoduleBasis c = kh_closure(first, g).closure;
    report.version_b = is_subset(ideal_quotient(c, x[static_cast<std::size_t>(k)]), c);
  }
  return report;
}

AxiomReport check_axioms(const std::vector<Polynomial>& j, const RGammaComplex& g, std::uint64_t seed) {
  const RingPtr& ring = g.ring();
  std::mt19937_64 rng(seed);
  AxiomReport report;
  std::vector<Polynomial> f = reduced_generators(ring, j);
  ClosureResult base = kh_closure(f, g);
  report.extension = is_subset(base.input, base.closure);

  ClosureResult again = kh_closure(as_polys(min_gens(base.closure)), g);
  report.idempotence = ideal_equal(again.closure, base.closure);

  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<std::size_t> var(0, ring->nvars() - 1);
  std::vector<Polynomial> other = f;
  if (!f.empty()) {
    // Degree-matched so that homogeneous generators stay homogeneous.
    std::uint32_t top = 0;
    for (const auto& fi : f) top = std::max(top, fi.degree());
    Polynomial combo = ring->zero();
    for (const auto& fi : f) {
      Polynomial m = ring->one();
      for (std::uint32_t e = fi.degree(); e <= top; ++e) m *= ring->variable(var(rng));
      combo += fi * m * Rational(coeff(rng));
    }
    combo = ring->reduce(combo);
    other.push_back(combo);
    std::shuffle(other.begin(), other.end(), rng);
  }
  report.generating_set_independence = ideal_equal(kh_closure(other, g).closure, base.closure);

  std::uniform_int_distribution<int> deg(1, 2);
  Polynomial extra = ring->variable(var(rng)).pow(deg(rng));
  std::vector<Polynomial> bigger = f;
  bigger.push_back(extra);
  report.order_preservation = is_subset(base.closure, kh_closure(bigger, g).closure);
  return report;
}

DepthReport check_depth_vanishing(const RGammaComplex& g, const std::vector<Polynomial>& x) {
  DepthReport report;
  const RingPtr& ring = g.ring();
  if (x.empty()) return report;
  if (!check_parameters(*ring, x)) throw Error("the given elements are not part of a system of parameters");
  for (std::size_t k = 1; k <= x.size(); ++k) {
    std::vector<Polynomial> prefix(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k));
    Complex t = tensor_complexes(koszul_complex(prefix, ring, Ambient::over_A), g.complex());
    for (int h = 1; h <= static_cast<int>(k); ++h)
      if (!homology_is_zero(t, h)) report.failures.emplace_back(static_cast<int>(k), h);
  }
  return report;
}

// ---------------------------------------------------------------------------

std::optional<CounterexamplePreset> parse_preset(const std::string& name) {
  if (name == "quintic-semiprime") return CounterexamplePreset::quintic_semiprime;
  if (name == "quintic-star") return CounterexamplePreset::quintic_star;
  if (name == "quintic-bs-witness") return CounterexamplePreset::quintic_bs_witness;
  return std::nullopt;
}

std::string to_string(CounterexamplePreset preset) {
  switch (preset) {
    case CounterexamplePreset::quintic_semiprime: return "quintic-semiprime";
    case CounterexamplePreset::quintic_star: return "quintic-star";
    case CounterexamplePreset::quintic_bs_witness: return "quintic-bs-witness";
  }
  return "?";
}

namespace {

std::vector<Polynomial> parse_all(const RingPtr& ring, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (auto t : texts) out.push_back(ring->parse(t));
  return out;
}

bool expect_ideal(CounterexampleReport& r, const std::string& label, const SubmoduleBasis& got,
                  const RingPtr& ring, std::initializer_list<const char*> expected) {
  bool ok = ideal_equal(got, ideal_of(ring, parse_all(ring, expected)));
  r.details.push_back(label + " = " + ideal_to_string(got.ideal_basis()) + (ok ? " (expected)" : " (UNEXPECTED)"));
  return ok;
}

}  // namespace

CounterexampleReport check_counterexamples(CounterexamplePreset preset) {
  auto ring = RingPresentation::make({"x", "y", "z"}, {"x^5+y^5+z^5"}, OrderKind::grevlex, true);
  RGammaComplex g = build_rgamma(MultiplierModuleSpec::maximal_ideal_power(ring, 3));
  CounterexampleReport r{preset, false, {}};
  auto kh = [&](std::initializer_list<const char*> gens) { return kh_closure(parse_all(ring, gens), g).closure; };
  switch (preset) {
    case CounterexamplePreset::quintic_semiprime: {
      SubmoduleBasis ikh = kh({"x", "y"});
      SubmoduleBasis i2kh = kh({"x^2", "x*y", "y^2"});
      bool a = expect_ideal(r, "IKH", ikh, ring, {"x", "y", "z^2"});
      bool b = expect_ideal(r, "I2KH", i2kh, ring, {"y^2", "x*y", "x^2", "z^4", "y*z^3", "x*z^3"});
      bool not_sub = !is_subset(ideal_product(ikh, ikh), i2kh);
      r.details.push_back(std::string("IKH*IKH inside I2KH: ") + (not_sub ? "false" : "true"));
      r.passed = a && b && not_sub;
      break;
    }
    case CounterexamplePreset::quintic_star: {
      SubmoduleBasis ikh = kh({"x", "y"});
      SubmoduleBasis ixkh = kh({"x^2", "x*y"});
      bool a = expect_ideal(r, "IxKH", ixkh, ring, {"x*y", "x^2", "x*z^3", "y^5+z^5"});
      SubmoduleBasis x_ikh = ideal_product(ideal_of(ring, {ring->parse("x")}), ikh);
      bool differ = !ideal_equal(x_ikh, ixkh);
      r.details.push_back(std::string("x*IKH == IxKH: ") + (differ ? "false" : "true"));
      r.passed = a && differ;
      break;
    }
    case CounterexamplePreset::quintic_bs_witness: {
      auto i2 = parse_all(ring, {"x^2", "x*y", "y^2"});
      SubmoduleBasis hir_r = hironaka_preclosure(i2, g, HironakaMode::over_R).closure;
      SubmoduleBasis hir_a = hironaka_preclosure(i2, g, HironakaMode::over_A).closure;
      SubmoduleBasis i2kh = kh_closure(i2, g).closure;
      bool a = expect_ideal(r, "I2Hir (over R)", hir_r, ring, {"y^2", "x*y", "x^2", "z^3", "y*z^2", "x*z^2"});
      bool b = expect_ideal(r, "I2Hir (over A)", hir_a, ring, {"y^2", "x*y", "x^2", "z^3", "y*z^2", "x*z^2"});
      Polynomial w = ring->parse("x*z^2");
      bool in_hir = hir_r.contains(w) && hir_a.contains(w);
      bool in_kh = i2kh.contains(w);
      r.details.push_back(std::string("x*z^2 in I2Hir: ") + (in_hir ? "true" : "false"));
      r.details.push_back(std::string("x*z^2 in I2KH: ") + (in_kh ? "true" : "false"));
      r.passed = a && b && in_hir && !in_kh;
      break;
    }
  }
  return r;
}

}  // namespace khc
