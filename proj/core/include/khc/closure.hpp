#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "khc/homalg.hpp"

namespace khc {

enum class MultiplierMode {
  /// W = (generators) ⊆ R, using ω_R ≅ R.
  submodule_of_R,
  /// W = ω_R ≅ R.
  unit,
  /// W = span of columns inside the computed presentation of ω_R.
  submodule_of_omega,
};

struct MultiplierModuleSpec {
  RingPtr ring;
  MultiplierMode mode = MultiplierMode::unit;
  std::vector<Polynomial> generators;
  /// Columns in the generator coordinates of canonical_module(ring).
  std::vector<ModuleElement> omega_columns;
  /// ω_R ≅ R (true for hypersurfaces and polynomial rings).
  bool omega_is_R = true;

  static MultiplierModuleSpec unit_module(RingPtr ring);
  static MultiplierModuleSpec ideal(RingPtr ring, std::vector<Polynomial> generators);
  /// m^k, generated by the monomials of degree k.
  static MultiplierModuleSpec maximal_ideal_power(RingPtr ring, unsigned k);
};

/// ω_R = Ext^c_A(A/I_R, A) from the dual of a free resolution of A/I_R.
PresentedModule canonical_module(const RingPtr& ring);

/// The complex computing derived global sections of the structure sheaf,
/// built by duality from a free resolution of the multiplier module W over
/// A: G = Hom_A(F, A)[c], c = codim R.  H_0(G) = Ext^c_A(W, A) and the
/// homology lives in degrees [-d, 0]; the free modules themselves sit in
/// [c - pd F, c].
class RGammaComplex {
 public:
  RGammaComplex(MultiplierModuleSpec spec, Complex complex, int resolution_length);

  const Complex& complex() const { return complex_; }
  const MultiplierModuleSpec& spec() const { return spec_; }
  const RingPtr& ring() const { return spec_.ring; }
  int resolution_length() const { return resolution_length_; }

  /// Hom_R(F_R, R) for a resolution F_R of W over R, cut at length d + 1.
  /// Only available when ω_R ≅ R; built on first use.
  const Complex& over_quotient() const;

 private:
  MultiplierModuleSpec spec_;
  Complex complex_;
  int resolution_length_;
  struct Lazy {
    std::once_flag once;
    std::optional<Complex> value;
  };
  std::shared_ptr<Lazy> quotient_;
};

struct BuildOptions {
  /// Check H_h = 0 for h > 0 and I_R · H_0 = 0.
  bool verify = true;
};

RGammaComplex build_rgamma(const MultiplierModuleSpec& w, const BuildOptions& options = {});

enum class ClosureOp { kh, hir_over_A, hir_over_R, hir_hull, clpi };
std::string to_string(ClosureOp op);

enum class HironakaMode { over_A, over_R };

struct ClosureDiagnostics {
  double seconds = 0;
  /// Size of the reduced Gröbner basis of the result over A.
  std::size_t gb_size = 0;
  /// Rank of the total degree-0 module the image was taken in.
  std::size_t ambient_rank = 0;
  /// Relation columns of the image module.
  std::size_t relations = 0;
  int iterations = 1;
  bool stabilized = true;
};

struct ClosureResult {
  SubmoduleBasis input;
  SubmoduleBasis closure;
  ClosureOp op;
  ClosureDiagnostics diagnostics;
};

enum class KHRoute {
  /// Relations of the cycle images modulo boundaries, never forming the
  /// full cycle module of the total complex.
  cycle_image,
  /// Homology of both complexes, induced map, image module.
  homology,
};

/// Ideal of R (over-R basis) generated by `gens`, reduced modulo I_R.
SubmoduleBasis ideal_of(const RingPtr& ring, const std::vector<Polynomial>& gens);
/// Generators reduced modulo I_R with zeros dropped.
std::vector<Polynomial> reduced_generators(const RingPtr& ring, const std::vector<Polynomial>& gens);

ClosureResult kh_closure(const std::vector<Polynomial>& j, const RGammaComplex& g, KHRoute route = KHRoute::cycle_image);
ClosureResult hironaka_preclosure(const std::vector<Polynomial>& j, const RGammaComplex& g, HironakaMode mode);
ClosureResult hironaka_hull(const std::vector<Polynomial>& j, const RGammaComplex& g, HironakaMode mode, int max_iter);
ClosureResult clpi_closure(const std::vector<Polynomial>& j, const MultiplierModuleSpec& w);
SubmoduleBasis kh_test_ideal(const RingPtr& ring, const MultiplierModuleSpec& w);

struct ColonCaptureReport {
  bool parameters_ok = false;
  /// (x1^t, x2..xk)^KH : x1^a ⊆ (x1^(t-a), x2..xk)^KH
  bool version_a = false;
  /// (x1..xk)^KH : x_(k+1) ⊆ (x1..xk)^KH; empty when k + 1 exceeds the list.
  std::optional<bool> version_b;
  bool passed() const { return parameters_ok && version_a && version_b.value_or(true); }
};

ColonCaptureReport check_colon_capturing(const RGammaComplex& g, const std::vector<Polynomial>& x, int t, int a,
                                         int k);

struct AxiomReport {
  bool extension = false;
  bool idempotence = false;
  bool generating_set_independence = false;
  bool order_preservation = false;
  bool passed() const { return extension && idempotence && generating_set_independence && order_preservation; }
};

/// Recomputes the closure with perturbed generating sets drawn from `seed`.
AxiomReport check_axioms(const std::vector<Polynomial>& j, const RGammaComplex& g, std::uint64_t seed);

struct DepthReport {
  /// (k, h) pairs with H_h(x1..xk; G) ≠ 0.
  std::vector<std::pair<int, int>> failures;
  bool passed() const { return failures.empty(); }
};

DepthReport check_depth_vanishing(const RGammaComplex& g, const std::vector<Polynomial>& x);

enum class CounterexamplePreset { quintic_semiprime, quintic_star, quintic_bs_witness };
std::optional<CounterexamplePreset> parse_preset(const std::string& name);
std::string to_string(CounterexamplePreset preset);

struct CounterexampleReport {
  CounterexamplePreset preset;
  bool passed = false;
  /// Human-readable lines describing each verdict.
  std::vector<std::string> details;
};

/// Runs on the quintic cone x^5+y^5+z^5 with W = m^3.
CounterexampleReport check_counterexamples(CounterexamplePreset preset);

}  // namespace khc
