#pragma once

#include <optional>
#include <string>
#include <vector>

#include "khc/groebner.hpp"

namespace khc {

/// Bounded complex of free modules, homologically indexed: C_lo, ..., C_hi
/// with d_h : C_h → C_{h-1}.  Modules outside [lo, hi] are zero.  Every
/// module carries a degree vector (a grading hint only).
class Complex {
 public:
  Complex() = default;
  /// `ranks[i]` is the rank of C_{lo+i}; `diffs[i]` is d_{lo+i+1}.
  /// Throws InternalInconsistency unless d_h ∘ d_{h+1} = 0.
  Complex(RingPtr ring, Ambient ambient, int lo, std::vector<std::size_t> ranks, std::vector<PolyMatrix> diffs);

  /// The ring in degree 0.
  static Complex unit(RingPtr ring, Ambient ambient);

  const RingPtr& ring() const { return ring_; }
  Ambient ambient() const { return ambient_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
  bool empty() const { return ranks_.empty(); }
  std::size_t rank(int h) const;
  FreeModuleRef module(int h) const { return {ring_, rank(h), ambient_}; }
  std::vector<int> grading(int h) const;
  /// d_h : C_h → C_{h-1}; a zero matrix of the right shape outside the range.
  PolyMatrix d(int h) const;

  /// `h: rank` lines (ascending), then `d_h = [..]` for each differential.
  std::string dump() const;

 private:
  RingPtr ring_;
  Ambient ambient_ = Ambient::over_A;
  int lo_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<PolyMatrix> diffs_;
  std::vector<std::vector<int>> grading_;
};

/// Degreewise maps φ_h : source_h → target_h commuting with the differentials.
class ChainMap {
 public:
  /// `components[i]` is φ_{lo+i}; degrees outside the list are zero maps.
  /// Throws InternalInconsistency unless φ_{h-1} d_h = d_h φ_h everywhere.
  ChainMap(Complex source, Complex target, int lo, std::vector<PolyMatrix> components);

  const Complex& source() const { return source_; }
  const Complex& target() const { return target_; }
  PolyMatrix at(int h) const;

 private:
  Complex source_;
  Complex target_;
  int lo_;
  std::vector<PolyMatrix> components_;
};

/// coker(relations).  With a subquotient lift the module's generators are
/// the columns of `lift` inside lift.target(), and the relations describe
/// exactly which combinations of them are zero.
class PresentedModule {
 public:
  explicit PresentedModule(PolyMatrix relations);
  PresentedModule(PolyMatrix relations, PolyMatrix lift);

  const RingPtr& ring() const { return relations_.ring(); }
  Ambient ambient() const { return relations_.ambient(); }
  std::size_t target_rank() const { return relations_.rows(); }
  const PolyMatrix& relations() const { return relations_; }
  bool has_lift() const { return lift_.has_value(); }
  const PolyMatrix& lift() const;

  /// True iff the module is zero (the relations span the whole free module).
  bool is_zero() const;

 private:
  PolyMatrix relations_;
  std::optional<PolyMatrix> lift_;
};

/// Koszul complex on f in degrees [0, n]; basis of K_h = h-subsets in
/// lexicographic order, d(e_I) = Σ_j (-1)^{j+1} f_{i_j} e_{I \ i_j}.
/// A nonnegative `max_degree` stops at K_max_degree.
Complex koszul_complex(const std::vector<Polynomial>& f, const RingPtr& ring, Ambient ambient = Ambient::over_A,
                       int max_degree = -1);

/// (C ⊗ D)_h = ⊕_p C_p ⊗ D_{h-p}, blocks by descending p, inner basis (a, b)
/// row-major; d(c ⊗ e) = dc ⊗ e + (-1)^p c ⊗ de.  With this block order
/// K(x) ⊗ K(y) equals K(x, y) entry for entry.
Complex tensor_complexes(const Complex& c, const Complex& d);
/// Only the total degrees in [from, to] (same matrices as the full tensor).
Complex tensor_complexes(const Complex& c, const Complex& d, int from, int to);

/// Hom(C, A): (C^∨)_h = Hom(C_{-h}, A), differential (-1)^h · transpose.
/// Dualizing twice negates every differential (isomorphic to C through the
/// sign change (-1)^h on C_h).  Over-R complexes are rejected.
Complex dualize(const Complex& c);
/// Hom_R(C, R) for an over-R complex; only meaningful when R is Gorenstein.
Complex dualize_over_quotient(const Complex& c);

/// C[k]_h = C_{h-k} with differentials multiplied by (-1)^k.
Complex shift(const Complex& c, int k);

/// Hard truncation to [lo, hi].
Complex truncate(const Complex& c, int lo, int hi);

/// Free resolution F_0 ← F_1 ← ... ← F_len of the module; stops early when
/// a syzygy module vanishes.  Over-R modules are resolved over R.
Complex free_resolution(const PresentedModule& p, int length_bound);

/// H_h(C) as a subquotient: generators are cycles of C_h (trimmed modulo
/// boundaries), relations = combinations that are boundaries.
PresentedModule homology(const Complex& c, int h);

/// Matrix of H_h(φ) between the two homology presentations (columns are
/// images of source generators in target generator coordinates).
PolyMatrix induced_map_on_homology(const ChainMap& phi, int h, const PresentedModule& source_h,
                                   const PresentedModule& target_h);
PolyMatrix induced_map_on_homology(const ChainMap& phi, int h);

/// Inclusion C → K(f) ⊗ C onto the K_0 ⊗ C summand (the last block).
ChainMap augmentation_chain_map(const std::vector<Polynomial>& f, const Complex& c);
/// Same for any P with P_0 of rank 1 in the lowest degree 0 (a resolution
/// of a cyclic module): C → P ⊗ C onto P_0 ⊗ C.
ChainMap augmentation_chain_map(const Complex& p, const Complex& c);
/// Windowed versions: source truncate(C, lo, hi), target the tensor in total
/// degrees [lo, hi] only.  The Koszul version builds K(f) up to degree hi - lo(C).
ChainMap augmentation_chain_map(const Complex& p, const Complex& c, int lo, int hi);
ChainMap augmentation_chain_map(const std::vector<Polynomial>& f, const Complex& c, int lo, int hi);

/// H_h(C) = 0, decided by checking that every cycle is a boundary.
bool homology_is_zero(const Complex& c, int h);

/// Image of a map between presented modules.  `phi` has target.target_rank()
/// rows and one column per source generator.
PresentedModule image_module(const PolyMatrix& phi, const PresentedModule& target);

/// Submodule of H_h(C) generated by the classes of the given cycles of C_h:
/// relations = combinations of `cycles` lying in im d_{h+1}.  Avoids
/// computing the full cycle module.
PresentedModule image_of_cycles(const Complex& c, int h, const std::vector<ModuleElement>& cycles,
                                const std::vector<int>& degrees = {});

SubmoduleBasis annihilator(const PresentedModule& p);

}  // namespace khc
