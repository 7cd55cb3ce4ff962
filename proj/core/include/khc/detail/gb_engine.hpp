#pragma once

// Buchberger kernel shared by every module-level operation.
//
// Vectors live in a free module ℚ[x]^n and are stored as term lists sorted
// descending in the position-over-term order: a lower component index is
// larger, ties broken by the monomial order.  The components are split into
// a "top" block [0, top_rank) and a tracking block [top_rank, n).  Pairs are
// formed only among elements whose leading term lies in the top block;
// elements whose top part reduces to zero are collected as `eliminated`.
// Feeding generators of the form (m_j, e_j) therefore yields, in one run, a
// Gröbner basis of the column span together with generators of the
// syzygy module of the columns.

#include <cstdint>
#include <vector>

#include "khc/monomial.hpp"
#include "khc/polynomial.hpp"

namespace khc::detail {

struct VTerm {
  Monomial mono;
  std::uint32_t comp;
  Rational coeff;
};

using Vec = std::vector<VTerm>;

struct ModuleOrder {
  OrderKind order;
  std::size_t nvars;

  int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
    if (ca != cb) return ca < cb ? 1 : -1;
    return khc::compare(a, b, order, nvars);
  }
  int compare(const VTerm& a, const VTerm& b) const { return compare(a.mono, a.comp, b.mono, b.comp); }
};

/// Sorts, merges and drops zero terms.
Vec canonicalize(Vec terms, const ModuleOrder& ord);
/// a + scale * mono * b.
Vec add_scaled(const Vec& a, const Vec& b, const Rational& scale, const Monomial& mono, const ModuleOrder& ord);
Vec scale(const Vec& v, const Rational& c, const Monomial& mono);
void make_monic(Vec& v);
/// Shifts every component index by `offset` (may be negative for projection).
Vec shift_components(const Vec& v, std::int64_t offset);
/// Keeps only terms whose component lies in [lo, hi).
Vec restrict_components(const Vec& v, std::uint32_t lo, std::uint32_t hi);

struct GBOptions {
  /// Components below this index form the top block.
  std::uint32_t top_rank = 1;
  /// Per-component degree shifts used for the sugar strategy.
  std::vector<std::uint32_t> weights;
  /// Interreduce and sort the final top basis.
  bool reduce_result = true;
  /// Apply the coprime-leading-term criterion.  Only sound for ideals
  /// without tracking data; callers must leave it off otherwise.
  bool product_criterion = false;
};

struct GBOutput {
  /// Elements led in the top block.  When reduce_result is set this is the
  /// reduced, monic Gröbner basis sorted descending by leading term.
  std::vector<Vec> basis;
  /// Monic elements whose top part vanished.
  std::vector<Vec> eliminated;
};

/// `closed` must already be a Gröbner basis (all its S-pairs reduce to
/// zero); its internal pairs are not recomputed.
GBOutput buchberger(const ModuleOrder& ord, const GBOptions& opts, std::vector<Vec> closed, std::vector<Vec> gens);

/// Reducer lookup over a fixed set of monic vectors.
class ReducerIndex {
 public:
  ReducerIndex() = default;
  explicit ReducerIndex(const std::vector<Vec>* basis) { reset(basis); }
  void reset(const std::vector<Vec>* basis);
  void add(std::size_t index);
  /// Index of a reducer whose leading term divides (mono, comp), or -1.
  long find(const Monomial& mono, std::uint32_t comp) const;

 private:
  struct Entry {
    Monomial lead;
    std::size_t index;
    std::size_t length;
  };
  const std::vector<Vec>* basis_ = nullptr;
  std::vector<std::vector<Entry>> by_comp_;
};

enum class ReduceMode {
  /// Reduce leading terms only, stopping at the first irreducible one.
  lead,
  /// Reduce every term in the top block.
  top,
  /// Reduce every term.
  full,
};

/// Reduces `f` by the indexed basis.  Terms with component >= top_rank are
/// never used as reduction targets unless mode == full.
Vec reduce(Vec f, const std::vector<Vec>& basis, const ReducerIndex& index, const ModuleOrder& ord,
           ReduceMode mode, std::uint32_t top_rank);

std::uint32_t sugar_of(const Vec& v, const std::vector<std::uint32_t>& weights);

}  // namespace khc::detail
