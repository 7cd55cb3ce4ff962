#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "khc/detail/gb_engine.hpp"
#include "khc/ring.hpp"

namespace khc {

/// Whether a free module is taken over the polynomial ring A or over R = A/I_R.
/// Over-R elements are stored as A-representatives reduced modulo I_R.
enum class Ambient { over_A, over_R };

struct FreeModuleRef {
  RingPtr ring;
  std::size_t rank = 0;
  Ambient ambient = Ambient::over_A;

  bool operator==(const FreeModuleRef& other) const {
    return ring == other.ring && rank == other.rank && ambient == other.ambient;
  }
};

/// One polynomial per basis vector of the free module.
using ModuleElement = std::vector<Polynomial>;

/// Dense matrix of polynomials: columns are elements of the target free
/// module.  Optional degree vectors describe a grading on the two free
/// modules; they only steer heuristics (pair selection, which generators are
/// kept when minimizing) and default to zero.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr ring, Ambient ambient, std::size_t rows, std::size_t cols);

  static PolyMatrix from_columns(RingPtr ring, Ambient ambient, std::size_t rows,
                                 const std::vector<ModuleElement>& columns);
  static PolyMatrix identity(RingPtr ring, Ambient ambient, std::size_t n);

  const RingPtr& ring() const { return ring_; }
  Ambient ambient() const { return ambient_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FreeModuleRef target() const { return {ring_, rows_, ambient_}; }
  FreeModuleRef source() const { return {ring_, cols_, ambient_}; }

  const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  /// Stores p, reduced modulo I_R for over-R matrices.
  void set(std::size_t r, std::size_t c, Polynomial p);

  ModuleElement column(std::size_t c) const;
  std::vector<ModuleElement> columns() const;

  const std::vector<int>& row_degrees() const { return row_deg_; }
  const std::vector<int>& col_degrees() const { return col_deg_; }
  void set_row_degrees(std::vector<int> d);
  void set_col_degrees(std::vector<int> d);
  /// Column degrees derived from the row degrees: max(deg entry + row degree).
  void infer_col_degrees();

  PolyMatrix operator*(const PolyMatrix& other) const;
  PolyMatrix transpose() const;
  PolyMatrix scaled(const Rational& s) const;
  /// [this | other]; both must share the target.
  PolyMatrix hconcat(const PolyMatrix& other) const;
  PolyMatrix select_columns(const std::vector<std::size_t>& which) const;
  bool is_zero() const;

  bool operator==(const PolyMatrix& other) const;

  /// `[a, b; c, d]` style, rows separated by `;`.
  std::string to_string() const;

 private:
  RingPtr ring_;
  Ambient ambient_ = Ambient::over_A;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> entries_;
  std::vector<int> row_deg_;
  std::vector<int> col_deg_;
};

/// A submodule of a free module together with its reduced Gröbner basis
/// (position-over-term, lower index larger).  Over R the basis is that of
/// the submodule plus I_R·e_i for every basis vector e_i.  Immutable.
class SubmoduleBasis {
 public:
  SubmoduleBasis(FreeModuleRef fm, std::vector<ModuleElement> generators, std::vector<int> weights = {});

  static SubmoduleBasis ideal(RingPtr ring, Ambient ambient, std::vector<Polynomial> generators);
  static SubmoduleBasis column_span(const PolyMatrix& m);

  const FreeModuleRef& free_module() const { return fm_; }
  const RingPtr& ring() const { return fm_.ring; }
  std::size_t rank() const { return fm_.rank; }
  const std::vector<ModuleElement>& generators() const { return generators_; }
  const std::vector<int>& weights() const { return weights_; }

  /// Reduced Gröbner basis as module elements.
  std::vector<ModuleElement> basis() const;
  /// Rank-1 convenience: reduced basis as polynomials.
  std::vector<Polynomial> ideal_basis() const;
  /// Rank-1 convenience: generators as polynomials.
  std::vector<Polynomial> ideal_generators() const;

  ModuleElement normal_form(const ModuleElement& v) const;
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const ModuleElement& v) const;
  bool contains(const Polynomial& f) const;
  /// Equal to the whole free module.
  bool is_everything() const;
  /// Zero submodule (over R: contained in I_R·F).
  bool is_zero() const;

  const std::vector<detail::Vec>& vecs() const { return data_->basis; }
  const detail::ReducerIndex& index() const { return data_->index; }

 private:
  struct Data {
    std::vector<detail::Vec> basis;
    detail::ReducerIndex index;
  };

  FreeModuleRef fm_;
  std::vector<ModuleElement> generators_;
  std::vector<int> weights_;
  std::shared_ptr<const Data> data_;
};

// --- conversions between module elements and engine vectors ---------------
namespace detail {
Vec to_vec(const ModuleElement& v, std::uint32_t offset = 0);
ModuleElement from_vec(const Vec& v, const PolyRingPtr& ring, std::size_t rank, std::uint32_t offset = 0);
/// GB of I_R·e_i for i in [0, rank), offset by `offset` components.
std::vector<Vec> relation_block(const RingPresentation& ring, std::size_t rank, std::uint32_t offset = 0);
/// Degree shifts made non-negative for the sugar strategy.
std::vector<std::uint32_t> sugar_weights(const std::vector<int>& degrees);
ModuleElement reduce_element(const ModuleElement& v, const RingPresentation& ring);
}  // namespace detail

ModuleElement zero_element(const RingPtr& ring, std::size_t rank);
ModuleElement unit_vector(const RingPtr& ring, std::size_t rank, std::size_t i);
bool is_zero(const ModuleElement& v);
/// Apply M to a column vector.
ModuleElement apply(const PolyMatrix& m, const ModuleElement& v);

/// Reduced Gröbner basis of the span of `gens` in `fm`.
SubmoduleBasis buchberger(const std::vector<ModuleElement>& gens, const FreeModuleRef& fm);

ModuleElement normal_form(const ModuleElement& v, const SubmoduleBasis& b);

/// Generators of ker(M).  With `minimize`, redundant generators are removed
/// (minimal for homogeneous input).
PolyMatrix syzygies(const PolyMatrix& m, bool minimize = true);

/// Solves M·u = v.  Reuses one tracked Gröbner basis for many right-hand sides.
class Lifter {
 public:
  explicit Lifter(const PolyMatrix& m);
  std::optional<ModuleElement> lift(const ModuleElement& v) const;
  const PolyMatrix& matrix() const { return m_; }

 private:
  struct Data {
    std::vector<detail::Vec> basis;
    detail::ReducerIndex index;
  };
  PolyMatrix m_;
  std::shared_ptr<const Data> data_;
};

std::optional<ModuleElement> lift(const ModuleElement& v, const PolyMatrix& m);

/// (I : g).  For g = 0 the unit ideal is returned and *zero_divisor is set.
SubmoduleBasis ideal_quotient(const SubmoduleBasis& ideal, const Polynomial& g, bool* zero_divisor = nullptr);
/// (I : J) = ⋂ over generators g of J of (I : g).
SubmoduleBasis ideal_quotient(const SubmoduleBasis& ideal, const SubmoduleBasis& by);
/// {a : a·v ∈ N}.
SubmoduleBasis module_quotient(const SubmoduleBasis& n, const ModuleElement& v);
/// {a : a·v ∈ N for every v}; empty list gives the unit ideal.
SubmoduleBasis module_quotient(const SubmoduleBasis& n, const std::vector<ModuleElement>& vs);
/// Relation module {c : Σ c_i·elems_i ∈ N} as columns of a k × m matrix.
PolyMatrix relations_modulo(const SubmoduleBasis& n, const std::vector<ModuleElement>& elems,
                            const std::vector<int>& elem_degrees = {});

SubmoduleBasis intersect(const SubmoduleBasis& a, const SubmoduleBasis& b);
/// Ann(coker M) for a presentation matrix M.
SubmoduleBasis annihilator_of_cokernel(const PolyMatrix& relations);

/// Deterministic generating subset none of whose proper subsets generates.
std::vector<ModuleElement> min_gens(const SubmoduleBasis& b);
/// Greedy minimization by ascending degree, optionally modulo a submodule.
/// Returns the indices of the kept generators.
std::vector<std::size_t> minimize_generators(const FreeModuleRef& fm, const std::vector<ModuleElement>& gens,
                                             const std::vector<int>& row_degrees,
                                             const SubmoduleBasis* modulo = nullptr);

bool is_subset(const SubmoduleBasis& a, const SubmoduleBasis& b);
bool ideal_equal(const SubmoduleBasis& a, const SubmoduleBasis& b);

/// I·J for ideals.
SubmoduleBasis ideal_product(const SubmoduleBasis& a, const SubmoduleBasis& b);
/// Generators of (gens)^k.
std::vector<Polynomial> power_generators(const std::vector<Polynomial>& gens, unsigned k);

/// dim R/(f) where R is the ring's quotient; -1 for the unit ideal.
int quotient_dimension(const RingPresentation& ring, const std::vector<Polynomial>& f);
/// True iff every prefix f_1..f_j cuts dim R by exactly j.
bool check_parameters(const RingPresentation& ring, const std::vector<Polynomial>& f);

std::string ideal_to_string(const std::vector<Polynomial>& gens);

}  // namespace khc
