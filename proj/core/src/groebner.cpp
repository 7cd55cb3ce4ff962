#include "khc/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "khc/error.hpp"

namespace khc {

namespace detail {

Vec to_vec(const ModuleElement& v, std::uint32_t offset) {
  Vec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (const auto& t : v[i].terms()) out.push_back({t.mono, offset + static_cast<std::uint32_t>(i), t.coeff});
  return out;
}

ModuleElement from_vec(const Vec& v, const PolyRingPtr& ring, std::size_t rank, std::uint32_t offset) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : v) {
    if (t.comp < offset || t.comp >= offset + rank) continue;
    parts[t.comp - offset].push_back({t.mono, t.coeff});
  }
  ModuleElement out;
  out.reserve(rank);
  for (auto& p : parts) out.push_back(Polynomial::from_sorted_terms(ring, std::move(p)));
  return out;
}

std::vector<Vec> relation_block(const RingPresentation& ring, std::size_t rank, std::uint32_t offset) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < rank; ++i)
    for (const auto& r : ring.relation_vecs()) out.push_back(shift_components(r, offset + static_cast<std::int64_t>(i)));
  return out;
}

std::vector<std::uint32_t> sugar_weights(const std::vector<int>& degrees) {
  if (degrees.empty()) return {};
  int lo = *std::min_element(degrees.begin(), degrees.end());
  std::vector<std::uint32_t> out;
  out.reserve(degrees.size());
  for (int d : degrees) out.push_back(static_cast<std::uint32_t>(d - lo));
  return out;
}

ModuleElement reduce_element(const ModuleElement& v, const RingPresentation& ring) {
  ModuleElement out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(ring.reduce(p));
  return out;
}

}  // namespace detail

namespace {

bool reduces_mod_ring(Ambient a, const RingPresentation& ring) { return a == Ambient::over_R && !ring.is_free(); }

std::vector<int> padded(const std::vector<int>& d, std::size_t n) {
  std::vector<int> out = d;
  out.resize(n, 0);
  return out;
}

int element_degree(const ModuleElement& v, const std::vector<int>& row_degrees) {
  int best = std::numeric_limits<int>::min();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    int w = i < row_degrees.size() ? row_degrees[i] : 0;
    best = std::max(best, static_cast<int>(v[i].degree()) + w);
  }
  return best == std::numeric_limits<int>::min() ? 0 : best;
}

void require_same(const FreeModuleRef& a, const FreeModuleRef& b) {
  if (a.ring != b.ring) throw RingMismatch("submodules live over different rings");
  if (a.rank != b.rank) throw DimensionMismatch("submodules of free modules of different rank");
}

// Runs the tracked engine and returns the tracking parts of the eliminated
// elements as module elements of rank `track_rank`.
std::vector<ModuleElement> eliminate(const RingPtr& ring, Ambient ambient, std::uint32_t top_rank,
                                     std::size_t track_rank, std::vector<detail::Vec> closed,
                                     std::vector<detail::Vec> gens, const std::vector<int>& degrees) {
  detail::GBOptions opts;
  opts.top_rank = top_rank;
  opts.weights = detail::sugar_weights(degrees);
  opts.reduce_result = false;
  auto out = detail::buchberger(ring->module_order(), opts, std::move(closed), std::move(gens));
  std::vector<ModuleElement> result;
  for (const auto& e : out.eliminated) {
    ModuleElement m = detail::from_vec(e, ring->ambient(), track_rank, top_rank);
    if (reduces_mod_ring(ambient, *ring)) m = detail::reduce_element(m, *ring);
    if (!is_zero(m)) result.push_back(std::move(m));
  }
  return result;
}

}  // namespace

ModuleElement zero_element(const RingPtr& ring, std::size_t rank) { return ModuleElement(rank, ring->zero()); }

ModuleElement unit_vector(const RingPtr& ring, std::size_t rank, std::size_t i) {
  ModuleElement v = zero_element(ring, rank);
  v.at(i) = ring->one();
  return v;
}

bool is_zero(const ModuleElement& v) {
  return std::all_of(v.begin(), v.end(), [](const Polynomial& p) { return p.is_zero(); });
}

// ---------------------------------------------------------------------------

PolyMatrix::PolyMatrix(RingPtr ring, Ambient ambient, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), ambient_(ambient), rows_(rows), cols_(cols), entries_(rows * cols, ring_->zero()),
      row_deg_(rows, 0), col_deg_(cols, 0) {}

PolyMatrix PolyMatrix::from_columns(RingPtr ring, Ambient ambient, std::size_t rows,
                                    const std::vector<ModuleElement>& columns) {
  PolyMatrix m(std::move(ring), ambient, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionMismatch("column length differs from row count");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, columns[c][r]);
  }
  return m;
}

PolyMatrix PolyMatrix::identity(RingPtr ring, Ambient ambient, std::size_t n) {
  PolyMatrix m(ring, ambient, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, ring->one());
  return m;
}

void PolyMatrix::set(std::size_t r, std::size_t c, Polynomial p) {
  if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
  if (p.ring() && *p.ring() != *ring_->ambient()) throw RingMismatch("matrix entry from a different ring");
  if (!p.ring()) p = ring_->zero();
  if (reduces_mod_ring(ambient_, *ring_)) p = ring_->reduce(p);
  entries_[r * cols_ + c] = std::move(p);
}

ModuleElement PolyMatrix::column(std::size_t c) const {
  ModuleElement v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

std::vector<ModuleElement> PolyMatrix::columns() const {
  std::vector<ModuleElement> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

void PolyMatrix::set_row_degrees(std::vector<int> d) {
  if (d.size() != rows_) throw DimensionMismatch("row degree vector has wrong length");
  row_deg_ = std::move(d);
}

void PolyMatrix::set_col_degrees(std::vector<int> d) {
  if (d.size() != cols_) throw DimensionMismatch("column degree vector has wrong length");
  col_deg_ = std::move(d);
}

void PolyMatrix::infer_col_degrees() {
  for (std::size_t c = 0; c < cols_; ++c) {
    ModuleElement v = column(c);
    col_deg_[c] = khc::is_zero(v) ? (rows_ ? *std::min_element(row_deg_.begin(), row_deg_.end()) : 0)
                             : element_degree(v, row_deg_);
  }
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("matrix product with incompatible shapes");
  if (ring_ != other.ring_) throw RingMismatch("matrix product over different rings");
  PolyMatrix out(ring_, ambient_, rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < other.cols_; ++c) {
      Polynomial acc = ring_->zero();
      for (std::size_t k = 0; k < cols_; ++k) {
        const Polynomial& a = at(r, k);
        const Polynomial& b = other.at(k, c);
        if (a.is_zero() || b.is_zero()) continue;
        acc += a * b;
      }
      out.set(r, c, std::move(acc));
    }
  out.row_deg_ = row_deg_;
  out.col_deg_ = other.col_deg_;
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(ring_, ambient_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.entries_[c * rows_ + r] = at(r, c);
  for (std::size_t c = 0; c < cols_; ++c) out.row_deg_[c] = -col_deg_[c];
  for (std::size_t r = 0; r < rows_; ++r) out.col_deg_[r] = -row_deg_[r];
  return out;
}

PolyMatrix PolyMatrix::scaled(const Rational& s) const {
  PolyMatrix out = *this;
  for (auto& p : out.entries_) p *= s;
  return out;
}

PolyMatrix PolyMatrix::hconcat(const PolyMatrix& other) const {
  if (rows_ != other.rows_) throw DimensionMismatch("hconcat of matrices with different row counts");
  PolyMatrix out(ring_, ambient_, rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.entries_[r * out.cols_ + c] = at(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) out.entries_[r * out.cols_ + cols_ + c] = other.at(r, c);
  }
  out.row_deg_ = row_deg_;
  std::copy(col_deg_.begin(), col_deg_.end(), out.col_deg_.begin());
  std::copy(other.col_deg_.begin(), other.col_deg_.end(), out.col_deg_.begin() + static_cast<std::ptrdiff_t>(cols_));
  return out;
}

PolyMatrix PolyMatrix::select_columns(const std::vector<std::size_t>& which) const {
  PolyMatrix out(ring_, ambient_, rows_, which.size());
  for (std::size_t k = 0; k < which.size(); ++k) {
    for (std::size_t r = 0; r < rows_; ++r) out.entries_[r * which.size() + k] = at(r, which[k]);
    out.col_deg_[k] = col_deg_.at(which[k]);
  }
  out.row_deg_ = row_deg_;
  return out;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << at(r, c).to_string();
    }
  }
  os << ']';
  return os.str();
}

ModuleElement apply(const PolyMatrix& m, const ModuleElement& v) {
  if (v.size() != m.cols()) throw DimensionMismatch("vector length differs from column count");
  ModuleElement out = zero_element(m.ring(), m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!m.at(r, c).is_zero()) out[r] += m.at(r, c) * v[c];
  }
  if (reduces_mod_ring(m.ambient(), *m.ring())) out = detail::reduce_element(out, *m.ring());
  return out;
}

// ---------------------------------------------------------------------------

SubmoduleBasis::SubmoduleBasis(FreeModuleRef fm, std::vector<ModuleElement> generators, std::vector<int> weights)
    : fm_(std::move(fm)), generators_(std::move(generators)), weights_(padded(weights, fm_.rank)) {
  if (!fm_.ring) throw Error("submodule without a ring");
  std::vector<detail::Vec> gens;
  for (auto& g : generators_) {
    if (g.size() != fm_.rank) throw DimensionMismatch("generator length differs from module rank");
    for (auto& p : g) {
      if (!p.ring()) p = fm_.ring->zero();
      else if (*p.ring() != *fm_.ring->ambient()) throw RingMismatch("generator from a different ring");
    }
    if (reduces_mod_ring(fm_.ambient, *fm_.ring)) g = detail::reduce_element(g, *fm_.ring);
    if (!khc::is_zero(g)) gens.push_back(detail::to_vec(g));
  }
  std::vector<detail::Vec> closed;
  if (fm_.ambient == Ambient::over_R) closed = detail::relation_block(*fm_.ring, fm_.rank);
  detail::GBOptions opts;
  opts.top_rank = static_cast<std::uint32_t>(fm_.rank);
  opts.weights = detail::sugar_weights(weights_);
  opts.product_criterion = fm_.rank == 1;
  auto out = detail::buchberger(fm_.ring->module_order(), opts, std::move(closed), std::move(gens));
  auto data = std::make_shared<Data>();
  data->basis = std::move(out.basis);
  data->index.reset(&data->basis);
  data_ = std::move(data);
}

SubmoduleBasis SubmoduleBasis::ideal(RingPtr ring, Ambient ambient, std::vector<Polynomial> generators) {
  std::vector<ModuleElement> gens;
  gens.reserve(generators.size());
  for (auto& g : generators) gens.push_back({std::move(g)});
  return SubmoduleBasis({std::move(ring), 1, ambient}, std::move(gens));
}

SubmoduleBasis SubmoduleBasis::column_span(const PolyMatrix& m) {
  return SubmoduleBasis(m.target(), m.columns(), m.row_degrees());
}

std::vector<ModuleElement> SubmoduleBasis::basis() const {
  std::vector<ModuleElement> out;
  out.reserve(vecs().size());
  for (const auto& v : vecs()) out.push_back(detail::from_vec(v, fm_.ring->ambient(), fm_.rank));
  return out;
}

std::vector<Polynomial> SubmoduleBasis::ideal_basis() const {
  if (fm_.rank != 1) throw DimensionMismatch("ideal_basis on a submodule of rank > 1");
  std::vector<Polynomial> out;
  for (const auto& v : vecs()) out.push_back(detail::from_vec(v, fm_.ring->ambient(), 0u));
  return out;
}

std::vector<Polynomial> SubmoduleBasis::ideal_generators() const {
  if (fm_.rank != 1) throw DimensionMismatch("ideal_generators on a submodule of rank > 1");
  std::vector<Polynomial> out;
  for (const auto& g : generators_) out.push_back(g[0]);
  return out;
}

ModuleElement SubmoduleBasis::normal_form(const ModuleElement& v) const {
  if (v.size() != fm_.rank) throw DimensionMismatch("element length differs from module rank");
  auto r = detail::reduce(detail::to_vec(v), vecs(), index(), fm_.ring->module_order(), detail::ReduceMode::full,
                          static_cast<std::uint32_t>(fm_.rank));
  return detail::from_vec(r, fm_.ring->ambient(), fm_.rank);
}

Polynomial SubmoduleBasis::normal_form(const Polynomial& f) const { return normal_form(ModuleElement{f})[0]; }

bool SubmoduleBasis::contains(const ModuleElement& v) const {
  if (v.size() != fm_.rank) throw DimensionMismatch("element length differs from module rank");
  return detail::reduce(detail::to_vec(v), vecs(), index(), fm_.ring->module_order(), detail::ReduceMode::lead,
                        static_cast<std::uint32_t>(fm_.rank))
      .empty();
}

bool SubmoduleBasis::contains(const Polynomial& f) const { return contains(ModuleElement{f}); }

bool SubmoduleBasis::is_everything() const {
  std::vector<bool> hit(fm_.rank, false);
  for (const auto& v : vecs())
    if (v.front().mono.is_one()) hit[v.front().comp] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool SubmoduleBasis::is_zero() const {
  for (const auto& g : generators_) {
    ModuleElement r = fm_.ambient == Ambient::over_R ? detail::reduce_element(g, *fm_.ring) : g;
    if (!khc::is_zero(r)) return false;
  }
  return true;
}

SubmoduleBasis buchberger(const std::vector<ModuleElement>& gens, const FreeModuleRef& fm) {
  return SubmoduleBasis(fm, gens);
}

ModuleElement normal_form(const ModuleElement& v, const SubmoduleBasis& b) { return b.normal_form(v); }

// ---------------------------------------------------------------------------

PolyMatrix syzygies(const PolyMatrix& m, bool minimize) {
  const RingPtr& ring = m.ring();
  const auto r = static_cast<std::uint32_t>(m.rows());
  std::vector<detail::Vec> gens;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    detail::Vec v = detail::to_vec(m.column(c));
    v.push_back({Monomial(), r + static_cast<std::uint32_t>(c), Rational(1)});
    gens.push_back(std::move(v));
  }
  std::vector<detail::Vec> closed;
  if (m.ambient() == Ambient::over_R) closed = detail::relation_block(*ring, m.rows());
  std::vector<int> degrees = m.row_degrees();
  degrees.insert(degrees.end(), m.col_degrees().begin(), m.col_degrees().end());
  auto syz = eliminate(ring, m.ambient(), r, m.cols(), std::move(closed), std::move(gens), degrees);
  if (minimize && !syz.empty()) {
    auto keep = minimize_generators(m.source(), syz, m.col_degrees());
    std::vector<ModuleElement> kept;
    for (auto k : keep) kept.push_back(std::move(syz[k]));
    syz = std::move(kept);
  }
  PolyMatrix out = PolyMatrix::from_columns(ring, m.ambient(), m.cols(), syz);
  out.set_row_degrees(m.col_degrees());
  out.infer_col_degrees();
  return out;
}

Lifter::Lifter(const PolyMatrix& m) : m_(m) {
  const RingPtr& ring = m.ring();
  const auto r = static_cast<std::uint32_t>(m.rows());
  std::vector<detail::Vec> gens;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    detail::Vec v = detail::to_vec(m.column(c));
    v.push_back({Monomial(), r + static_cast<std::uint32_t>(c), Rational(1)});
    gens.push_back(std::move(v));
  }
  std::vector<detail::Vec> closed;
  if (m.ambient() == Ambient::over_R) closed = detail::relation_block(*ring, m.rows());
  std::vector<int> degrees = m.row_degrees();
  degrees.insert(degrees.end(), m.col_degrees().begin(), m.col_degrees().end());
  detail::GBOptions opts;
  opts.top_rank = r;
  opts.weights = detail::sugar_weights(degrees);
  opts.reduce_result = false;
  auto out = detail::buchberger(ring->module_order(), opts, std::move(closed), std::move(gens));
  auto data = std::make_shared<Data>();
  data->basis = std::move(out.basis);
  data->index.reset(&data->basis);
  data_ = std::move(data);
}

std::optional<ModuleElement> Lifter::lift(const ModuleElement& v) const {
  if (v.size() != m_.rows()) throw DimensionMismatch("lift target has wrong length");
  const auto r = static_cast<std::uint32_t>(m_.rows());
  auto rest = detail::reduce(detail::to_vec(v), data_->basis, data_->index, m_.ring()->module_order(),
                             detail::ReduceMode::lead, r);
  if (!rest.empty() && rest.front().comp < r) return std::nullopt;
  ModuleElement u = detail::from_vec(rest, m_.ring()->ambient(), m_.cols(), r);
  for (auto& p : u) p *= Rational(-1);
  if (reduces_mod_ring(m_.ambient(), *m_.ring())) u = detail::reduce_element(u, *m_.ring());
  return u;
}

std::optional<ModuleElement> lift(const ModuleElement& v, const PolyMatrix& m) { return Lifter(m).lift(v); }

// ---------------------------------------------------------------------------

SubmoduleBasis module_quotient(const SubmoduleBasis& n, const std::vector<ModuleElement>& vs) {
  const FreeModuleRef& fm = n.free_module();
  const std::size_t r = fm.rank;
  const std::size_t k = vs.size();
  if (k == 0) return SubmoduleBasis::ideal(fm.ring, fm.ambient, {fm.ring->one()});
  const auto top = static_cast<std::uint32_t>(k * r);
  std::vector<detail::Vec> closed;
  detail::Vec gen;
  std::vector<int> degrees;
  int top_degree = 0;
  for (std::size_t b = 0; b < k; ++b) {
    if (vs[b].size() != r) throw DimensionMismatch("colon by an element of the wrong length");
    for (const auto& g : n.vecs()) closed.push_back(detail::shift_components(g, static_cast<std::int64_t>(b * r)));
    ModuleElement v = reduces_mod_ring(fm.ambient, *fm.ring) ? detail::reduce_element(vs[b], *fm.ring) : vs[b];
    auto part = detail::to_vec(v, static_cast<std::uint32_t>(b * r));
    gen.insert(gen.end(), part.begin(), part.end());
    degrees.insert(degrees.end(), n.weights().begin(), n.weights().end());
    if (!is_zero(v)) top_degree = std::max(top_degree, element_degree(v, n.weights()));
  }
  gen.push_back({Monomial(), top, Rational(1)});
  degrees.push_back(top_degree);
  auto found = eliminate(fm.ring, fm.ambient, top, 1, std::move(closed), {std::move(gen)}, degrees);
  std::vector<Polynomial> polys;
  for (auto& e : found) polys.push_back(std::move(e[0]));
  return SubmoduleBasis::ideal(fm.ring, fm.ambient, std::move(polys));
}

SubmoduleBasis module_quotient(const SubmoduleBasis& n, const ModuleElement& v) {
  return module_quotient(n, std::vector<ModuleElement>{v});
}

SubmoduleBasis ideal_quotient(const SubmoduleBasis& ideal, const Polynomial& g, bool* zero_divisor) {
  if (ideal.rank() != 1) throw DimensionMismatch("ideal_quotient on a submodule of rank > 1");
  Polynomial h = ideal.free_module().ambient == Ambient::over_R ? ideal.ring()->reduce(g) : g;
  if (zero_divisor) *zero_divisor = h.is_zero();
  if (h.is_zero()) return SubmoduleBasis::ideal(ideal.ring(), ideal.free_module().ambient, {ideal.ring()->one()});
  return module_quotient(ideal, ModuleElement{h});
}

SubmoduleBasis ideal_quotient(const SubmoduleBasis& ideal, const SubmoduleBasis& by) {
  require_same(ideal.free_module(), by.free_module());
  std::vector<ModuleElement> vs;
  for (const auto& g : by.generators())
    if (!is_zero(g)) vs.push_back(g);
  return module_quotient(ideal, vs);
}

PolyMatrix relations_modulo(const SubmoduleBasis& n, const std::vector<ModuleElement>& elems,
                            const std::vector<int>& elem_degrees) {
  const FreeModuleRef& fm = n.free_module();
  const auto r = static_cast<std::uint32_t>(fm.rank);
  const std::size_t k = elems.size();
  std::vector<int> edeg = elem_degrees;
  if (edeg.empty())
    for (const auto& e : elems) edeg.push_back(element_degree(e, n.weights()));
  if (edeg.size() != k) throw DimensionMismatch("degree vector has wrong length");
  std::vector<detail::Vec> gens;
  for (std::size_t i = 0; i < k; ++i) {
    if (elems[i].size() != fm.rank) throw DimensionMismatch("element length differs from module rank");
    detail::Vec v = detail::to_vec(elems[i]);
    v.push_back({Monomial(), r + static_cast<std::uint32_t>(i), Rational(1)});
    gens.push_back(std::move(v));
  }
  std::vector<int> degrees = n.weights();
  degrees.insert(degrees.end(), edeg.begin(), edeg.end());
  auto rel = eliminate(fm.ring, fm.ambient, r, k, n.vecs(), std::move(gens), degrees);
  FreeModuleRef source{fm.ring, k, fm.ambient};
  if (!rel.empty()) {
    auto keep = minimize_generators(source, rel, edeg);
    std::vector<ModuleElement> kept;
    for (auto i : keep) kept.push_back(std::move(rel[i]));
    rel = std::move(kept);
  }
  PolyMatrix out = PolyMatrix::from_columns(fm.ring, fm.ambient, k, rel);
  out.set_row_degrees(edeg);
  out.infer_col_degrees();
  return out;
}

SubmoduleBasis intersect(const SubmoduleBasis& a, const SubmoduleBasis& b) {
  require_same(a.free_module(), b.free_module());
  const FreeModuleRef& fm = a.free_module();
  const auto r = static_cast<std::uint32_t>(fm.rank);
  // (g, g) for g in a and (h, 0) for h in b: elements with vanishing first
  // half carry a ∩ b in the second half.
  std::vector<detail::Vec> gens;
  for (const auto& g : a.vecs()) {
    detail::Vec v = g;
    auto copy = detail::shift_components(g, r);
    v.insert(v.end(), copy.begin(), copy.end());
    gens.push_back(std::move(v));
  }
  std::vector<int> degrees = a.weights();
  degrees.insert(degrees.end(), a.weights().begin(), a.weights().end());
  auto found = eliminate(fm.ring, fm.ambient, r, fm.rank, b.vecs(), std::move(gens), degrees);
  return SubmoduleBasis(fm, std::move(found), a.weights());
}

SubmoduleBasis annihilator_of_cokernel(const PolyMatrix& relations) {
  const std::size_t t = relations.rows();
  SubmoduleBasis n = SubmoduleBasis::column_span(relations);
  std::vector<ModuleElement> units;
  for (std::size_t i = 0; i < t; ++i) units.push_back(unit_vector(relations.ring(), t, i));
  return module_quotient(n, units);
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> minimize_generators(const FreeModuleRef& fm, const std::vector<ModuleElement>& gens,
                                             const std::vector<int>& row_degrees, const SubmoduleBasis* modulo) {
  std::vector<int> w = padded(row_degrees, fm.rank);
  std::vector<std::size_t> order(gens.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> deg;
  deg.reserve(gens.size());
  for (const auto& g : gens) deg.push_back(element_degree(g, w));
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg[a] < deg[b]; });

  std::vector<detail::Vec> current;
  if (modulo) {
    require_same(fm, modulo->free_module());
    current = modulo->vecs();
  } else if (fm.ambient == Ambient::over_R) {
    current = detail::relation_block(*fm.ring, fm.rank);
  }
  detail::ReducerIndex index(&current);
  detail::GBOptions opts;
  opts.top_rank = static_cast<std::uint32_t>(fm.rank);
  opts.weights = detail::sugar_weights(w);
  opts.reduce_result = false;
  opts.product_criterion = fm.rank == 1;
  const auto ord = fm.ring->module_order();

  std::vector<std::size_t> kept;
  for (std::size_t i : order) {
    ModuleElement g = reduces_mod_ring(fm.ambient, *fm.ring) ? detail::reduce_element(gens[i], *fm.ring) : gens[i];
    auto v = detail::to_vec(g);
    if (v.empty()) continue;
    auto rest = detail::reduce(v, current, index, ord, detail::ReduceMode::lead, opts.top_rank);
    if (rest.empty()) continue;
    kept.push_back(i);
    auto out = detail::buchberger(ord, opts, std::move(current), {std::move(v)});
    current = std::move(out.basis);
    index.reset(&current);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<ModuleElement> min_gens(const SubmoduleBasis& b) {
  auto keep = minimize_generators(b.free_module(), b.generators(), b.weights());
  std::vector<ModuleElement> out;
  for (auto i : keep) out.push_back(b.generators()[i]);
  return out;
}

bool is_subset(const SubmoduleBasis& a, const SubmoduleBasis& b) {
  require_same(a.free_module(), b.free_module());
  const auto ord = a.ring()->module_order();
  const auto top = static_cast<std::uint32_t>(a.rank());
  for (const auto& v : a.vecs())
    if (!detail::reduce(v, b.vecs(), b.index(), ord, detail::ReduceMode::lead, top).empty()) return false;
  return true;
}

bool ideal_equal(const SubmoduleBasis& a, const SubmoduleBasis& b) { return is_subset(a, b) && is_subset(b, a); }

SubmoduleBasis ideal_product(const SubmoduleBasis& a, const SubmoduleBasis& b) {
  require_same(a.free_module(), b.free_module());
  if (a.rank() != 1) throw DimensionMismatch("ideal_product on submodules of rank > 1");
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f[0] * g[0]);
  return SubmoduleBasis::ideal(a.ring(), a.free_module().ambient, std::move(gens));
}

std::vector<Polynomial> power_generators(const std::vector<Polynomial>& gens, unsigned k) {
  if (gens.empty()) return {};
  std::vector<Polynomial> out;
  // multisets of size k drawn from gens, by nondecreasing index
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    Polynomial p(gens.front().ring(), Rational(1));
    for (auto i : idx) p *= gens[i];
    out.push_back(std::move(p));
    long pos = static_cast<long>(k) - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == gens.size() - 1) --pos;
    if (pos < 0) break;
    std::size_t v = idx[static_cast<std::size_t>(pos)] + 1;
    for (auto j = static_cast<std::size_t>(pos); j < k; ++j) idx[j] = v;
  }
  return out;
}

int quotient_dimension(const RingPresentation& ring, const std::vector<Polynomial>& f) {
  std::vector<detail::Vec> gens;
  for (const auto& p : f)
    if (!p.is_zero()) gens.push_back(detail::to_vec(p, 0));
  detail::GBOptions opts;
  opts.product_criterion = true;
  opts.reduce_result = false;
  auto out = detail::buchberger(ring.module_order(), opts, ring.relation_vecs(), std::move(gens));
  std::vector<Monomial> leads;
  for (const auto& v : out.basis) leads.push_back(v.front().mono);
  return dimension_from_leads(leads, ring.nvars());
}

bool check_parameters(const RingPresentation& ring, const std::vector<Polynomial>& f) {
  const int d = ring.dim();
  if (d < 0 || static_cast<int>(f.size()) > d) return false;
  std::vector<Polynomial> prefix;
  for (const auto& p : f) {
    prefix.push_back(p);
    if (quotient_dimension(ring, prefix) != d - static_cast<int>(prefix.size())) return false;
  }
  return true;
}

std::string ideal_to_string(const std::vector<Polynomial>& gens) {
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += gens[i].to_string();
  }
  return s + ")";
}

}  // namespace khc
