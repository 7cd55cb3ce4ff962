#include "khc/homalg.hpp"

#include <algorithm>
#include <sstream>

#include "khc/error.hpp"

namespace khc {

namespace {

PolyMatrix zero_matrix(const RingPtr& ring, Ambient ambient, std::size_t rows, std::size_t cols,
                       const std::vector<int>& row_deg, const std::vector<int>& col_deg) {
  PolyMatrix m(ring, ambient, rows, cols);
  if (row_deg.size() == rows) m.set_row_degrees(row_deg);
  if (col_deg.size() == cols) m.set_col_degrees(col_deg);
  return m;
}

Rational sign(int k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

Complex::Complex(RingPtr ring, Ambient ambient, int lo, std::vector<std::size_t> ranks, std::vector<PolyMatrix> diffs)
    : ring_(std::move(ring)), ambient_(ambient), lo_(lo), ranks_(std::move(ranks)), diffs_(std::move(diffs)) {
  if (ranks_.empty()) throw DimensionMismatch("complex without modules");
  if (diffs_.size() + 1 != ranks_.size()) throw DimensionMismatch("complex needs one differential per adjacent pair");
  for (std::size_t i = 0; i < diffs_.size(); ++i) {
    const PolyMatrix& m = diffs_[i];
    if (m.rows() != ranks_[i] || m.cols() != ranks_[i + 1])
      throw DimensionMismatch("differential d_" + std::to_string(lo_ + static_cast<int>(i) + 1) + " has wrong shape");
    if (m.ring() != ring_) throw RingMismatch("differential over a different ring");
  }
  grading_.resize(ranks_.size());
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (i > 0) grading_[i] = diffs_[i - 1].col_degrees();
    else if (!diffs_.empty()) grading_[i] = diffs_[0].row_degrees();
    else grading_[i].assign(ranks_[i], 0);
  }
  for (std::size_t i = 0; i + 1 < diffs_.size(); ++i) {
    if (!(diffs_[i] * diffs_[i + 1]).is_zero())
      throw InternalInconsistency("d_" + std::to_string(lo_ + static_cast<int>(i) + 1) + " ∘ d_" +
                                  std::to_string(lo_ + static_cast<int>(i) + 2) + " is not zero");
  }
}

Complex Complex::unit(RingPtr ring, Ambient ambient) { return Complex(std::move(ring), ambient, 0, {1}, {}); }

std::size_t Complex::rank(int h) const {
  if (h < lo_ || h > hi()) return 0;
  return ranks_[static_cast<std::size_t>(h - lo_)];
}

std::vector<int> Complex::grading(int h) const {
  if (h < lo_ || h > hi()) return {};
  return grading_[static_cast<std::size_t>(h - lo_)];
}

PolyMatrix Complex::d(int h) const {
  if (h > lo_ && h <= hi()) return diffs_[static_cast<std::size_t>(h - lo_ - 1)];
  return zero_matrix(ring_, ambient_, rank(h - 1), rank(h), grading(h - 1), grading(h));
}

std::string Complex::dump() const {
  std::ostringstream os;
  for (int h = lo_; h <= hi(); ++h) os << h << ": " << rank(h) << '\n';
  for (int h = lo_ + 1; h <= hi(); ++h) os << "d_" << h << " = " << d(h).to_string() << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------

ChainMap::ChainMap(Complex source, Complex target, int lo, std::vector<PolyMatrix> components)
    : source_(std::move(source)), target_(std::move(target)), lo_(lo), components_(std::move(components)) {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    int h = lo_ + static_cast<int>(i);
    const PolyMatrix& m = components_[i];
    if (m.rows() != target_.rank(h) || m.cols() != source_.rank(h))
      throw DimensionMismatch("chain map component " + std::to_string(h) + " has wrong shape");
  }
  int from = std::min(source_.lo(), target_.lo());
  int to = std::max(source_.hi(), target_.hi()) + 1;
  for (int h = from; h <= to; ++h) {
    PolyMatrix left = at(h - 1) * source_.d(h);
    PolyMatrix right = target_.d(h) * at(h);
    if (!(left == right)) throw InternalInconsistency("chain map square fails in degree " + std::to_string(h));
  }
}

PolyMatrix ChainMap::at(int h) const {
  if (h >= lo_ && h < lo_ + static_cast<int>(components_.size())) return components_[static_cast<std::size_t>(h - lo_)];
  return zero_matrix(source_.ring(), source_.ambient(), target_.rank(h), source_.rank(h), target_.grading(h),
                     source_.grading(h));
}

// ---------------------------------------------------------------------------

PresentedModule::PresentedModule(PolyMatrix relations) : relations_(std::move(relations)) {}

PresentedModule::PresentedModule(PolyMatrix relations, PolyMatrix lift)
    : relations_(std::move(relations)), lift_(std::move(lift)) {
  if (lift_->cols() != relations_.rows()) throw DimensionMismatch("lift has one column per generator");
}

const PolyMatrix& PresentedModule::lift() const {
  if (!lift_) throw Error("module has no subquotient lift");
  return *lift_;
}

bool PresentedModule::is_zero() const {
  if (target_rank() == 0) return true;
  return SubmoduleBasis::column_span(relations_).is_everything();
}

SubmoduleBasis annihilator(const PresentedModule& p) { return annihilator_of_cokernel(p.relations()); }

// ---------------------------------------------------------------------------

Complex koszul_complex(const std::vector<Polynomial>& f, const RingPtr& ring, Ambient ambient, int max_degree) {
  const std::size_t n = max_degree < 0 ? f.size() : std::min(f.size(), static_cast<std::size_t>(max_degree));
  std::vector<std::vector<std::vector<std::size_t>>> basis(n + 1);
  std::vector<std::vector<int>> degs(n + 1);
  for (std::size_t h = 0; h <= n; ++h) {
    basis[h] = subsets(f.size(), h);
    for (const auto& s : basis[h]) {
      int deg = 0;
      for (auto i : s) deg += f[i].is_zero() ? 0 : static_cast<int>(f[i].degree());
      degs[h].push_back(deg);
    }
  }
  std::vector<std::size_t> ranks;
  for (std::size_t h = 0; h <= n; ++h) ranks.push_back(basis[h].size());
  std::vector<PolyMatrix> diffs;
  for (std::size_t h = 1; h <= n; ++h) {
    PolyMatrix m(ring, ambient, ranks[h - 1], ranks[h]);
    m.set_row_degrees(degs[h - 1]);
    m.set_col_degrees(degs[h]);
    for (std::size_t c = 0; c < basis[h].size(); ++c) {
      const auto& s = basis[h][c];
      for (std::size_t j = 0; j < s.size(); ++j) {
        std::vector<std::size_t> rest = s;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
        auto it = std::lower_bound(basis[h - 1].begin(), basis[h - 1].end(), rest);
        auto r = static_cast<std::size_t>(it - basis[h - 1].begin());
        m.set(r, c, f[s[j]] * sign(static_cast<int>(j)));
      }
    }
    diffs.push_back(std::move(m));
  }
  return Complex(ring, ambient, 0, std::move(ranks), std::move(diffs));
}

Complex tensor_complexes(const Complex& c, const Complex& d) {
  return tensor_complexes(c, d, c.lo() + d.lo(), c.hi() + d.hi());
}

Complex tensor_complexes(const Complex& c, const Complex& d, int from, int to) {
  if (c.ring() != d.ring()) throw RingMismatch("tensor of complexes over different rings");
  if (c.ambient() != d.ambient()) throw RingMismatch("tensor of over-A and over-R complexes");
  const RingPtr& ring = c.ring();
  const int lo = std::max(from, c.lo() + d.lo());
  const int hi = std::min(to, c.hi() + d.hi());
  if (lo > hi) return Complex(ring, c.ambient(), from, {0}, {});
  // offsets[h][p] = start of block C_p ⊗ D_{h-p} inside (C⊗D)_h
  auto block_range = [&](int h) { return std::make_pair(std::max(c.lo(), h - d.hi()), std::min(c.hi(), h - d.lo())); };
  std::vector<std::size_t> ranks;
  std::vector<std::vector<std::size_t>> offsets;
  std::vector<std::vector<int>> degs;
  for (int h = lo; h <= hi; ++h) {
    auto [p0, p1] = block_range(h);
    std::vector<std::size_t> off;
    std::vector<int> g;
    std::size_t total = 0;
    off.assign(static_cast<std::size_t>(std::max(0, p1 - p0 + 1)), 0);
    for (int p = p1; p >= p0; --p) {
      off[static_cast<std::size_t>(p - p0)] = total;
      total += c.rank(p) * d.rank(h - p);
      auto gc = c.grading(p), gd = d.grading(h - p);
      for (int a : gc)
        for (int b : gd) g.push_back(a + b);
    }
    ranks.push_back(total);
    offsets.push_back(std::move(off));
    degs.push_back(std::move(g));
  }
  auto offset = [&](int h, int p) {
    auto [p0, p1] = block_range(h);
    (void)p1;
    return offsets[static_cast<std::size_t>(h - lo)][static_cast<std::size_t>(p - p0)];
  };
  std::vector<PolyMatrix> diffs;
  for (int h = lo + 1; h <= hi; ++h) {
    PolyMatrix m(ring, c.ambient(), ranks[static_cast<std::size_t>(h - 1 - lo)], ranks[static_cast<std::size_t>(h - lo)]);
    m.set_row_degrees(degs[static_cast<std::size_t>(h - 1 - lo)]);
    m.set_col_degrees(degs[static_cast<std::size_t>(h - lo)]);
    auto [p0, p1] = block_range(h);
    auto [q0, q1] = block_range(h - 1);
    for (int p = p0; p <= p1; ++p) {
      const int q = h - p;
      const std::size_t rc = c.rank(p), rd = d.rank(q);
      const std::size_t col0 = offset(h, p);
      // dc ⊗ e into block (p-1, q)
      if (p - 1 >= q0 && p - 1 <= q1 && c.rank(p - 1) > 0) {
        PolyMatrix dc = c.d(p);
        const std::size_t row0 = offset(h - 1, p - 1);
        for (std::size_t a = 0; a < rc; ++a)
          for (std::size_t a2 = 0; a2 < c.rank(p - 1); ++a2) {
            const Polynomial& e = dc.at(a2, a);
            if (e.is_zero()) continue;
            for (std::size_t b = 0; b < rd; ++b) m.set(row0 + a2 * rd + b, col0 + a * rd + b, e);
          }
      }
      // (-1)^p c ⊗ de into block (p, q-1)
      if (p >= q0 && p <= q1 && d.rank(q - 1) > 0) {
        PolyMatrix dd = d.d(q);
        const std::size_t rd1 = d.rank(q - 1);
        const std::size_t row0 = offset(h - 1, p);
        const Rational s = sign(p);
        for (std::size_t a = 0; a < rc; ++a)
          for (std::size_t b = 0; b < rd; ++b)
            for (std::size_t b2 = 0; b2 < rd1; ++b2) {
              const Polynomial& e = dd.at(b2, b);
              if (e.is_zero()) continue;
              m.set(row0 + a * rd1 + b2, col0 + a * rd + b, e * s);
            }
      }
    }
    diffs.push_back(std::move(m));
  }
  return Complex(ring, c.ambient(), lo, std::move(ranks), std::move(diffs));
}

namespace {

Complex dual_of(const Complex& c) {
  const int lo = -c.hi();
  std::vector<std::size_t> ranks;
  for (int h = lo; h <= -c.lo(); ++h) ranks.push_back(c.rank(-h));
  std::vector<PolyMatrix> diffs;
  for (int h = lo + 1; h <= -c.lo(); ++h) diffs.push_back(c.d(-h + 1).transpose().scaled(sign(h)));
  return Complex(c.ring(), c.ambient(), lo, std::move(ranks), std::move(diffs));
}

}  // namespace

Complex dualize(const Complex& c) {
  if (c.ambient() == Ambient::over_R && !c.ring()->is_free())
    throw Error("dualize supports complexes over the polynomial ring only");
  return dual_of(c);
}

Complex dualize_over_quotient(const Complex& c) { return dual_of(c); }

Complex shift(const Complex& c, int k) {
  std::vector<std::size_t> ranks;
  for (int h = c.lo(); h <= c.hi(); ++h) ranks.push_back(c.rank(h));
  std::vector<PolyMatrix> diffs;
  for (int h = c.lo() + 1; h <= c.hi(); ++h) diffs.push_back(k % 2 == 0 ? c.d(h) : c.d(h).scaled(Rational(-1)));
  Complex out(c.ring(), c.ambient(), c.lo() + k, std::move(ranks), std::move(diffs));
  return out;
}

Complex truncate(const Complex& c, int lo, int hi) {
  if (lo > hi) throw DimensionMismatch("truncate with lo > hi");
  int a = std::max(lo, c.lo());
  int b = std::min(hi, c.hi());
  if (a > b) return Complex(c.ring(), c.ambient(), lo, {0}, {});
  std::vector<std::size_t> ranks;
  for (int h = a; h <= b; ++h) ranks.push_back(c.rank(h));
  std::vector<PolyMatrix> diffs;
  for (int h = a + 1; h <= b; ++h) diffs.push_back(c.d(h));
  return Complex(c.ring(), c.ambient(), a, std::move(ranks), std::move(diffs));
}

Complex free_resolution(const PresentedModule& p, int length_bound) {
  const RingPtr& ring = p.ring();
  const PolyMatrix& rel = p.relations();
  std::vector<std::size_t> ranks{p.target_rank()};
  std::vector<PolyMatrix> diffs;
  if (length_bound >= 1) {
    auto cols = rel.columns();
    auto keep = minimize_generators(rel.target(), cols, rel.row_degrees());
    PolyMatrix d1 = rel.select_columns(keep);
    ranks.push_back(d1.cols());
    diffs.push_back(std::move(d1));
    for (int i = 2; i <= length_bound && diffs.back().cols() > 0; ++i) {
      PolyMatrix s = syzygies(diffs.back());
      if (s.cols() == 0) break;
      ranks.push_back(s.cols());
      diffs.push_back(std::move(s));
    }
  }
  return Complex(ring, p.ambient(), 0, std::move(ranks), std::move(diffs));
}

PresentedModule homology(const Complex& c, int h) {
  const RingPtr& ring = c.ring();
  const std::size_t n = c.rank(h);
  if (n == 0) return PresentedModule(PolyMatrix(ring, c.ambient(), 0, 0), PolyMatrix(ring, c.ambient(), 0, 0));
  PolyMatrix dh = c.d(h);
  PolyMatrix kernel;
  if (dh.rows() == 0 || dh.is_zero()) {
    kernel = PolyMatrix::identity(ring, c.ambient(), n);
    kernel.set_row_degrees(c.grading(h));
    kernel.set_col_degrees(c.grading(h));
  } else {
    kernel = syzygies(dh);
  }
  SubmoduleBasis boundaries = SubmoduleBasis::column_span(c.d(h + 1));
  auto keep = minimize_generators(c.module(h), kernel.columns(), c.grading(h), &boundaries);
  kernel = kernel.select_columns(keep);
  PolyMatrix rel = relations_modulo(boundaries, kernel.columns(), kernel.col_degrees());
  return PresentedModule(std::move(rel), std::move(kernel));
}

PolyMatrix induced_map_on_homology(const ChainMap& phi, int h, const PresentedModule& source_h,
                                   const PresentedModule& target_h) {
  const PolyMatrix& ks = source_h.lift();
  const PolyMatrix& kt = target_h.lift();
  PolyMatrix through = kt.hconcat(phi.target().d(h + 1));
  Lifter lifter(through);
  PolyMatrix image = phi.at(h) * ks;
  PolyMatrix out(phi.source().ring(), phi.source().ambient(), kt.cols(), ks.cols());
  out.set_row_degrees(kt.col_degrees());
  out.set_col_degrees(ks.col_degrees());
  for (std::size_t j = 0; j < ks.cols(); ++j) {
    auto u = lifter.lift(image.column(j));
    if (!u) throw InternalInconsistency("cycle image does not lift through the target homology");
    for (std::size_t i = 0; i < kt.cols(); ++i) out.set(i, j, (*u)[i]);
  }
  return out;
}

PolyMatrix induced_map_on_homology(const ChainMap& phi, int h) {
  return induced_map_on_homology(phi, h, homology(phi.source(), h), homology(phi.target(), h));
}

ChainMap augmentation_chain_map(const std::vector<Polynomial>& f, const Complex& c) {
  return augmentation_chain_map(koszul_complex(f, c.ring(), c.ambient()), c);
}

ChainMap augmentation_chain_map(const std::vector<Polynomial>& f, const Complex& c, int lo, int hi) {
  return augmentation_chain_map(koszul_complex(f, c.ring(), c.ambient(), hi - c.lo()), c, lo, hi);
}

ChainMap augmentation_chain_map(const Complex& p, const Complex& c) {
  return augmentation_chain_map(p, c, p.lo() + c.lo(), p.hi() + c.hi());
}

ChainMap augmentation_chain_map(const Complex& p, const Complex& full, int lo, int hi) {
  if (p.lo() != 0 || p.rank(0) != 1) throw DimensionMismatch("augmentation needs a rank-1 module in degree 0");
  if (lo > hi) throw DimensionMismatch("empty degree window");
  // Only P_0..P_{hi - lo(C)} and C_lo..C_hi reach total degrees in [lo, hi].
  Complex c = truncate(full, lo, hi);
  Complex t = tensor_complexes(truncate(p, 0, std::max(0, hi - full.lo())), full, lo, hi);
  std::vector<PolyMatrix> comps;
  for (int h = c.lo(); h <= c.hi(); ++h) {
    PolyMatrix m(c.ring(), c.ambient(), t.rank(h), c.rank(h));
    // K_0 ⊗ C_h is the last block of T_h
    const std::size_t base = t.rank(h) - c.rank(h);
    for (std::size_t i = 0; i < c.rank(h); ++i) m.set(base + i, i, c.ring()->one());
    m.set_row_degrees(t.grading(h));
    m.set_col_degrees(c.grading(h));
    comps.push_back(std::move(m));
  }
  return ChainMap(c, std::move(t), c.lo(), std::move(comps));
}

PresentedModule image_module(const PolyMatrix& phi, const PresentedModule& target) {
  if (phi.rows() != target.target_rank()) throw DimensionMismatch("map does not land in the target module");
  SubmoduleBasis rel = SubmoduleBasis::column_span(target.relations());
  PolyMatrix r = relations_modulo(rel, phi.columns(), phi.col_degrees());
  return PresentedModule(std::move(r), phi);
}

PresentedModule image_of_cycles(const Complex& c, int h, const std::vector<ModuleElement>& cycles,
                                const std::vector<int>& degrees) {
  SubmoduleBasis boundaries = SubmoduleBasis::column_span(c.d(h + 1));
  PolyMatrix gens = PolyMatrix::from_columns(c.ring(), c.ambient(), c.rank(h), cycles);
  gens.set_row_degrees(c.grading(h));
  if (degrees.size() == cycles.size()) gens.set_col_degrees(degrees);
  else gens.infer_col_degrees();
  PolyMatrix rel = relations_modulo(boundaries, cycles, gens.col_degrees());
  return PresentedModule(std::move(rel), std::move(gens));
}

}  // namespace khc

namespace khc {

bool homology_is_zero(const Complex& c, int h) {
  if (c.rank(h) == 0) return true;
  PolyMatrix dh = c.d(h);
  SubmoduleBasis boundaries = SubmoduleBasis::column_span(c.d(h + 1));
  if (dh.rows() == 0 || dh.is_zero()) return boundaries.is_everything();
  for (const auto& z : syzygies(dh, false).columns())
    if (!boundaries.contains(z)) return false;
  return true;
}

}  // namespace khc
