#include "khc/detail/gb_engine.hpp"

#include <algorithm>
#include <limits>

namespace khc::detail {

Vec canonicalize(Vec terms, const ModuleOrder& ord) {
  std::sort(terms.begin(), terms.end(), [&](const VTerm& a, const VTerm& b) { return ord.compare(a, b) > 0; });
  Vec out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

namespace {

// out = a[ia..] + scale * mono * b[ib..]
void merge_into(Vec& out, const Vec& a, std::size_t ia, const Vec& b, std::size_t ib, const Rational& scale,
                const Monomial& mono, const ModuleOrder& ord) {
  out.clear();
  out.reserve(a.size() - ia + b.size() - ib);
  while (ia < a.size() && ib < b.size()) {
    const VTerm& x = a[ia];
    const VTerm& y = b[ib];
    Monomial ym = y.mono * mono;
    int c = ord.compare(x.mono, x.comp, ym, y.comp);
    if (c > 0) {
      out.push_back(x);
      ++ia;
    } else if (c < 0) {
      out.push_back({ym, y.comp, y.coeff * scale});
      ++ib;
    } else {
      Rational s = x.coeff + y.coeff * scale;
      if (s != 0) out.push_back({ym, y.comp, std::move(s)});
      ++ia;
      ++ib;
    }
  }
  for (; ia < a.size(); ++ia) out.push_back(a[ia]);
  for (; ib < b.size(); ++ib) out.push_back({b[ib].mono * mono, b[ib].comp, b[ib].coeff * scale});
}

}  // namespace

Vec add_scaled(const Vec& a, const Vec& b, const Rational& scale, const Monomial& mono, const ModuleOrder& ord) {
  Vec out;
  if (scale == 0) return a;
  merge_into(out, a, 0, b, 0, scale, mono, ord);
  return out;
}

Vec scale(const Vec& v, const Rational& c, const Monomial& mono) {
  Vec out;
  if (c == 0) return out;
  out.reserve(v.size());
  for (const auto& t : v) out.push_back({t.mono * mono, t.comp, t.coeff * c});
  return out;
}

void make_monic(Vec& v) {
  if (v.empty() || v.front().coeff == 1) return;
  Rational inv = 1 / v.front().coeff;
  for (auto& t : v) t.coeff *= inv;
}

Vec shift_components(const Vec& v, std::int64_t offset) {
  Vec out = v;
  for (auto& t : out) t.comp = static_cast<std::uint32_t>(static_cast<std::int64_t>(t.comp) + offset);
  return out;
}

Vec restrict_components(const Vec& v, std::uint32_t lo, std::uint32_t hi) {
  Vec out;
  for (const auto& t : v)
    if (t.comp >= lo && t.comp < hi) out.push_back(t);
  return out;
}

std::uint32_t sugar_of(const Vec& v, const std::vector<std::uint32_t>& weights) {
  std::uint32_t s = 0;
  for (const auto& t : v) {
    std::uint32_t w = t.comp < weights.size() ? weights[t.comp] : 0;
    s = std::max(s, t.mono.degree() + w);
  }
  return s;
}

// ---------------------------------------------------------------------------

void ReducerIndex::reset(const std::vector<Vec>* basis) {
  basis_ = basis;
  by_comp_.clear();
  if (!basis_) return;
  for (std::size_t i = 0; i < basis_->size(); ++i) add(i);
}

void ReducerIndex::add(std::size_t index) {
  const Vec& v = (*basis_)[index];
  if (v.empty()) return;
  std::uint32_t c = v.front().comp;
  if (by_comp_.size() <= c) by_comp_.resize(c + 1);
  by_comp_[c].push_back({v.front().mono, index, v.size()});
}

long ReducerIndex::find(const Monomial& mono, std::uint32_t comp) const {
  if (comp >= by_comp_.size()) return -1;
  long best = -1;
  std::size_t best_len = std::numeric_limits<std::size_t>::max();
  for (const auto& e : by_comp_[comp]) {
    if (e.length < best_len && e.lead.divides(mono)) {
      best = static_cast<long>(e.index);
      best_len = e.length;
    }
  }
  return best;
}

Vec reduce(Vec f, const std::vector<Vec>& basis, const ReducerIndex& index, const ModuleOrder& ord,
           ReduceMode mode, std::uint32_t top_rank) {
  Vec done;
  Vec scratch;
  std::size_t pos = 0;
  while (pos < f.size()) {
    const VTerm& t = f[pos];
    if (mode != ReduceMode::full && t.comp >= top_rank) break;
    long r = index.find(t.mono, t.comp);
    if (r < 0) {
      if (mode == ReduceMode::lead) break;
      done.push_back(std::move(f[pos]));
      ++pos;
      continue;
    }
    const Vec& g = basis[static_cast<std::size_t>(r)];
    Monomial q = t.mono.quotient(g.front().mono);
    Rational c = -t.coeff / g.front().coeff;
    merge_into(scratch, f, pos + 1, g, 1, c, q, ord);
    std::swap(f, scratch);
    pos = 0;
  }
  if (done.empty()) {
    if (pos == 0) return f;
    return Vec(std::make_move_iterator(f.begin() + static_cast<std::ptrdiff_t>(pos)),
               std::make_move_iterator(f.end()));
  }
  for (std::size_t i = pos; i < f.size(); ++i) done.push_back(std::move(f[i]));
  return done;
}

// ---------------------------------------------------------------------------

namespace {

struct Pair {
  long i;  // basis index, or input index when j < 0
  long j;
  Monomial lcm;
  std::uint32_t comp;
  std::uint32_t sugar;
};

class Engine {
 public:
  Engine(const ModuleOrder& ord, const GBOptions& opts) : ord_(ord), opts_(opts) { index_.reset(&basis_); }

  GBOutput run(std::vector<Vec> closed, std::vector<Vec> gens) {
    for (auto& v : closed) {
      if (v.empty()) continue;
      make_monic(v);
      insert_element(std::move(v), /*with_pairs=*/false);
    }
    inputs_ = std::move(gens);
    for (std::size_t k = 0; k < inputs_.size(); ++k) {
      if (inputs_[k].empty()) continue;
      const VTerm& lt = inputs_[k].front();
      pairs_.push_back({static_cast<long>(k), -1, lt.mono, lt.comp, sugar_of(inputs_[k], opts_.weights)});
    }
    while (!pairs_.empty()) {
      std::size_t best = select();
      Pair p = std::move(pairs_[best]);
      pairs_[best] = std::move(pairs_.back());
      pairs_.pop_back();
      process(p);
    }
    return finish();
  }

 private:
  std::size_t select() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      int c = ord_.compare(a.lcm, a.comp, b.lcm, b.comp);
      if (c < 0 || (c == 0 && std::tie(a.j, a.i) < std::tie(b.j, b.i))) best = k;
    }
    return best;
  }

  void process(const Pair& p) {
    Vec s;
    if (p.j < 0) {
      s = std::move(inputs_[static_cast<std::size_t>(p.i)]);
    } else {
      const Vec& a = basis_[static_cast<std::size_t>(p.i)];
      const Vec& b = basis_[static_cast<std::size_t>(p.j)];
      Monomial qa = p.lcm.quotient(a.front().mono);
      Monomial qb = p.lcm.quotient(b.front().mono);
      // both monic: s = qa*a - qb*b, leading terms cancel
      Vec ta = scale(a, 1, qa);
      merge_into(s, ta, 1, b, 1, Rational(-1), qb, ord_);
    }
    s = reduce(std::move(s), basis_, index_, ord_, ReduceMode::top, opts_.top_rank);
    if (s.empty()) return;
    make_monic(s);
    if (s.front().comp >= opts_.top_rank) {
      eliminated_.push_back(std::move(s));
      return;
    }
    insert_element(std::move(s), true);
  }

  void insert_element(Vec v, bool with_pairs) {
    const std::size_t k = basis_.size();
    const Monomial lead = v.front().mono;
    const std::uint32_t comp = v.front().comp;
    const std::uint32_t sug = sugar_of(v, opts_.weights);
    basis_.push_back(std::move(v));
    sugar_.push_back(sug);
    active_.push_back(true);
    index_.add(k);
    if (!with_pairs) return;

    // Gebauer–Möller update.
    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < k; ++g) {
      if (!active_[g] || basis_[g].front().comp != comp) continue;
      const Monomial& lg = basis_[g].front().mono;
      Monomial l = lead.lcm(lg);
      std::uint32_t s =
          std::max(sug + l.degree() - lead.degree(), sugar_[g] + l.degree() - lg.degree());
      candidates.push_back({static_cast<long>(g), static_cast<long>(k), l, comp, s});
    }
    auto coprime = [&](const Pair& p) {
      return opts_.product_criterion && lead.coprime(basis_[static_cast<std::size_t>(p.i)].front().mono);
    };
    std::vector<Pair> kept;
    std::vector<bool> alive(candidates.size(), true);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      alive[a] = false;
      bool keep = coprime(candidates[a]);
      if (!keep) {
        keep = true;
        for (std::size_t b = 0; b < candidates.size() && keep; ++b)
          if (alive[b] && candidates[b].lcm.divides(candidates[a].lcm)) keep = false;
        for (const auto& q : kept)
          if (keep && q.lcm.divides(candidates[a].lcm)) keep = false;
      }
      if (keep) kept.push_back(candidates[a]);
    }
    std::vector<Pair> fresh;
    for (auto& q : kept)
      if (!coprime(q)) fresh.push_back(std::move(q));

    std::vector<Pair> retained;
    retained.reserve(pairs_.size() + fresh.size());
    for (auto& q : pairs_) {
      if (q.j >= 0 && q.comp == comp && lead.divides(q.lcm)) {
        const Monomial& li = basis_[static_cast<std::size_t>(q.i)].front().mono;
        const Monomial& lj = basis_[static_cast<std::size_t>(q.j)].front().mono;
        if (li.lcm(lead) != q.lcm && lead.lcm(lj) != q.lcm) continue;
      }
      retained.push_back(std::move(q));
    }
    for (auto& q : fresh) retained.push_back(std::move(q));
    pairs_ = std::move(retained);

    // Elements whose leading term is now divisible stop generating pairs;
    // their syzygies follow from the triangle relation through the new one.
    for (std::size_t g = 0; g < k; ++g)
      if (active_[g] && basis_[g].front().comp == comp && lead.divides(basis_[g].front().mono)) active_[g] = false;
  }

  GBOutput finish() {
    GBOutput out;
    std::vector<bool> keep(basis_.size(), false);
    for (std::size_t g = 0; g < basis_.size(); ++g) {
      if (!active_[g]) continue;
      bool redundant = false;
      const VTerm& lg = basis_[g].front();
      for (std::size_t h = 0; h < basis_.size() && !redundant; ++h) {
        if (h == g || !active_[h]) continue;
        const VTerm& lh = basis_[h].front();
        if (lh.comp != lg.comp || !lh.mono.divides(lg.mono)) continue;
        // equal leads: keep the earlier one
        if (lh.mono != lg.mono || h < g) redundant = true;
      }
      keep[g] = !redundant;
    }
    std::vector<Vec> minimal;
    for (std::size_t g = 0; g < basis_.size(); ++g)
      if (keep[g]) minimal.push_back(std::move(basis_[g]));
    if (opts_.reduce_result) {
      ReducerIndex idx(&minimal);
      std::vector<Vec> reduced;
      reduced.reserve(minimal.size());
      for (const auto& g : minimal) {
        Vec tail(g.begin() + 1, g.end());
        tail = reduce(std::move(tail), minimal, idx, ord_, ReduceMode::top, opts_.top_rank);
        Vec r;
        r.reserve(tail.size() + 1);
        r.push_back(g.front());
        for (auto& t : tail) r.push_back(std::move(t));
        reduced.push_back(std::move(r));
      }
      std::sort(reduced.begin(), reduced.end(),
                [&](const Vec& a, const Vec& b) { return ord_.compare(a.front(), b.front()) > 0; });
      out.basis = std::move(reduced);
    } else {
      out.basis = std::move(minimal);
    }
    out.eliminated = std::move(eliminated_);
    return out;
  }

  const ModuleOrder& ord_;
  const GBOptions& opts_;
  std::vector<Vec> basis_;
  std::vector<std::uint32_t> sugar_;
  std::vector<bool> active_;
  ReducerIndex index_;
  std::vector<Vec> inputs_;
  std::vector<Pair> pairs_;
  std::vector<Vec> eliminated_;
};

}  // namespace

GBOutput buchberger(const ModuleOrder& ord, const GBOptions& opts, std::vector<Vec> closed, std::vector<Vec> gens) {
  Engine engine(ord, opts);
  return engine.run(std::move(closed), std::move(gens));
}

}  // namespace khc::detail
