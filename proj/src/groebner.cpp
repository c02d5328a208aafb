#include "tf/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

#include "tf/limits.hpp"

namespace tf {

namespace {
thread_local GroebnerStats tl_work;
}

GroebnerStats& thread_work_counters() { return tl_work; }

namespace {

/// Geometric bucket accumulator for long reductions: bucket k holds at most
/// 4^(k+1) terms, so each term is merged O(log n) times.
template <class F>
class GeoBucket {
 public:
  explicit GeoBucket(const RingPtr<F>& ring) : ring_(ring.get()), field_(&ring->field()) {}

  void add(TermList<F> terms) {
    if (terms.empty()) return;
    std::size_t k = slot(terms.size());
    for (;;) {
      if (k >= buckets_.size()) buckets_.resize(k + 1);
      auto& b = buckets_[k];
      if (b.live() == 0) {
        b.terms = std::move(terms);
        b.head = 0;
        return;
      }
      terms = merge(b, terms);
      b.terms.clear();
      b.head = 0;
      std::size_t k2 = slot(terms.size());
      if (k2 <= k) {
        b.terms = std::move(terms);
        return;
      }
      k = k2;
    }
  }

  /// Leading term after combining equal heads; nullptr when empty. The
  /// returned term stays at the head of its bucket until pop().
  Term<F>* lead() {
    for (;;) {
      int best = -1;
      for (std::size_t k = 0; k < buckets_.size(); ++k) {
        if (buckets_[k].live() == 0) continue;
        if (best < 0 || ring_->compare(buckets_[k].front().monomial,
                                       buckets_[static_cast<std::size_t>(best)].front().monomial) > 0) {
          best = static_cast<int>(k);
        }
      }
      if (best < 0) return nullptr;
      auto& top = buckets_[static_cast<std::size_t>(best)];
      for (std::size_t k = 0; k < buckets_.size(); ++k) {
        if (static_cast<int>(k) == best || buckets_[k].live() == 0) continue;
        if (buckets_[k].front().monomial == top.front().monomial) {
          top.front().coefficient = field_->add(top.front().coefficient, buckets_[k].front().coefficient);
          ++buckets_[k].head;
        }
      }
      if (field_->is_zero(top.front().coefficient)) {
        ++top.head;
        continue;
      }
      lead_bucket_ = best;
      return &top.front();
    }
  }
  void pop() { ++buckets_[static_cast<std::size_t>(lead_bucket_)].head; }

 private:
  struct Bucket {
    TermList<F> terms;
    std::size_t head = 0;
    std::size_t live() const { return terms.size() - head; }
    Term<F>& front() { return terms[head]; }
  };

  static std::size_t slot(std::size_t n) {
    std::size_t k = 0;
    std::size_t cap = 4;
    while (cap < n) {
      cap <<= 2;
      ++k;
    }
    return k;
  }

  TermList<F> merge(const Bucket& a, const TermList<F>& b) const {
    TermList<F> out;
    out.reserve(a.live() + b.size());
    std::size_t i = a.head, j = 0;
    while (i < a.terms.size() && j < b.size()) {
      int c = ring_->compare(a.terms[i].monomial, b[j].monomial);
      if (c > 0) {
        out.push_back(a.terms[i++]);
      } else if (c < 0) {
        out.push_back(b[j++]);
      } else {
        auto s = field_->add(a.terms[i].coefficient, b[j].coefficient);
        if (!field_->is_zero(s)) out.push_back({a.terms[i].monomial, std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < a.terms.size(); ++i) out.push_back(a.terms[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return out;
  }

  const PolyRing<F>* ring_;
  const F* field_;
  std::vector<Bucket> buckets_;
  int lead_bucket_ = -1;
};

/// Lead monomials of a divisor list, with the prefilter data needed for fast
/// divisibility tests.
template <class F>
class DivisorIndex {
 public:
  void add(const Polynomial<F>* p, int sugar) {
    entries_.push_back({p->lead_monomial(), p, sugar});
  }
  void clear() { entries_.clear(); }
  bool empty() const { return entries_.empty(); }

  struct Entry {
    Monomial lead;
    const Polynomial<F>* poly;
    int sugar;
  };
  const Entry* find(const Monomial& m) const {
    for (const auto& e : entries_) {
      if (e.lead.degree <= m.degree && divides(e.lead, m)) return &e;
    }
    return nullptr;
  }

 private:
  std::vector<Entry> entries_;
};

/// Appends c * m * (p without its lead term) to `out`.
template <class F>
TermList<F> scaled_tail(const Polynomial<F>& p, const Monomial& m, const typename F::Element& c, const F& k) {
  TermList<F> out;
  out.reserve(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) {
    const auto& t = p.terms()[i];
    out.push_back({multiply(t.monomial, m), k.mul(t.coefficient, c)});
  }
  return out;
}

/// Full reduction of the bucket contents; `sugar` is updated with the
/// sugar of every reducer used.
template <class F>
Polynomial<F> reduce_bucket(const RingPtr<F>& ring, GeoBucket<F>& bucket, const DivisorIndex<F>& index,
                            int* sugar, GroebnerStats* stats, bool top_only = false) {
  const F& k = ring->field();
  TermList<F> result;
  long steps = 0;
  while (Term<F>* lt = bucket.lead()) {
    const auto* d = index.find(lt->monomial);
    if (!d) {
      result.push_back(*lt);
      bucket.pop();
      if (top_only) {
        while (Term<F>* rest = bucket.lead()) {
          result.push_back(*rest);
          bucket.pop();
        }
        break;
      }
      continue;
    }
    Monomial q = divide(lt->monomial, d->lead);
    auto c = k.neg(k.div(lt->coefficient, d->poly->lead_coefficient()));
    bucket.pop();
    bucket.add(scaled_tail(*d->poly, q, c, k));
    if (sugar) *sugar = std::max(*sugar, d->sugar + q.degree);
    if (++steps % 256 == 0) check_deadline();
  }
  if (stats) stats->reductions += steps;
  return Polynomial<F>::from_sorted(ring, std::move(result));
}

template <class F>
class Engine {
 public:
  /// With collect_offset >= 0, reductions whose result lives entirely in
  /// components >= collect_offset are recorded as syzygies instead of being
  /// inserted into the basis.
  Engine(RingPtr<F> ring, const GroebnerOptions& options, bool module_mode, int collect_offset = -1)
      : ring_(std::move(ring)), shifts_(options.shifts), module_mode_(module_mode), collect_(collect_offset) {}

  void add_generator(const Polynomial<F>& f) {
    int index = static_cast<int>(generators_.size());
    generators_.push_back(f);
    if (f.is_zero()) return;
    Pair p;
    p.i = -1;
    p.j = index;
    p.lcm = f.lead_monomial();
    p.sugar = shifted_degree(f, shifts_);
    pairs_.push_back(p);
  }

  /// Processes pairs in sugar order while sugar <= bound (bound < 0: all).
  void run(int bound) {
    for (;;) {
      int s = next_sugar();
      if (s == kNone || (bound >= 0 && s > bound)) return;
      check_degree(s);
      check_deadline();
      std::vector<Pair> batch;
      std::vector<Pair> rest;
      for (auto& p : pairs_) {
        if (p.dead) continue;
        (p.sugar == s ? batch : rest).push_back(p);
      }
      pairs_ = std::move(rest);
      std::sort(batch.begin(), batch.end(), [&](const Pair& a, const Pair& b) {
        bool ga = a.i < 0, gb = b.i < 0;
        if (ga != gb) return gb;  // real pairs before queued generators
        int c = ring_->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
      });
      batch_ = std::move(batch);
      for (std::size_t b = 0; b < batch_.size(); ++b) {
        if (batch_[b].dead) continue;
        process(batch_[b]);
      }
      batch_.clear();
    }
  }

  static constexpr int kNone = 1 << 30;
  int next_sugar() const {
    int s = kNone;
    for (const auto& p : pairs_) {
      if (!p.dead) s = std::min(s, p.sugar);
    }
    return s;
  }

  /// Reduced basis of everything processed so far.
  std::vector<Polynomial<F>> reduced_basis() {
    std::vector<int> keep;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (!elements_[i].redundant) keep.push_back(static_cast<int>(i));
    }
    DivisorIndex<F> index;
    for (int i : keep) index.add(&elements_[static_cast<std::size_t>(i)].poly, 0);
    std::vector<Polynomial<F>> out;
    const F& k = ring_->field();
    for (int i : keep) {
      const auto& g = elements_[static_cast<std::size_t>(i)].poly;
      GeoBucket<F> bucket(ring_);
      TermList<F> tail(g.terms().begin() + 1, g.terms().end());
      bucket.add(std::move(tail));
      auto reduced_tail = reduce_bucket(ring_, bucket, index, nullptr, &stats_);
      TermList<F> terms;
      terms.reserve(reduced_tail.size() + 1);
      terms.push_back(g.terms().front());
      for (const auto& t : reduced_tail.terms()) terms.push_back(t);
      auto p = Polynomial<F>::from_sorted(ring_, std::move(terms));
      if (!k.is_one(p.lead_coefficient())) p = p.monic();
      out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
      return ring_->compare(a.lead_monomial(), b.lead_monomial()) < 0;
    });
    return out;
  }

  /// Generators that were not reducible by earlier data (Nakayama mode).
  const GroebnerStats& stats() const { return stats_; }
  ~Engine() { tl_work += stats_; }
  const std::vector<Polynomial<F>>& collected() const { return collected_; }

 private:
  struct Pair {
    int i = -1;  // -1: queued generator j
    int j = -1;
    Monomial lcm;
    int sugar = 0;
    bool dead = false;
  };
  struct Element {
    Polynomial<F> poly;
    int sugar;
    bool redundant = false;
  };

  void process(const Pair& p) {
    ++stats_.pairs;
    GeoBucket<F> bucket(ring_);
    int sugar = p.sugar;
    const F& k = ring_->field();
    if (p.i < 0) {
      const auto& g = generators_[static_cast<std::size_t>(p.j)];
      bucket.add(g.terms());
    } else {
      const auto& a = elements_[static_cast<std::size_t>(p.i)].poly;
      const auto& b = elements_[static_cast<std::size_t>(p.j)].poly;
      bucket.add(scaled_tail(a, divide(p.lcm, a.lead_monomial()), k.one(), k));
      bucket.add(scaled_tail(b, divide(p.lcm, b.lead_monomial()), k.neg(k.one()), k));
    }
    auto h = reduce_bucket(ring_, bucket, index_, &sugar, &stats_);
    if (h.is_zero()) {
      ++stats_.zero_reductions;
      return;
    }
    if (collect_ >= 0 && h.lead_monomial().component >= collect_) {
      ++stats_.zero_reductions;
      collected_.push_back(std::move(h));
      return;
    }
    insert(h.monic(), std::max(sugar, p.sugar));
  }

  void insert(Polynomial<F> h, int sugar) {
    const int k = static_cast<int>(elements_.size());
    const Monomial& lh = h.lead_monomial();
    // New pairs (i, k), filtered by the chain criterion among themselves.
    struct Candidate {
      int i;
      Monomial lcm;
      bool coprime;
      bool alive = true;
    };
    std::vector<Candidate> cands;
    for (int i = 0; i < k; ++i) {
      const auto& e = elements_[static_cast<std::size_t>(i)];
      if (e.redundant) continue;
      const Monomial& li = e.poly.lead_monomial();
      if (li.component != lh.component) continue;
      cands.push_back({i, ring_->lcm(li, lh), !module_mode_ && coprime(li, lh)});
    }
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].coprime) continue;
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (a == b || !cands[b].alive) continue;
        if (divides(cands[b].lcm, cands[a].lcm)) {
          // Equal lcms: keep only the first surviving one.
          if (cands[b].lcm == cands[a].lcm && b > a && !cands[b].coprime) continue;
          cands[a].alive = false;
          ++stats_.chain_skipped;
          break;
        }
      }
    }
    // Old pairs made redundant by the new lead.
    auto prune = [&](std::vector<Pair>& list) {
      for (auto& p : list) {
        if (p.dead || p.i < 0) continue;
        if (p.lcm.component != lh.component || !divides(lh, p.lcm)) continue;
        const Monomial& la = elements_[static_cast<std::size_t>(p.i)].poly.lead_monomial();
        const Monomial& lb = elements_[static_cast<std::size_t>(p.j)].poly.lead_monomial();
        if (ring_->lcm(la, lh) == p.lcm || ring_->lcm(lb, lh) == p.lcm) continue;
        p.dead = true;
        ++stats_.chain_skipped;
      }
    };
    prune(pairs_);
    prune(batch_);
    for (const auto& c : cands) {
      if (!c.alive) continue;
      if (c.coprime) {
        ++stats_.product_skipped;
        continue;
      }
      const auto& gi = elements_[static_cast<std::size_t>(c.i)];
      Pair p;
      p.i = c.i;
      p.j = k;
      p.lcm = c.lcm;
      p.sugar = std::max(gi.sugar + c.lcm.degree - gi.poly.lead_monomial().degree, sugar + c.lcm.degree - lh.degree);
      pairs_.push_back(p);
    }
    for (int i = 0; i < k; ++i) {
      auto& e = elements_[static_cast<std::size_t>(i)];
      if (!e.redundant && divides(lh, e.poly.lead_monomial())) e.redundant = true;
    }
    elements_.push_back({std::move(h), sugar, false});
    rebuild_index();
  }

  void rebuild_index() {
    index_.clear();
    for (const auto& e : elements_) {
      if (!e.redundant) index_.add(&e.poly, e.sugar);
    }
  }

  RingPtr<F> ring_;
  std::vector<int> shifts_;
  bool module_mode_;
  std::vector<Polynomial<F>> generators_;
  std::vector<Element> elements_;
  std::vector<Pair> pairs_;
  std::vector<Pair> batch_;
  DivisorIndex<F> index_;
  GroebnerStats stats_;
  int collect_ = -1;
  std::vector<Polynomial<F>> collected_;
};

template <class F>
bool any_vector(const std::vector<Polynomial<F>>& gens) {
  for (const auto& g : gens) {
    for (const auto& t : g.terms()) {
      if (t.monomial.component != 0) return true;
    }
  }
  return false;
}

/// Vectors v_j + e_{offset + j}: the extra block records how each element
/// is built from the inputs.
template <class F>
std::vector<Polynomial<F>> augment(const std::vector<Polynomial<F>>& gens, int offset) {
  std::vector<Polynomial<F>> out;
  out.reserve(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const auto& ring = gens[j].ring();
    auto e = Polynomial<F>::term(ring, ring->one(offset + static_cast<int>(j)), ring->field().one());
    out.push_back(gens[j] + e);
  }
  return out;
}

/// Terms in components >= offset, moved down by offset.
template <class F>
Polynomial<F> lower_block(const Polynomial<F>& v, int offset) {
  TermList<F> out;
  for (const auto& t : v.terms()) {
    if (t.monomial.component < offset) continue;
    Term<F> s = t;
    s.monomial.component = static_cast<std::uint16_t>(t.monomial.component - offset);
    out.push_back(std::move(s));
  }
  return Polynomial<F>::from_sorted(v.ring(), std::move(out));
}

template <class F>
std::vector<int> augmented_shifts(const std::vector<Polynomial<F>>& gens, int offset, std::span<const int> shifts) {
  std::vector<int> out(static_cast<std::size_t>(offset) + gens.size(), 0);
  for (std::size_t i = 0; i < shifts.size() && i < static_cast<std::size_t>(offset); ++i) out[i] = shifts[i];
  for (std::size_t j = 0; j < gens.size(); ++j) {
    out[static_cast<std::size_t>(offset) + j] = gens[j].is_zero() ? 0 : shifted_degree(gens[j], shifts);
  }
  return out;
}

}  // namespace

template <class F>
GroebnerBasis<F>::GroebnerBasis(RingPtr<F> ring, std::vector<Polynomial<F>> elements, GroebnerStats stats,
                                std::vector<int> shifts, int truncated_at)
    : ring_(std::move(ring)), elements_(std::move(elements)), stats_(stats), shifts_(std::move(shifts)),
      truncated_at_(truncated_at) {}

template <class F>
bool GroebnerBasis<F>::is_unit() const {
  return std::any_of(elements_.begin(), elements_.end(), [](const auto& g) { return g.is_unit(); });
}

template <class F>
std::vector<Monomial> GroebnerBasis<F>::lead_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.lead_monomial());
  return out;
}

template <class F>
Polynomial<F> GroebnerBasis<F>::normal_form(const Polynomial<F>& f) const {
  if (f.is_zero()) return f;
  check_same_ring(*ring_, *f.ring());
  return reduce(f, elements_);
}

template <class F>
Polynomial<F> reduce(const Polynomial<F>& f, const std::vector<Polynomial<F>>& divisors) {
  if (f.is_zero()) return f;
  DivisorIndex<F> index;
  for (const auto& d : divisors) {
    if (d.is_zero()) continue;
    check_same_ring(*f.ring(), *d.ring());
    index.add(&d, 0);
  }
  GeoBucket<F> bucket(f.ring());
  bucket.add(f.terms());
  return reduce_bucket(f.ring(), bucket, index, nullptr, nullptr);
}

template <class F>
GroebnerBasis<F> buchberger(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens,
                            const GroebnerOptions& options) {
  for (const auto& g : gens) {
    if (g.ring()) check_same_ring(*ring, *g.ring());
  }
  bool module_mode = options.module_mode || any_vector(gens);
  Engine<F> engine(ring, options, module_mode);
  for (const auto& g : gens) engine.add_generator(g);
  engine.run(options.degree_bound);
  int truncated = -1;
  if (options.degree_bound >= 0 && engine.next_sugar() != Engine<F>::kNone) truncated = options.degree_bound;
  GroebnerBasis<F> gb(ring, engine.reduced_basis(), engine.stats(), options.shifts, truncated);
  if (options.track_cofactors) {
    std::vector<std::vector<Polynomial<F>>> cof;
    for (const auto& g : gb.elements()) {
      auto c = lift(ring, gens, g);
      if (!c) throw Error("internal error: basis element not in the generated ideal");
      cof.push_back(std::move(*c));
    }
    gb.set_cofactors(std::move(cof));
  }
  return gb;
}

template <class F>
GroebnerBasis<F> module_buchberger(const PolyMatrix<F>& m, const GroebnerOptions& options) {
  GroebnerOptions o = options;
  o.module_mode = true;
  return buchberger(m.ring(), m.columns(), o);
}

template <class F>
std::optional<std::vector<Polynomial<F>>> lift(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens,
                                               const Polynomial<F>& f) {
  int offset = 0;
  for (const auto& g : gens) offset = std::max(offset, g.rank());
  offset = std::max({offset, f.rank(), 1});
  GroebnerOptions o;
  o.module_mode = true;
  o.shifts = augmented_shifts(gens, offset, {});
  auto aug = augment(gens, offset);
  Engine<F> engine(ring, o, true);
  for (const auto& g : aug) engine.add_generator(g);
  engine.run(-1);
  auto basis = engine.reduced_basis();
  auto r = reduce(f, basis);
  for (const auto& t : r.terms()) {
    if (t.monomial.component < offset) return std::nullopt;
  }
  auto c = -lower_block(r, offset);
  std::vector<Polynomial<F>> out;
  for (std::size_t j = 0; j < gens.size(); ++j) out.push_back(c.component(static_cast<int>(j)));
  return out;
}

template <class F>
PolyMatrix<F> syzygies(const PolyMatrix<F>& m, std::span<const int> row_shifts, bool minimal, GroebnerStats* stats) {
  const auto& ring = m.ring();
  const int r = m.rows();
  auto cols = m.columns();
  auto shifts = augmented_shifts(cols, r, row_shifts);
  GroebnerOptions o;
  o.module_mode = true;
  o.shifts = shifts;
  // Every pair that reduces to zero in the upper block yields a syzygy, and
  // with only Buchberger's criteria discarding pairs these generate the
  // kernel; the kernel itself is never put into the basis.
  Engine<F> engine(ring, o, true, r);
  for (const auto& g : augment(cols, r)) engine.add_generator(g);
  engine.run(-1);
  if (stats) *stats += engine.stats();
  std::vector<Polynomial<F>> syz;
  for (const auto& g : engine.collected()) syz.push_back(lower_block(g, r));
  std::vector<int> col_shifts(shifts.begin() + r, shifts.end());
  if (minimal && !syz.empty()) {
    auto keep = minimal_generator_indices(ring, syz, col_shifts, stats);
    std::vector<Polynomial<F>> pruned;
    for (int i : keep) pruned.push_back(syz[static_cast<std::size_t>(i)]);
    syz = std::move(pruned);
  }
  return PolyMatrix<F>::from_columns(ring, m.cols(), syz);
}

template <class F>
std::vector<int> minimal_generator_indices(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens,
                                           std::span<const int> shifts, GroebnerStats* stats) {
  for (const auto& g : gens) {
    if (!g.is_homogeneous(shifts)) throw NotGraded("minimal generators need homogeneous input");
  }
  GroebnerOptions o;
  o.shifts.assign(shifts.begin(), shifts.end());
  o.module_mode = any_vector(gens);
  const F& k = ring->field();
  std::vector<int> deg(gens.size());
  std::set<int> levels;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    deg[i] = gens[i].is_zero() ? -1 : shifted_degree(gens[i], shifts);
    if (deg[i] >= 0) levels.insert(deg[i]);
  }
  // Degree by degree: a generator is kept unless it lies in the span of the
  // lower-degree part plus the earlier kept generators of its own degree.
  std::vector<int> out;
  std::vector<Polynomial<F>> below;
  for (int d : levels) {
    std::optional<GroebnerBasis<F>> gb;
    if (!below.empty()) {
      o.degree_bound = d;
      gb = buchberger(ring, below, o);
      if (stats) *stats += gb->stats();
    }
    std::vector<Polynomial<F>> echelon;  // distinct lead monomials
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (deg[i] != d) continue;
      auto h = gb ? gb->normal_form(gens[i]) : gens[i];
      for (bool moved = true; moved && !h.is_zero();) {
        moved = false;
        for (const auto& e : echelon) {
          if (e.lead_monomial() == h.lead_monomial()) {
            h -= e.scaled(k.div(h.lead_coefficient(), e.lead_coefficient()));
            moved = true;
            break;
          }
        }
      }
      if (h.is_zero()) continue;
      echelon.push_back(std::move(h));
      out.push_back(static_cast<int>(i));
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (deg[i] == d) below.push_back(gens[i]);
    }
  }
  return out;
}

#define TF_INSTANTIATE_GROEBNER(F)                                                                            \
  template class GroebnerBasis<F>;                                                                            \
  template GroebnerBasis<F> buchberger(const RingPtr<F>&, const std::vector<Polynomial<F>>&,                  \
                                       const GroebnerOptions&);                                               \
  template GroebnerBasis<F> module_buchberger(const PolyMatrix<F>&, const GroebnerOptions&);                  \
  template Polynomial<F> reduce(const Polynomial<F>&, const std::vector<Polynomial<F>>&);                     \
  template std::optional<std::vector<Polynomial<F>>> lift(const RingPtr<F>&, const std::vector<Polynomial<F>>&, \
                                                          const Polynomial<F>&);                              \
  template PolyMatrix<F> syzygies(const PolyMatrix<F>&, std::span<const int>, bool, GroebnerStats*);          \
  template std::vector<int> minimal_generator_indices(const RingPtr<F>&, const std::vector<Polynomial<F>>&,   \
                                                      std::span<const int>, GroebnerStats*);

TF_INSTANTIATE_GROEBNER(PrimeField)
TF_INSTANTIATE_GROEBNER(RationalField)

}  // namespace tf
