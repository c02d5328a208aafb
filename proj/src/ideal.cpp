#include "tf/ideal.hpp"

#include <algorithm>
#include <numeric>

#include "gbcache.hpp"
#include "tf/limits.hpp"
#include "tf/linalg.hpp"

namespace tf {

namespace {

template <class F>
std::vector<Polynomial<F>> nonzero(std::vector<Polynomial<F>> gens) {
  gens.erase(std::remove_if(gens.begin(), gens.end(), [](const auto& g) { return g.is_zero(); }), gens.end());
  return gens;
}

/// Ring with the given variables moved to the front and an elimination
/// order on them; `map` sends old indices to new ones.
template <class F>
RingPtr<F> elimination_ring(const RingPtr<F>& ring, const std::vector<int>& eliminate, std::vector<int>& map) {
  const int n = ring->nvars();
  std::vector<bool> gone(static_cast<std::size_t>(n), false);
  for (int v : eliminate) gone[static_cast<std::size_t>(v)] = true;
  std::vector<int> order;
  for (int v = 0; v < n; ++v) {
    if (gone[static_cast<std::size_t>(v)]) order.push_back(v);
  }
  for (int v = 0; v < n; ++v) {
    if (!gone[static_cast<std::size_t>(v)]) order.push_back(v);
  }
  std::vector<std::string> names;
  std::vector<int> weights;
  map.assign(static_cast<std::size_t>(n), 0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    names.push_back(ring->name(order[k]));
    weights.push_back(ring->weight(order[k]));
    map[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
  }
  return PolyRing<F>::make(ring->field(), names, weights,
                           MonomialOrder::elimination(static_cast<int>(eliminate.size())));
}

template <class F>
std::vector<int> inverse(const std::vector<int>& map) {
  std::vector<int> inv(map.size());
  for (std::size_t i = 0; i < map.size(); ++i) inv[static_cast<std::size_t>(map[i])] = static_cast<int>(i);
  return inv;
}

/// Data for colon ideals of a homogeneous I by a homogeneous g: a reduced
/// basis of I + (u - g) in R[u] under a reverse-lexicographic order with u
/// last, and the power of u dividing each element.
template <class F>
struct ColonData {
  RingPtr<F> ext;
  std::vector<Polynomial<F>> elements;
  std::vector<int> u_power;
  int max_power() const {
    int m = 0;
    for (int e : u_power) m = std::max(m, e);
    return m;
  }
};

template <class F>
ColonData<F> colon_data(const Ideal<F>& ideal, const Polynomial<F>& g) {
  const auto& ring = ideal.ring();
  const int n = ring->nvars();
  int dg = g.degree();
  auto weights = ring->weights();
  weights.push_back(dg);
  auto names = ring->names();
  names.push_back(ring->fresh_name("u"));
  bool unit = std::all_of(weights.begin(), weights.end(), [](int w) { return w == 1; });
  auto ext = PolyRing<F>::make(ring->field(), names, weights,
                               unit ? MonomialOrder::degrevlex() : MonomialOrder::weighted_degrevlex());
  std::vector<Polynomial<F>> gens;
  for (const auto& f : ideal.generators()) gens.push_back(f.embed_prefix(ext));
  gens.push_back(Polynomial<F>::variable(ext, n) - g.embed_prefix(ext));
  Ideal<F> k(ext, gens);
  ColonData<F> data;
  data.ext = ext;
  data.elements = k.basis();
  for (const auto& e : data.elements) data.u_power.push_back(e.lead_monomial()[n]);
  return data;
}

/// Generators of (I : g^k) read off the colon data (k < 0 means infinity).
template <class F>
Ideal<F> colon_from_data(const ColonData<F>& data, const Ideal<F>& ideal, const Polynomial<F>& g, int k) {
  const auto& ring = ideal.ring();
  const int n = ring->nvars();
  std::vector<Polynomial<F>> images;
  for (int i = 0; i < n; ++i) images.push_back(Polynomial<F>::variable(ring, i));
  images.push_back(g);
  std::vector<Polynomial<F>> out;
  for (std::size_t i = 0; i < data.elements.size(); ++i) {
    int drop = k < 0 ? data.u_power[i] : std::min(k, data.u_power[i]);
    Polynomial<F> e = data.elements[i];
    if (drop > 0) {
      Monomial m = data.ext->variable(n, drop);
      TermList<F> terms;
      for (const auto& t : e.terms()) terms.push_back({divide(t.monomial, m), t.coefficient});
      e = Polynomial<F>::from_sorted(data.ext, std::move(terms));
    }
    auto h = e.substitute(ring, images);
    if (!h.is_zero()) out.push_back(std::move(h));
  }
  return Ideal<F>(ring, std::move(out));
}

template <class F>
bool graded_pair(const Ideal<F>& ideal, const Polynomial<F>& g) {
  if (!g.is_homogeneous() || g.is_zero()) return false;
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const auto& f) { return f.is_homogeneous(); });
}

/// Monomials of weighted degree d in the ring (component 0).
template <class F>
void monomials_of_degree(const PolyRing<F>& ring, int d, int var, Monomial& cur, std::vector<Monomial>& out) {
  if (var == ring.nvars()) {
    if (d == 0) {
      Monomial m = cur;
      ring.finish(m);
      out.push_back(m);
    }
    return;
  }
  int w = ring.weight(var);
  for (int e = 0; e * w <= d; ++e) {
    cur.exponents[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(e);
    monomials_of_degree(ring, d - e * w, var + 1, cur, out);
  }
  cur.exponents[static_cast<std::size_t>(var)] = 0;
}

}  // namespace

template <class F>
Ideal<F>::Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> generators)
    : ring_(std::move(ring)), gens_(nonzero(std::move(generators))) {
  for (const auto& g : gens_) {
    check_same_ring(*ring_, *g.ring());
    if (g.rank() > 1 || g.lead_monomial().component != 0) throw Error("ideal generators must be ring elements");
  }
}

template <class F>
Ideal<F> Ideal<F>::unit(RingPtr<F> ring) {
  auto one = Polynomial<F>::from_int(ring, 1);
  return Ideal(std::move(ring), {one});
}

template <class F>
Ideal<F> Ideal<F>::variables(RingPtr<F> ring, std::vector<int> which) {
  if (which.empty()) {
    which.resize(static_cast<std::size_t>(ring->nvars()));
    std::iota(which.begin(), which.end(), 0);
  }
  std::vector<Polynomial<F>> gens;
  for (int v : which) gens.push_back(Polynomial<F>::variable(ring, v));
  return Ideal(std::move(ring), std::move(gens));
}

template <class F>
const GroebnerBasis<F>& Ideal<F>::gb() const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->gb) {
    bool use_cache = gb_cache_enabled();
    std::string key;
    if (use_cache) {
      key = detail::gb_cache_key(ring_, gens_);
      cache_->gb = detail::gb_cache_lookup(ring_, key);
      // A hit still counts the recorded work, so reports do not depend on
      // the cache state.
      if (cache_->gb) thread_work_counters() += cache_->gb->stats();
    }
    if (!cache_->gb) {
      cache_->gb = buchberger(ring_, gens_);
      if (use_cache) detail::gb_cache_store(key, *cache_->gb);
    }
  }
  return *cache_->gb;
}

template <class F>
bool Ideal<F>::is_homogeneous() const {
  const auto& b = basis();
  return std::all_of(b.begin(), b.end(), [](const auto& g) { return g.is_homogeneous(); });
}

template <class F>
bool Ideal<F>::contains(const Polynomial<F>& f) const {
  if (f.is_zero()) return true;
  check_same_ring(*ring_, *f.ring());
  return gb().contains(f);
}

template <class F>
bool Ideal<F>::contains(const Ideal& o) const {
  return std::all_of(o.gens_.begin(), o.gens_.end(), [&](const auto& g) { return contains(g); });
}

template <class F>
bool Ideal<F>::operator==(const Ideal& o) const {
  check_same_ring(*ring_, *o.ring_);
  return basis() == o.basis();
}

template <class F>
Ideal<F> Ideal<F>::operator+(const Ideal& o) const {
  check_same_ring(*ring_, *o.ring_);
  auto g = gens_;
  g.insert(g.end(), o.gens_.begin(), o.gens_.end());
  return Ideal(ring_, std::move(g));
}

template <class F>
Ideal<F> Ideal<F>::operator*(const Ideal& o) const {
  check_same_ring(*ring_, *o.ring_);
  std::vector<Polynomial<F>> g;
  for (const auto& a : gens_)
    for (const auto& b : o.gens_) g.push_back(a * b);
  return Ideal(ring_, std::move(g));
}

template <class F>
Ideal<F> Ideal<F>::intersect(const Ideal& o) const {
  check_same_ring(*ring_, *o.ring_);
  if (gens_.empty() || o.gens_.empty()) return zero(ring_);
  const int n = ring_->nvars();
  std::vector<std::string> names{ring_->fresh_name("t")};
  auto ext = ring_->prepended(names, {1}, MonomialOrder::elimination(1));
  auto t = Polynomial<F>::variable(ext, 0);
  auto one_minus_t = Polynomial<F>::from_int(ext, 1) - t;
  std::vector<Polynomial<F>> g;
  for (const auto& a : gens_) g.push_back(t * a.embed_prefix(ext, 1));
  for (const auto& b : o.gens_) g.push_back(one_minus_t * b.embed_prefix(ext, 1));
  Ideal k(ext, g);
  std::vector<int> back(static_cast<std::size_t>(n) + 1);
  back[0] = 0;
  for (int i = 0; i < n; ++i) back[static_cast<std::size_t>(i) + 1] = i;
  std::vector<Polynomial<F>> out;
  for (const auto& e : k.basis()) {
    if (e.degree_in(0) > 0) continue;
    out.push_back(e.embed(ring_, back));
  }
  return Ideal(ring_, std::move(out));
}

template <class F>
Polynomial<F> exact_quotient(const Polynomial<F>& h, const Polynomial<F>& g) {
  if (g.is_zero()) throw Error("division by zero polynomial");
  const auto& ring = h.ring();
  const F& k = ring->field();
  Polynomial<F> rest = h;
  TermList<F> q;
  while (!rest.is_zero()) {
    if (!divides(g.lead_monomial(), rest.lead_monomial())) throw Error("polynomial division is not exact");
    Monomial m = divide(rest.lead_monomial(), g.lead_monomial());
    auto c = k.div(rest.lead_coefficient(), g.lead_coefficient());
    q.push_back({m, c});
    rest -= g.times_term(m, c);
  }
  return Polynomial<F>(ring, std::move(q));
}

template <class F>
Ideal<F> Ideal<F>::quotient(const Polynomial<F>& g) const {
  if (g.is_zero()) throw Error("quotient by the zero polynomial");
  check_same_ring(*ring_, *g.ring());
  if (gens_.empty()) return *this;
  if (graded_pair(*this, g)) {
    auto data = colon_data(*this, g);
    return colon_from_data(data, *this, g, 1);
  }
  auto both = intersect(Ideal(ring_, {g}));
  std::vector<Polynomial<F>> out;
  for (const auto& h : both.basis()) out.push_back(exact_quotient(h, g));
  return Ideal(ring_, std::move(out));
}

template <class F>
Ideal<F> Ideal<F>::quotient(const Ideal& j) const {
  std::optional<Ideal> acc;
  for (const auto& g : j.gens_) {
    auto q = quotient(g);
    acc = acc ? acc->intersect(q) : q;
  }
  return acc ? *acc : unit(ring_);
}

template <class F>
SaturationResult<F> Ideal<F>::saturate(const Polynomial<F>& g, SaturationMethod method) const {
  if (g.is_zero()) throw Error("saturation by the zero polynomial");
  check_same_ring(*ring_, *g.ring());
  if (method == SaturationMethod::ExtraVariable) {
    std::vector<std::string> names{ring_->fresh_name("z")};
    auto ext = ring_->prepended(names, {1}, MonomialOrder::elimination(1));
    std::vector<Polynomial<F>> gens;
    for (const auto& f : gens_) gens.push_back(f.embed_prefix(ext, 1));
    gens.push_back(Polynomial<F>::from_int(ext, 1) - Polynomial<F>::variable(ext, 0) * g.embed_prefix(ext, 1));
    Ideal k(ext, gens);
    std::vector<int> back(static_cast<std::size_t>(ring_->nvars()) + 1);
    for (int i = 0; i < ring_->nvars(); ++i) back[static_cast<std::size_t>(i) + 1] = i;
    std::vector<Polynomial<F>> out;
    for (const auto& e : k.basis()) {
      if (e.degree_in(0) <= 0) out.push_back(e.embed(ring_, back));
    }
    Ideal sat(ring_, std::move(out));
    // Smallest k with g^k sat inside I.
    int steps = 0;
    Polynomial<F> power = Polynomial<F>::from_int(ring_, 1);
    while (!std::all_of(sat.gens_.begin(), sat.gens_.end(), [&](const auto& h) { return contains(power * h); })) {
      power *= g;
      ++steps;
      check_deadline();
    }
    return {sat, steps};
  }
  if (gens_.empty()) return {*this, 0};
  if (graded_pair(*this, g)) {
    auto data = colon_data(*this, g);
    int steps = data.max_power();
    if (steps == 0) return {*this, 0};
    return {colon_from_data(data, *this, g, -1), steps};
  }
  Ideal cur = *this;
  int steps = 0;
  for (;;) {
    Ideal next = cur.quotient(g);
    if (next == cur) return {cur, steps};
    cur = next;
    ++steps;
    check_deadline();
  }
}

template <class F>
Ideal<F> Ideal<F>::eliminate(const std::vector<int>& keep) const {
  const int n = ring_->nvars();
  std::vector<bool> kept(static_cast<std::size_t>(n), false);
  for (int v : keep) kept[static_cast<std::size_t>(v)] = true;
  std::vector<int> gone;
  for (int v = 0; v < n; ++v) {
    if (!kept[static_cast<std::size_t>(v)]) gone.push_back(v);
  }
  if (gone.empty()) return Ideal(ring_, basis());
  std::vector<int> map;
  auto ext = elimination_ring(ring_, gone, map);
  Ideal k = embed(ext, map);
  auto back = inverse<F>(map);
  std::vector<Polynomial<F>> out;
  for (const auto& e : k.basis()) {
    bool free = true;
    for (std::size_t b = 0; b < gone.size() && free; ++b) free = e.degree_in(static_cast<int>(b)) <= 0;
    if (free) out.push_back(e.embed(ring_, back));
  }
  return Ideal(ring_, std::move(out));
}

template <class F>
int Ideal<F>::dim() const {
  auto leads = gb().lead_monomials();
  return monomial_dimension(leads, ring_->nvars());
}

template <class F>
int Ideal<F>::height() const {
  int d = dim();
  return d < 0 ? kInfiniteHeight : ring_->nvars() - d;
}

template <class F>
HilbertSeries Ideal<F>::hilbert_series() const {
  if (!is_homogeneous()) throw NotGraded("Hilbert series needs a homogeneous ideal");
  auto leads = gb().lead_monomials();
  return tf::hilbert_series(leads, ring_->weights());
}

template <class F>
bool Ideal<F>::radical_contains(const Polynomial<F>& f) const {
  check_same_ring(*ring_, *f.ring());
  if (f.is_zero()) return true;
  auto ext = ring_->extended({ring_->fresh_name("z")}, {1}, MonomialOrder::degrevlex());
  std::vector<Polynomial<F>> gens;
  for (const auto& g : gens_) gens.push_back(g.embed_prefix(ext));
  gens.push_back(Polynomial<F>::from_int(ext, 1) -
                 Polynomial<F>::variable(ext, ring_->nvars()) * f.embed_prefix(ext));
  return Ideal(ext, gens).is_unit();
}

template <class F>
bool Ideal<F>::is_nonzerodivisor(const Polynomial<F>& g) const {
  check_same_ring(*ring_, *g.ring());
  if (contains(g)) return false;
  if (gens_.empty()) return true;
  if (graded_pair(*this, g)) return colon_data(*this, g).max_power() == 0;
  return quotient(g) == *this;
}

template <class F>
long long Ideal<F>::degree_part_dim(int d) const {
  for (const auto& g : gens_) {
    if (!g.is_homogeneous()) throw NotGraded("graded pieces need a homogeneous ideal");
  }
  if (d < 0) return 0;
  std::vector<Monomial> leads;
  {
    std::lock_guard lock(cache_->mutex);
    if (cache_->gb) leads = cache_->gb->lead_monomials();
  }
  if (leads.empty() && !gens_.empty()) {
    GroebnerOptions o;
    o.degree_bound = d;
    leads = buchberger(ring_, gens_, o).lead_monomials();
  }
  long long all = standard_monomial_count({}, ring_->weights(), d);
  return all - standard_monomial_count(leads, ring_->weights(), d);
}

template <class F>
int Ideal<F>::order() const {
  if (gens_.empty()) throw Error("order of the zero ideal is undefined");
  if (is_unit()) throw Error("order of the unit ideal is undefined");
  int best = INT_MAX;
  for (const auto& g : gens_) {
    for (const auto& t : g.terms()) best = std::min(best, t.monomial.total_degree());
  }
  return best;
}

template <class F>
Ideal<F> Ideal<F>::embed(const RingPtr<F>& target, std::span<const int> var_map) const {
  std::vector<Polynomial<F>> g;
  for (const auto& f : gens_) g.push_back(f.embed(target, var_map));
  return Ideal(target, std::move(g));
}

template <class F>
Ideal<F> Ideal<F>::with_ring(const RingPtr<F>& target) const {
  if (target->nvars() != ring_->nvars()) throw RingMismatch();
  std::vector<int> id(static_cast<std::size_t>(ring_->nvars()));
  std::iota(id.begin(), id.end(), 0);
  return embed(target, id);
}

template <class F>
std::string Ideal<F>::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

template <class F>
int height_in_quotient(const Ideal<F>& k, const Ideal<F>& i) {
  int da = i.dim();
  if (da < 0) throw Error("height in the zero ring is undefined");
  Ideal<F> sum = k + i;
  if (sum.is_unit()) return kInfiniteHeight;
  return da - sum.dim();
}

template <class F>
std::vector<Polynomial<F>> degree_part_basis(const Ideal<F>& ideal, int d) {
  const auto& ring = ideal.ring();
  for (const auto& g : ideal.generators()) {
    if (!g.is_homogeneous()) throw NotGraded("graded pieces need a homogeneous ideal");
  }
  std::vector<Polynomial<F>> products;
  for (const auto& g : ideal.generators()) {
    int e = d - g.degree();
    if (e < 0) continue;
    std::vector<Monomial> mons;
    Monomial cur;
    monomials_of_degree(*ring, e, 0, cur, mons);
    for (const auto& m : mons) products.push_back(g.times_term(m, ring->field().one()));
  }
  if (products.empty()) return {};
  std::vector<Monomial> target;
  Monomial cur;
  monomials_of_degree(*ring, d, 0, cur, target);
  std::sort(target.begin(), target.end(), [&](const Monomial& a, const Monomial& b) { return ring->compare(a, b) > 0; });
  const F& k = ring->field();
  std::vector<std::vector<typename F::Element>> rows;
  for (const auto& p : products) {
    std::vector<typename F::Element> row(target.size(), k.zero());
    std::size_t pos = 0;
    for (const auto& t : p.terms()) {
      while (!(target[pos] == t.monomial)) ++pos;
      row[pos] = t.coefficient;
    }
    rows.push_back(std::move(row));
  }
  auto pivots = row_reduce(k, rows);
  std::vector<Polynomial<F>> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    TermList<F> terms;
    for (std::size_t c = 0; c < target.size(); ++c) {
      if (!k.is_zero(rows[r][c])) terms.push_back({target[c], rows[r][c]});
    }
    out.push_back(Polynomial<F>::from_sorted(ring, std::move(terms)));
  }
  return out;
}

template <class F>
int mu_mod_cube(const Ideal<F>& ideal) {
  const auto& ring = ideal.ring();
  std::vector<Monomial> quads;
  for (const auto& g : ideal.generators()) {
    for (const auto& t : g.terms()) {
      int d = t.monomial.total_degree();
      if (d < 2) throw Error("the ideal is not contained in the square of the irrelevant ideal");
      if (d == 2 && std::find(quads.begin(), quads.end(), t.monomial) == quads.end()) quads.push_back(t.monomial);
    }
  }
  if (quads.empty()) return 0;
  const F& k = ring->field();
  std::vector<std::vector<typename F::Element>> rows;
  for (const auto& g : ideal.generators()) {
    std::vector<typename F::Element> row(quads.size(), k.zero());
    for (const auto& t : g.terms()) {
      if (t.monomial.total_degree() != 2) continue;
      auto pos = std::find(quads.begin(), quads.end(), t.monomial) - quads.begin();
      row[static_cast<std::size_t>(pos)] = t.coefficient;
    }
    rows.push_back(std::move(row));
  }
  return matrix_rank(k, std::move(rows));
}

#define TF_INSTANTIATE_IDEAL(F)                                                    \
  template class Ideal<F>;                                                         \
  template Polynomial<F> exact_quotient(const Polynomial<F>&, const Polynomial<F>&); \
  template int height_in_quotient(const Ideal<F>&, const Ideal<F>&);               \
  template std::vector<Polynomial<F>> degree_part_basis(const Ideal<F>&, int);      \
  template int mu_mod_cube(const Ideal<F>&);

TF_INSTANTIATE_IDEAL(PrimeField)
TF_INSTANTIATE_IDEAL(RationalField)

}  // namespace tf
