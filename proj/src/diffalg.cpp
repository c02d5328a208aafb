#include "tf/diffalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <type_traits>

#include "tf/limits.hpp"
#include "tf/linalg.hpp"

namespace tf {

namespace {

/// Small deterministic generator for the few random choices made here
/// (combinations of minors, evaluation points).
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}
  std::uint32_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::uint32_t>(state_ >> 33);
  }

 private:
  std::uint64_t state_;
};

template <class F>
RingPtr<F> ring_with_block(const RingPtr<F>& base, const std::vector<int>& block_weights) {
  std::vector<std::string> names = base->names();
  std::vector<std::string> extra;
  for (std::size_t j = 0; j < block_weights.size(); ++j) {
    std::string name = "T" + std::to_string(j + 1);
    auto taken = [&](const std::string& s) {
      return std::find(names.begin(), names.end(), s) != names.end() ||
             std::find(extra.begin(), extra.end(), s) != extra.end();
    };
    std::string candidate = name;
    for (int k = 1; taken(candidate); ++k) candidate = "d" + name + (k > 1 ? std::to_string(k) : "");
    extra.push_back(candidate);
  }
  std::vector<int> weights = base->weights();
  for (int w : block_weights) weights.push_back(std::max(w, 1));
  names.insert(names.end(), extra.begin(), extra.end());
  bool unit = std::all_of(weights.begin(), weights.end(), [](int w) { return w == 1; });
  return PolyRing<F>::make(base->field(), names, weights,
                           unit ? MonomialOrder::degrevlex() : MonomialOrder::weighted_degrevlex());
}

template <class F>
int t_degree(const Polynomial<F>& p, int x_count) {
  if (p.is_zero()) return -1;
  return block_degree(p.lead_monomial(), x_count, p.ring()->nvars());
}

/// Sorting key for reporting: T-degree, then degree, then the ring order.
template <class F>
void sort_for_report(std::vector<Polynomial<F>>& v, int x_count) {
  std::stable_sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
    int ta = t_degree(a, x_count), tb = t_degree(b, x_count);
    if (ta != tb) return ta < tb;
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.ring()->compare(a.lead_monomial(), b.lead_monomial()) < 0;
  });
}

template <class F>
typename F::Element random_element(const F& k, Lcg& rng) {
  return k.from_int(static_cast<long long>(rng.next() % 1000) + 1);
}

}  // namespace

template <class F>
std::vector<int> PresentedModule<F>::column_degrees() const {
  std::vector<int> out;
  for (const auto& c : presentation.columns()) out.push_back(c.is_zero() ? 0 : shifted_degree(c, row_degrees));
  return out;
}

template <class F>
std::vector<Polynomial<F>> PresentedModule<F>::relations_over_ring() const {
  auto rel = presentation.columns();
  for (const auto& g : base->ideal.generators()) {
    for (int j = 0; j < generators(); ++j) rel.push_back(g.in_component(j));
  }
  rel.erase(std::remove_if(rel.begin(), rel.end(), [](const auto& v) { return v.is_zero(); }), rel.end());
  return rel;
}

template <class F>
bool PresentedModule<F>::is_zero() const {
  if (generators() == 0) return true;
  auto rel = relations_over_ring();
  if (rel.empty()) return false;
  GroebnerOptions o;
  o.module_mode = true;
  o.shifts = row_degrees;
  auto gb = buchberger(ring(), rel, o);
  std::vector<bool> hit(static_cast<std::size_t>(generators()), false);
  for (const auto& g : gb.elements()) {
    if (g.lead_monomial().is_one()) hit[g.lead_monomial().component] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

template <class F>
std::optional<std::vector<int>> quasi_homogeneous_weights(const RingPtr<F>& ring,
                                                          const std::vector<Polynomial<F>>& polys) {
  if (std::all_of(polys.begin(), polys.end(), [](const auto& p) { return p.is_homogeneous(); })) {
    return ring->weights();
  }
  const int n = ring->nvars();
  RationalField q;
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& p : polys) {
    if (p.size() < 2) continue;
    const auto& first = p.terms().front().monomial;
    for (std::size_t a = 1; a < p.size(); ++a) {
      std::vector<mpq_class> row(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) row[static_cast<std::size_t>(v)] = int{p.terms()[a].monomial[v]} - int{first[v]};
      rows.push_back(std::move(row));
    }
  }
  auto basis = nullspace(q, rows, static_cast<std::size_t>(n));
  if (basis.empty()) return std::nullopt;
  const int dim = static_cast<int>(basis.size());
  int limit = 1;
  while (limit < 6 && std::pow(limit + 1, dim) <= 5000) ++limit;
  std::vector<int> c(static_cast<std::size_t>(dim), 1);
  for (;;) {
    std::vector<mpq_class> v(static_cast<std::size_t>(n), 0);
    for (int b = 0; b < dim; ++b)
      for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] += c[static_cast<std::size_t>(b)] * basis[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)];
    if (std::all_of(v.begin(), v.end(), [](const mpq_class& x) { return sgn(x) > 0; })) {
      mpz_class den = 1;
      for (const auto& x : v) den = lcm(den, mpz_class(x.get_den()));
      std::vector<mpz_class> ints;
      mpz_class g = 0;
      for (const auto& x : v) {
        mpz_class k = x.get_num() * (den / x.get_den());
        ints.push_back(k);
        g = gcd(g, k);
      }
      std::vector<int> w;
      bool ok = true;
      for (auto& k : ints) {
        k /= g;
        if (k > 64) ok = false;
        w.push_back(static_cast<int>(k.get_si()));
      }
      if (ok) return w;
    }
    int b = 0;
    while (b < dim && c[static_cast<std::size_t>(b)] == limit) c[static_cast<std::size_t>(b++)] = 1;
    if (b == dim) break;
    ++c[static_cast<std::size_t>(b)];
  }
  return std::nullopt;
}

template <class F>
PresentedAlgebra<F> graded_form(const PresentedAlgebra<F>& a) {
  const auto& gens = a.ideal.generators();
  if (std::all_of(gens.begin(), gens.end(), [](const auto& p) { return p.is_homogeneous(); })) return a;
  auto w = quasi_homogeneous_weights(a.ring(), gens);
  if (!w) return a;
  auto ring = a.ring()->with_weights(*w);
  PresentedAlgebra<F> out = a;
  out.ideal = a.ideal.with_ring(ring);
  return out;
}

template <class F>
PolyMatrix<F> jacobian(const Ideal<F>& i) {
  const auto& ring = i.ring();
  const auto& gens = i.generators();
  PolyMatrix<F> m(ring, ring->nvars(), static_cast<int>(gens.size()));
  for (int v = 0; v < ring->nvars(); ++v)
    for (std::size_t g = 0; g < gens.size(); ++g) m.set(v, static_cast<int>(g), gens[g].derivative(v));
  return m;
}

template <class F>
PresentedModule<F> omega_presentation(const PresentedAlgebra<F>& a) {
  if (a.role != AlgebraRole::Base) throw Error("differentials are computed for base algebras only");
  PresentedModule<F> e;
  e.base = std::make_shared<const PresentedAlgebra<F>>(a);
  e.presentation = jacobian(a.ideal);
  e.row_degrees = a.ring()->weights();
  e.rank = a.dim();
  return e;
}

template <class F>
PresentedAlgebra<F> symmetric_algebra(const PresentedModule<F>& e) {
  const auto& base_ring = e.ring();
  const int nx = base_ring->nvars();
  auto ring = ring_with_block(base_ring, e.row_degrees.empty() ? std::vector<int>(static_cast<std::size_t>(e.generators()), 1)
                                                             : e.row_degrees);
  std::vector<Polynomial<F>> gens;
  for (const auto& f : e.base->ideal.generators()) gens.push_back(f.embed_prefix(ring));
  for (int c = 0; c < e.presentation.cols(); ++c) {
    Polynomial<F> form(ring);
    for (int j = 0; j < e.generators(); ++j) {
      const auto& entry = e.presentation.at(j, c);
      if (entry.is_zero()) continue;
      form += entry.embed_prefix(ring) * Polynomial<F>::variable(ring, nx + j);
    }
    if (!form.is_zero()) gens.push_back(std::move(form));
  }
  PresentedAlgebra<F> s;
  s.ideal = Ideal<F>(ring, std::move(gens));
  s.role = AlgebraRole::Tangent;
  s.x_count = nx;
  s.base = e.base;
  return s;
}

template <class F>
PresentedAlgebra<F> tangent_algebra(const PresentedAlgebra<F>& a) {
  return symmetric_algebra(omega_presentation(a));
}

template <class F>
Polynomial<F> torsion_witness(const PresentedModule<F>& e) {
  const auto& ring = e.ring();
  const auto& ideal = e.base->ideal;
  const int n = e.generators();
  const int c = n - e.rank;
  if (c <= 0) return Polynomial<F>::from_int(ring, 1);
  if (c > std::min(n, e.presentation.cols())) throw NoWitness();
  auto all = all_minors(e.presentation, c);
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return a.value.degree() < b.value.degree();
  });
  std::vector<Polynomial<F>> candidates;
  for (const auto& m : all) {
    if (m.value.is_zero()) continue;
    check_deadline();
    if (ideal.contains(m.value)) continue;
    if (ideal.is_nonzerodivisor(m.value)) return m.value;
    candidates.push_back(m.value);
  }
  // No single minor works: try a combination of those of the lowest degree.
  if (!candidates.empty()) {
    Lcg rng(0x5eed);
    const F& k = ring->field();
    int d = candidates.front().degree();
    Polynomial<F> combo(ring);
    for (const auto& m : candidates) {
      if (m.degree() == d) combo += m.scaled(random_element(k, rng));
    }
    if (!combo.is_zero() && ideal.is_nonzerodivisor(combo)) return combo;
  }
  throw NoWitness();
}

template <class F>
Polynomial<F> torsion_witness(const PresentedAlgebra<F>& a) {
  return torsion_witness(omega_presentation(a));
}

namespace {

template <class F>
ReesResult<F> saturate_sym(PresentedAlgebra<F> s, const Polynomial<F>& witness, SaturationMethod method) {
  const auto& ring = s.ring();
  auto g = witness.embed_prefix(ring);
  auto sat = s.ideal.saturate(g, method);
  TorsionReport<F> report;
  report.j = s.ideal;
  report.witness = witness;
  report.steps = sat.steps;
  report.linear_type = sat.steps == 0;
  report.j_sat = report.linear_type ? s.ideal : sat.ideal;
  if (!report.linear_type) {
    std::vector<Polynomial<F>> extra;
    for (const auto& h : report.j_sat.basis()) {
      if (!s.ideal.contains(h)) extra.push_back(display_normalize(h));
    }
    sort_for_report(extra, s.x_count);
    if (extra.size() > 4) extra.resize(4);
    report.new_generators = std::move(extra);
  }
  PresentedAlgebra<F> r = s;
  r.ideal = report.j_sat;
  r.role = AlgebraRole::Rees;
  r.witness = witness;
  return {std::move(r), std::move(report)};
}

}  // namespace

template <class F>
ReesResult<F> rees_algebra(const PresentedModule<F>& e, SaturationMethod method) {
  auto g = torsion_witness(e);
  return saturate_sym(symmetric_algebra(e), g, method);
}

template <class F>
ReesResult<F> rees_algebra(const PresentedAlgebra<F>& a, SaturationMethod method) {
  return rees_algebra(omega_presentation(a), method);
}

namespace {

template <class F>
PresentedModule<F> ideal_module(const PresentedAlgebra<F>& a, const std::vector<Polynomial<F>>& gens) {
  const auto& ring = a.ring();
  const int m = static_cast<int>(gens.size());
  std::vector<Polynomial<F>> row = gens;
  for (const auto& g : a.ideal.generators()) row.push_back(g);
  std::vector<int> shifts;
  for (const auto& f : row) shifts.push_back(f.is_zero() ? 0 : f.degree());
  auto syz = syzygies(PolyMatrix<F>::row(ring, row), {}, false);
  std::vector<Polynomial<F>> cols;
  for (int c = 0; c < syz.cols(); ++c) {
    Polynomial<F> v(ring);
    for (int j = 0; j < m; ++j) v += syz.at(j, c).in_component(j);
    if (!v.is_zero()) cols.push_back(std::move(v));
  }
  PresentedModule<F> e;
  e.base = std::make_shared<const PresentedAlgebra<F>>(a);
  e.presentation = PolyMatrix<F>::from_columns(ring, m, cols);
  e.row_degrees.assign(shifts.begin(), shifts.begin() + m);
  e.rank = 1;
  return e;
}

}  // namespace

template <class F>
ReesResult<F> rees_algebra_of_ideal(const PresentedAlgebra<F>& a, const std::vector<Polynomial<F>>& gens) {
  std::vector<Polynomial<F>> nz;
  for (const auto& g : gens) {
    if (!g.is_zero()) nz.push_back(g);
  }
  if (nz.empty()) throw Error("the zero ideal has no Rees algebra presentation here");
  auto e = ideal_module(a, nz);
  std::optional<Polynomial<F>> witness;
  for (const auto& f : nz) {
    if (a.ideal.is_nonzerodivisor(f)) {
      witness = f;
      break;
    }
  }
  if (!witness) witness = torsion_witness(e);
  return saturate_sym(symmetric_algebra(e), *witness, SaturationMethod::IteratedColon);
}

template <class F>
Ideal<F> fitting_ideal(const PresentedModule<F>& e, int i) {
  const auto& ring = e.ring();
  const int n = e.generators();
  if (i < 0) throw Error("Fitting index must be non-negative");
  if (i >= n) return Ideal<F>::unit(ring);
  int t = n - i;
  auto gens = e.base->ideal.generators();
  if (t <= std::min(e.presentation.rows(), e.presentation.cols())) {
    auto m = minors(e.presentation, t);
    gens.insert(gens.end(), m.begin(), m.end());
  }
  return Ideal<F>(ring, std::move(gens));
}

template <class F>
FtReport ft_check(const PresentedModule<F>& e, int t) {
  FtReport report;
  report.t = t;
  report.rank = e.rank;
  for (int i = e.rank; i < e.generators(); ++i) {
    FtRecord rec;
    rec.index = i;
    rec.height = height_in_quotient(fitting_ideal(e, i), e.base->ideal);
    rec.bound = i - e.rank + t + 1;
    report.verdict = report.verdict && rec.met();
    report.records.push_back(rec);
  }
  return report;
}

template <class F>
bool edim_criterion(const PresentedAlgebra<F>& a, int t) {
  return ft_check(omega_presentation(a), t).verdict;
}

namespace {

template <class F>
int fibre_dimension(const PresentedAlgebra<F>& rees) {
  std::vector<int> xs(static_cast<std::size_t>(rees.x_count));
  std::iota(xs.begin(), xs.end(), 0);
  return (rees.ideal + Ideal<F>::variables(rees.ring(), xs)).dim();
}

}  // namespace

template <class F>
int analytic_spread(const PresentedModule<F>& e) {
  return fibre_dimension(rees_algebra(e).algebra);
}

template <class F>
int analytic_spread(const PresentedAlgebra<F>& a, const std::vector<Polynomial<F>>& ideal_gens) {
  bool any = std::any_of(ideal_gens.begin(), ideal_gens.end(), [](const auto& g) { return !g.is_zero(); });
  if (!any) return 0;
  return fibre_dimension(rees_algebra_of_ideal(a, ideal_gens).algebra);
}

template <class F>
QuadricSpread<F> spread_of_quadric_part(const Ideal<F>& i) {
  QuadricSpread<F> out;
  const auto& ring = i.ring();
  auto quads = degree_part_basis(i, 2);
  out.quadrics = static_cast<int>(quads.size());
  out.height = i.height();
  if (!quads.empty()) {
    auto base = PresentedAlgebra<F>::quotient(Ideal<F>::zero(ring));
    out.spread = analytic_spread(base, quads);
    Lcg rng(0xfeed);
    const F& k = ring->field();
    std::vector<typename F::Element> point;
    for (int v = 0; v < ring->nvars(); ++v) point.push_back(random_element(k, rng));
    std::vector<std::vector<typename F::Element>> rows;
    for (const auto& q : quads) {
      std::vector<typename F::Element> row;
      for (int v = 0; v < ring->nvars(); ++v) row.push_back(q.derivative(v).evaluate(point));
      rows.push_back(std::move(row));
    }
    out.jacobian_rank = matrix_rank(k, std::move(rows));
  }
  out.equals_twice_height = out.height != kInfiniteHeight && out.spread == 2 * out.height;
  return out;
}

template <class F>
PresentedModule<F> omega_mod_torsion(const PresentedAlgebra<F>& a, const ReesResult<F>* rees) {
  auto e = omega_presentation(a);
  std::optional<ReesResult<F>> own;
  if (!rees) {
    own = rees_algebra(e);
    rees = &*own;
  }
  if (rees->report.linear_type) return e;
  const auto& s_ring = rees->algebra.ring();
  const int nx = rees->algebra.x_count;
  const int n = e.generators();
  std::vector<Polynomial<F>> current = rees->report.j.generators();
  std::vector<Polynomial<F>> new_cols;
  std::vector<int> back(static_cast<std::size_t>(s_ring->nvars()), 0);
  for (int v = 0; v < nx; ++v) back[static_cast<std::size_t>(v)] = v;
  for (const auto& h : rees->report.j_sat.basis()) {
    if (t_degree(h, nx) != 1) continue;
    if (Ideal<F>(s_ring, current).contains(h)) continue;
    current.push_back(h);
    auto nice = display_normalize(h);
    std::vector<TermList<F>> parts(static_cast<std::size_t>(n));
    for (const auto& t : nice.terms()) {
      int j = -1;
      for (int v = nx; v < s_ring->nvars(); ++v) {
        if (t.monomial[v]) j = v - nx;
      }
      Monomial m = t.monomial;
      m.exponents[static_cast<std::size_t>(nx + j)] = 0;
      s_ring->finish(m);
      parts[static_cast<std::size_t>(j)].push_back({m, t.coefficient});
    }
    Polynomial<F> col(e.ring());
    for (int j = 0; j < n; ++j) {
      Polynomial<F> entry(s_ring, std::move(parts[static_cast<std::size_t>(j)]));
      col += entry.embed(e.ring(), back).in_component(j);
    }
    new_cols.push_back(std::move(col));
  }
  auto cols = e.presentation.columns();
  cols.insert(cols.end(), new_cols.begin(), new_cols.end());
  e.presentation = PolyMatrix<F>::from_columns(e.ring(), n, cols);
  return e;
}

template <class F>
int generic_rank(const PresentedModule<F>& e) {
  const int n = e.generators();
  const auto& ideal = e.base->ideal;
  for (int t = std::min(n, e.presentation.cols()); t >= 1; --t) {
    for (const auto& m : all_minors(e.presentation, t)) {
      if (m.value.is_zero() || ideal.contains(m.value)) continue;
      if (ideal.is_nonzerodivisor(m.value)) return n - t;
    }
  }
  return n;
}

template <class F>
Polynomial<F> display_normalize(const Polynomial<F>& p) {
  if (p.is_zero()) return p;
  if constexpr (std::is_same_v<F, PrimeField>) {
    const F& k = p.field();
    auto monic = p.monic();
    long long best_cost = -1;
    std::uint32_t best = 1;
    for (std::uint32_t s = 1; s <= 360 && s < k.characteristic(); ++s) {
      long long cost = 0;
      for (const auto& t : monic.terms()) {
        long long v = k.lift(k.mul(t.coefficient, s));
        cost = std::max(cost, v < 0 ? -v : v);
      }
      if (best_cost < 0 || cost < best_cost) {
        best_cost = cost;
        best = s;
      }
    }
    return monic.scaled(best);
  } else {
    mpz_class den = 1, num = 0;
    for (const auto& t : p.terms()) den = lcm(den, mpz_class(t.coefficient.get_den()));
    for (const auto& t : p.terms()) num = gcd(num, mpz_class(t.coefficient.get_num() * (den / t.coefficient.get_den())));
    mpq_class factor(den, num);
    factor.canonicalize();
    if (sgn(p.lead_coefficient()) < 0) factor = -factor;
    return p.scaled(factor);
  }
}

#define TF_INSTANTIATE_DIFFALG(F)                                                                          \
  template struct PresentedModule<F>;                                                                      \
  template std::optional<std::vector<int>> quasi_homogeneous_weights(const RingPtr<F>&,                    \
                                                                     const std::vector<Polynomial<F>>&);   \
  template PresentedAlgebra<F> graded_form(const PresentedAlgebra<F>&);                                    \
  template PolyMatrix<F> jacobian(const Ideal<F>&);                                                        \
  template PresentedModule<F> omega_presentation(const PresentedAlgebra<F>&);                              \
  template PresentedAlgebra<F> symmetric_algebra(const PresentedModule<F>&);                               \
  template PresentedAlgebra<F> tangent_algebra(const PresentedAlgebra<F>&);                                \
  template Polynomial<F> torsion_witness(const PresentedModule<F>&);                                       \
  template Polynomial<F> torsion_witness(const PresentedAlgebra<F>&);                                      \
  template ReesResult<F> rees_algebra(const PresentedModule<F>&, SaturationMethod);                        \
  template ReesResult<F> rees_algebra(const PresentedAlgebra<F>&, SaturationMethod);                       \
  template ReesResult<F> rees_algebra_of_ideal(const PresentedAlgebra<F>&, const std::vector<Polynomial<F>>&); \
  template Ideal<F> fitting_ideal(const PresentedModule<F>&, int);                                         \
  template FtReport ft_check(const PresentedModule<F>&, int);                                              \
  template bool edim_criterion(const PresentedAlgebra<F>&, int);                                           \
  template int analytic_spread(const PresentedModule<F>&);                                                 \
  template int analytic_spread(const PresentedAlgebra<F>&, const std::vector<Polynomial<F>>&);             \
  template QuadricSpread<F> spread_of_quadric_part(const Ideal<F>&);                                       \
  template PresentedModule<F> omega_mod_torsion(const PresentedAlgebra<F>&, const ReesResult<F>*);         \
  template int generic_rank(const PresentedModule<F>&);                                                    \
  template Polynomial<F> display_normalize(const Polynomial<F>&);

TF_INSTANTIATE_DIFFALG(PrimeField)
TF_INSTANTIATE_DIFFALG(RationalField)

}  // namespace tf
