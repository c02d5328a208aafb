#include "tf/homology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tf/limits.hpp"

namespace tf {

int BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

int BettiTable::total(int i) const {
  int s = 0;
  for (const auto& [key, v] : entries) {
    if (key.first == i) s += v;
  }
  return s;
}

int BettiTable::length() const {
  int l = 0;
  for (const auto& [key, v] : entries) {
    if (v > 0) l = std::max(l, key.first);
  }
  return l;
}

std::string BettiTable::to_string() const {
  if (entries.empty()) return "(empty)\n";
  int lo = 0, hi = 0, len = length();
  bool first = true;
  for (const auto& [key, v] : entries) {
    int row = key.second - key.first;
    if (first) lo = hi = row;
    lo = std::min(lo, row);
    hi = std::max(hi, row);
    first = false;
  }
  std::ostringstream s;
  s << "      ";
  for (int i = 0; i <= len; ++i) s << ' ' << std::string(std::max(0, 4 - static_cast<int>(std::to_string(i).size())), ' ') << i;
  s << "\ntotal:";
  for (int i = 0; i <= len; ++i) {
    auto t = std::to_string(total(i));
    s << ' ' << std::string(std::max(0, 4 - static_cast<int>(t.size())), ' ') << t;
  }
  s << '\n';
  for (int row = lo; row <= hi; ++row) {
    auto label = std::to_string(row) + ":";
    s << std::string(std::max(0, 6 - static_cast<int>(label.size())), ' ') << label;
    for (int i = 0; i <= len; ++i) {
      int v = at(i, i + row);
      auto t = v == 0 ? std::string(".") : std::to_string(v);
      s << ' ' << std::string(std::max(0, 4 - static_cast<int>(t.size())), ' ') << t;
    }
    s << '\n';
  }
  return s.str();
}

template <class F>
BettiTable FreeResolution<F>::betti() const {
  BettiTable b;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    for (int d : degrees[i]) ++b.entries[{static_cast<int>(i), d}];
  }
  return b;
}

template <class F>
IntPoly FreeResolution<F>::alternating_sum() const {
  IntPoly p;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    for (int d : degrees[i]) {
      if (d < 0) throw Error("negative twist in alternating sum");
      if (p.size() <= static_cast<std::size_t>(d)) p.resize(static_cast<std::size_t>(d) + 1, 0);
      p[static_cast<std::size_t>(d)] += (i % 2 == 0) ? 1 : -1;
    }
  }
  trim(p);
  return p;
}

template <class F>
bool FreeResolution<F>::is_complex() const {
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    if (!(maps[i] * maps[i + 1]).is_zero()) return false;
  }
  return true;
}

template <class F>
bool FreeResolution<F>::entries_in_maximal_ideal() const {
  for (const auto& m : maps) {
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) {
        for (const auto& t : m.at(i, j).terms()) {
          if (t.monomial.is_one()) return false;
        }
      }
  }
  return true;
}

namespace {

template <class F>
bool has_unit_term(const Polynomial<F>& p, int& row) {
  for (const auto& t : p.terms()) {
    if (t.monomial.is_one()) {
      row = t.monomial.component;
      return true;
    }
  }
  return false;
}

/// Removes generators killed by a relation with a constant entry. Columns are
/// vectors over `rows` generators; the surviving generators are renumbered.
template <class F>
void eliminate_units(const RingPtr<F>& ring, std::vector<Polynomial<F>>& cols, std::vector<int>& row_degrees) {
  const F& k = ring->field();
  for (;;) {
    int pivot_col = -1, pivot_row = -1;
    for (std::size_t c = 0; c < cols.size() && pivot_col < 0; ++c) {
      int r = -1;
      if (has_unit_term(cols[c], r)) {
        pivot_col = static_cast<int>(c);
        pivot_row = r;
      }
    }
    if (pivot_col < 0) return;
    check_deadline();
    Polynomial<F> v = cols[static_cast<std::size_t>(pivot_col)];
    auto entry = v.component(pivot_row);
    // The relation is homogeneous, so its entry in the pivot row is a unit.
    auto u = entry.lead_coefficient();
    v = v.scaled(k.inv(u));
    std::vector<Polynomial<F>> next;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (static_cast<int>(c) == pivot_col) continue;
      auto w = cols[c];
      auto a = w.component(pivot_row);
      if (!a.is_zero()) w -= a * v;
      // Drop the pivot row and shift the later components down.
      TermList<F> terms;
      for (const auto& t : w.terms()) {
        Monomial m = t.monomial;
        if (m.component > pivot_row) --m.component;
        terms.push_back({m, t.coefficient});
      }
      Polynomial<F> moved(ring, std::move(terms));
      if (!moved.is_zero()) next.push_back(std::move(moved));
    }
    cols = std::move(next);
    row_degrees.erase(row_degrees.begin() + pivot_row);
  }
}

template <class F>
std::vector<int> source_degrees(const PolyMatrix<F>& m, std::span<const int> row_degrees) {
  std::vector<int> out;
  for (const auto& c : m.columns()) out.push_back(shifted_degree(c, row_degrees));
  return out;
}

/// Extends a resolution whose first map is already minimal.
template <class F>
void continue_resolution(FreeResolution<F>& res) {
  const int n = res.ring->nvars();
  while (res.maps.back().cols() > 0) {
    check_deadline();
    const auto& last = res.maps.back();
    // degrees[i] are the twists of the target of maps[i]
    const auto& shifts = res.degrees[res.maps.size() - 1];
    auto syz = syzygies(last, shifts, true, &res.stats);
    if (syz.cols() == 0) break;
    auto deg = source_degrees(syz, res.degrees.back());
    // Hilbert's syzygy theorem bounds the length; exceeding it means a bug.
    if (static_cast<int>(res.maps.size()) > n + 1) throw Error("resolution longer than the number of variables");
    res.degrees.push_back(std::move(deg));
    res.maps.push_back(std::move(syz));
  }
  // Trailing zero differential (free module resolved) is not a step.
  if (!res.maps.empty() && res.maps.back().cols() == 0) {
    res.maps.pop_back();
    res.degrees.pop_back();
  }
  res.minimal = res.entries_in_maximal_ideal();
}

template <class F>
std::vector<Polynomial<F>> graded_generators(const Ideal<F>& i) {
  std::vector<Polynomial<F>> gens;
  for (const auto& g : i.generators()) {
    if (!g.is_zero()) gens.push_back(g);
  }
  bool hom = std::all_of(gens.begin(), gens.end(), [](const auto& g) { return g.is_homogeneous(); });
  if (!hom) {
    if (!i.is_homogeneous()) throw NotGraded("resolution needs a homogeneous ideal");
    gens = i.basis();
  }
  return gens;
}

}  // namespace

template <class F>
FreeResolution<F> resolve(const Ideal<F>& i) {
  const auto& ring = i.ring();
  if (i.is_unit()) throw Error("the quotient by the unit ideal is zero");
  auto gens = graded_generators(i);
  FreeResolution<F> res;
  res.ring = ring;
  res.degrees.push_back({0});
  if (gens.empty()) return res;
  auto keep = minimal_generator_indices(ring, gens, {}, &res.stats);
  std::vector<Polynomial<F>> mins;
  for (int k : keep) mins.push_back(gens[static_cast<std::size_t>(k)]);
  std::stable_sort(mins.begin(), mins.end(), [](const auto& a, const auto& b) { return a.degree() < b.degree(); });
  auto first = PolyMatrix<F>::row(ring, mins);
  std::vector<int> zero{0};
  res.degrees.push_back(source_degrees(first, zero));
  res.maps.push_back(std::move(first));
  continue_resolution(res);
  return res;
}

template <class F>
FreeResolution<F> resolve(const PresentedModule<F>& m) {
  const auto& ring = m.ring();
  auto rel = m.relations_over_ring();
  std::vector<int> rows = m.row_degrees;
  if (rows.size() != static_cast<std::size_t>(m.generators())) rows.assign(static_cast<std::size_t>(m.generators()), 0);
  for (const auto& v : rel) {
    if (!v.is_homogeneous(rows)) throw NotGraded("resolution needs a graded presentation");
  }
  eliminate_units(ring, rel, rows);
  FreeResolution<F> res;
  res.ring = ring;
  res.degrees.push_back(rows);
  if (rows.empty()) return res;  // zero module
  if (!rel.empty()) {
    auto keep = minimal_generator_indices(ring, rel, rows, &res.stats);
    std::vector<Polynomial<F>> mins;
    for (int k : keep) mins.push_back(rel[static_cast<std::size_t>(k)]);
    rel = std::move(mins);
  }
  auto first = PolyMatrix<F>::from_columns(ring, static_cast<int>(rows.size()), rel);
  res.degrees.push_back(source_degrees(first, rows));
  res.maps.push_back(std::move(first));
  continue_resolution(res);
  return res;
}

template <class F>
ProjdimDepth projdim_depth(const PresentedAlgebra<F>& a) {
  auto res = resolve(a.ideal);
  return {res.length(), a.ring()->nvars() - res.length()};
}

template <class F>
ProjdimDepth projdim_depth(const PresentedModule<F>& m) {
  auto res = resolve(m);
  return {res.length(), m.ring()->nvars() - res.length()};
}

template <class F>
int module_dimension(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& relations, int rank,
                     std::span<const int> shifts) {
  std::vector<std::vector<Monomial>> leads(static_cast<std::size_t>(rank));
  if (!relations.empty()) {
    GroebnerOptions o;
    o.module_mode = true;
    o.shifts.assign(shifts.begin(), shifts.end());
    auto gb = buchberger(ring, relations, o);
    for (const auto& g : gb.elements()) {
      Monomial m = g.lead_monomial();
      auto c = m.component;
      m.component = 0;
      leads[c].push_back(m);
    }
  }
  int d = -1;
  for (const auto& l : leads) d = std::max(d, monomial_dimension(l, ring->nvars()));
  return d;
}

namespace {

/// Images of the variables under x_j -> x_j (j < n - d) and
/// x_{n-d+i} -> random linear form in the first n - d variables.
template <class F>
struct SopChart {
  RingPtr<F> small;
  std::vector<Polynomial<F>> images;
};

template <class F>
SopChart<F> sop_chart(const RingPtr<F>& ring, int d, unsigned attempt) {
  const int n = ring->nvars();
  const int keep = n - d;
  std::vector<std::string> names(ring->names().begin(), ring->names().begin() + keep);
  SopChart<F> c;
  c.small = PolyRing<F>::make(ring->field(), names, {}, MonomialOrder::degrevlex());
  std::uint64_t state = 0x243f6a8885a308d3ULL + 7919ULL * attempt;
  auto next = [&]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long long>((state >> 33) % 97) + 1;
  };
  const F& k = ring->field();
  for (int j = 0; j < keep; ++j) c.images.push_back(Polynomial<F>::variable(c.small, j));
  for (int i = 0; i < d; ++i) {
    Polynomial<F> l(c.small);
    for (int j = 0; j < keep; ++j) l += Polynomial<F>::variable(c.small, j).scaled(k.from_int(next()));
    c.images.push_back(std::move(l));
  }
  return c;
}

constexpr int kSopAttempts = 6;

template <class F>
bool reduction_applies(const RingPtr<F>& ring) {
  return ring->standard_grading();
}

/// Artinian reduction of R/I: the ideal in the smaller ring, or nullopt if
/// no attempt produced a system of parameters.
template <class F>
std::optional<Ideal<F>> artinian_reduction(const Ideal<F>& i, int d) {
  for (unsigned attempt = 0; attempt < kSopAttempts; ++attempt) {
    auto chart = sop_chart(i.ring(), d, attempt);
    std::vector<Polynomial<F>> gens;
    for (const auto& g : i.generators()) gens.push_back(g.substitute(chart.small, chart.images));
    Ideal<F> j(chart.small, std::move(gens));
    if (j.dim() <= 0) return j;
  }
  return std::nullopt;
}

IntPoly finite_series(const HilbertSeries& hs) {
  IntPoly p = hs.dim == 0 ? hs.numerator : IntPoly{};
  trim(p);
  return p;
}

template <class F>
long long artinian_length(const Ideal<F>& j) {
  if (j.is_unit()) return 0;
  long long s = 0;
  for (long long v : finite_series(j.hilbert_series())) s += v;
  return s;
}

template <class F>
std::optional<bool> algebra_cm_by_reduction(const PresentedAlgebra<F>& a, std::optional<Ideal<F>>* artinian) {
  const auto& i = a.ideal;
  if (!reduction_applies(i.ring()) || !i.is_homogeneous()) return std::nullopt;
  auto hs = i.hilbert_series();
  auto red = artinian_reduction(i, hs.dim);
  if (!red) return std::nullopt;
  if (artinian) *artinian = red;
  IntPoly h = hs.numerator;
  trim(h);
  return h == finite_series(red->hilbert_series());
}

template <class F>
std::vector<int> padded_rows(const PresentedModule<F>& m) {
  std::vector<int> rows = m.row_degrees;
  if (rows.size() != static_cast<std::size_t>(m.generators())) rows.assign(static_cast<std::size_t>(m.generators()), 0);
  return rows;
}

template <class F>
HilbertSeries module_series(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& rel, std::span<const int> rows) {
  std::vector<Monomial> leads;
  if (!rel.empty()) {
    GroebnerOptions o;
    o.module_mode = true;
    o.shifts.assign(rows.begin(), rows.end());
    leads = buchberger(ring, rel, o).lead_monomials();
  }
  return module_hilbert_series(leads, ring->weights(), rows, static_cast<int>(rows.size()));
}

template <class F>
std::optional<bool> module_cm_by_reduction(const PresentedModule<F>& m) {
  const auto& ring = m.ring();
  if (!reduction_applies(ring)) return std::nullopt;
  auto rows = padded_rows(m);
  auto rel = m.relations_over_ring();
  for (const auto& v : rel) {
    if (!v.is_homogeneous(rows)) return std::nullopt;
  }
  int d = module_dimension(ring, rel, m.generators(), rows);
  if (d < 0) return true;
  auto hs = module_series(ring, rel, rows);
  IntPoly h = hs.numerator;
  trim(h);
  for (unsigned attempt = 0; attempt < kSopAttempts; ++attempt) {
    auto chart = sop_chart(ring, d, attempt);
    std::vector<Polynomial<F>> small;
    for (const auto& v : rel) {
      auto w = v.substitute(chart.small, chart.images);
      if (!w.is_zero()) small.push_back(std::move(w));
    }
    if (module_dimension(chart.small, small, m.generators(), rows) > 0) continue;
    return h == finite_series(module_series(chart.small, small, rows));
  }
  return std::nullopt;
}

}  // namespace

template <class F>
bool is_cohen_macaulay(const PresentedAlgebra<F>& a, CmMethod method) {
  if (a.ideal.is_unit()) return true;
  if (method != CmMethod::Resolution) {
    if (auto r = algebra_cm_by_reduction<F>(a, nullptr)) return *r;
    if (method == CmMethod::Reduction) throw NotGraded("no Artinian reduction by linear forms");
  }
  auto pd = projdim_depth(a);
  return pd.depth == a.dim();
}

template <class F>
bool is_cohen_macaulay(const PresentedModule<F>& m, CmMethod method) {
  if (method != CmMethod::Resolution) {
    if (auto r = module_cm_by_reduction(m)) return *r;
    if (method == CmMethod::Reduction) throw NotGraded("no Artinian reduction by linear forms");
  }
  auto rows = padded_rows(m);
  int dim = module_dimension(m.ring(), m.relations_over_ring(), m.generators(), rows);
  if (dim < 0) return true;
  return projdim_depth(m).depth == dim;
}

template <class F>
bool is_gorenstein(const PresentedAlgebra<F>& a, CmMethod method) {
  if (a.ideal.is_unit()) return false;
  if (method != CmMethod::Resolution) {
    std::optional<Ideal<F>> artinian;
    if (auto r = algebra_cm_by_reduction(a, &artinian)) {
      if (!*r) return false;
      // Type = dimension of the socle (J : m) / J of the Artinian reduction.
      const auto& j = *artinian;
      auto socle = j.quotient(Ideal<F>::variables(j.ring()));
      return artinian_length(j) - artinian_length(socle) == 1;
    }
    if (method == CmMethod::Reduction) throw NotGraded("no Artinian reduction by linear forms");
  }
  auto res = resolve(a.ideal);
  if (res.ring->nvars() - res.length() != a.dim()) return false;
  return res.rank(res.length()) == 1;
}

template <class F>
bool cy_type_check(const PresentedAlgebra<F>& a) {
  if (!is_gorenstein(a)) return false;
  return a.ideal.hilbert_series().a_invariant() == 0;
}

template <class F>
PresentedModule<F> koszul_h1(const Ideal<F>& i) {
  const auto& ring = i.ring();
  std::vector<Polynomial<F>> f;
  for (const auto& g : i.generators()) {
    if (!g.is_zero()) f.push_back(g);
  }
  const int m = static_cast<int>(f.size());
  std::vector<int> fdeg;
  for (const auto& g : f) fdeg.push_back(g.degree());
  PresentedModule<F> h;
  h.base = std::make_shared<const PresentedAlgebra<F>>(PresentedAlgebra<F>::quotient(i));
  h.rank = 0;
  if (m == 0) {
    h.presentation = PolyMatrix<F>(ring, 0, 0);
    return h;
  }
  auto z = syzygies(PolyMatrix<F>::row(ring, f), {}, false);
  const int s = z.cols();
  auto zcols = z.columns();
  // Trivial Koszul syzygies f_b e_a - f_a e_b.
  std::vector<Polynomial<F>> cols = zcols;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      cols.push_back(f[static_cast<std::size_t>(b)].in_component(a) - f[static_cast<std::size_t>(a)].in_component(b));
  auto rel = syzygies(PolyMatrix<F>::from_columns(ring, m, cols), {}, false);
  std::vector<Polynomial<F>> proj;
  for (const auto& c : rel.columns()) {
    Polynomial<F> v(ring);
    for (int j = 0; j < s; ++j) v += c.component(j).in_component(j);
    if (!v.is_zero()) proj.push_back(std::move(v));
  }
  h.presentation = PolyMatrix<F>::from_columns(ring, s, proj);
  for (const auto& c : zcols) h.row_degrees.push_back(c.is_zero() ? 0 : shifted_degree(c, fdeg));
  return h;
}

template <class F>
int depth_probe(const Ideal<F>& i, unsigned seed) {
  const auto& ring = i.ring();
  if (!ring->standard_grading()) throw NotGraded("depth probe uses linear forms");
  if (!i.is_homogeneous()) throw NotGraded("depth probe needs a homogeneous ideal");
  const F& k = ring->field();
  std::uint64_t state = 0x9e3779b97f4a7c15ULL ^ seed;
  auto next = [&]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long long>((state >> 33) % 30000) + 1;
  };
  Ideal<F> current = i;
  int depth = 0;
  for (int step = 0; step < ring->nvars(); ++step) {
    if (current.is_unit()) break;
    Polynomial<F> l(ring);
    for (int v = 0; v < ring->nvars(); ++v) l += Polynomial<F>::variable(ring, v).scaled(k.from_int(next()));
    if (!current.is_nonzerodivisor(l)) break;
    ++depth;
    auto gens = current.generators();
    gens.push_back(l);
    current = Ideal<F>(ring, std::move(gens));
  }
  return depth;
}

#define TF_INSTANTIATE_HOMOLOGY(F)                                                                        \
  template struct FreeResolution<F>;                                                                      \
  template FreeResolution<F> resolve(const Ideal<F>&);                                                    \
  template FreeResolution<F> resolve(const PresentedModule<F>&);                                          \
  template ProjdimDepth projdim_depth(const PresentedAlgebra<F>&);                                        \
  template ProjdimDepth projdim_depth(const PresentedModule<F>&);                                         \
  template int module_dimension(const RingPtr<F>&, const std::vector<Polynomial<F>>&, int, std::span<const int>); \
  template bool is_cohen_macaulay(const PresentedAlgebra<F>&, CmMethod);                                  \
  template bool is_cohen_macaulay(const PresentedModule<F>&, CmMethod);                                   \
  template bool is_gorenstein(const PresentedAlgebra<F>&, CmMethod);                                      \
  template bool cy_type_check(const PresentedAlgebra<F>&);                                                \
  template PresentedModule<F> koszul_h1(const Ideal<F>&);                                                 \
  template int depth_probe(const Ideal<F>&, unsigned);

TF_INSTANTIATE_HOMOLOGY(PrimeField)
TF_INSTANTIATE_HOMOLOGY(RationalField)

}  // namespace tf
