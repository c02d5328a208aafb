#include "tf/hilbert.hpp"

#include <algorithm>
#include <numeric>

#include "tf/errors.hpp"
#include "tf/limits.hpp"

namespace tf {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

namespace {

IntPoly one_minus_t_to(int d) {
  IntPoly p(static_cast<std::size_t>(d) + 1, 0);
  p[0] = 1;
  p[static_cast<std::size_t>(d)] -= 1;
  return p;
}

int weighted_degree(const Monomial& m, std::span<const int> weights) {
  int d = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) d += weights[i] * m.exponents[i];
  return d;
}

Monomial strip_component(Monomial m) {
  m.component = 0;
  return m;
}

/// Generators are pairwise coprime: the K-polynomial is a product.
bool pairwise_coprime(const std::vector<Monomial>& gens) {
  std::uint64_t seen = 0;
  for (const auto& g : gens) {
    if (seen & g.support) return false;
    seen |= g.support;
  }
  return true;
}

IntPoly kpoly_rec(std::vector<Monomial> gens, std::span<const int> weights, long& calls) {
  if (++calls % 4096 == 0) check_deadline();
  if (gens.empty()) return {1};
  for (const auto& g : gens) {
    if (g.is_one()) return {};
  }
  if (pairwise_coprime(gens)) {
    IntPoly r{1};
    for (const auto& g : gens) r = r * one_minus_t_to(weighted_degree(g, weights));
    return r;
  }
  // Pivot on the variable occurring in the most generators.
  std::vector<int> count(weights.size(), 0);
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (g.exponents[i]) ++count[i];
    }
  }
  int v = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  // Pivot power: a middle exponent among the generators containing v.
  std::vector<int> exps;
  for (const auto& g : gens) {
    if (g.exponents[static_cast<std::size_t>(v)]) exps.push_back(g.exponents[static_cast<std::size_t>(v)]);
  }
  std::sort(exps.begin(), exps.end());
  int e = exps[exps.size() / 2];
  if (e == exps.back() && exps.front() < e) e = exps.front();
  Monomial pivot;
  pivot.exponents[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(e);
  pivot.support = std::uint64_t{1} << v;
  // A pivot equal to a generator would leave I + (p) unchanged.
  if (std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g == pivot; })) {
    e = exps.front();
    pivot.exponents[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(e);
  }

  // I + (p)
  std::vector<Monomial> sum{pivot};
  for (const auto& g : gens) {
    if (!divides(pivot, g)) sum.push_back(g);
  }
  // I : p
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (auto g : gens) {
    auto& x = g.exponents[static_cast<std::size_t>(v)];
    x = static_cast<std::uint8_t>(x > e ? x - e : 0);
    if (x == 0) g.support &= ~(std::uint64_t{1} << v);
    colon.push_back(g);
  }
  IntPoly a = kpoly_rec(minimalize(std::move(sum)), weights, calls);
  IntPoly b = kpoly_rec(minimalize(std::move(colon)), weights, calls);
  IntPoly shift(static_cast<std::size_t>(weights[static_cast<std::size_t>(v)] * e) + 1, 0);
  shift.back() = 1;
  return a + shift * b;
}

/// Size of a smallest variable set meeting every support (branch and bound).
int min_hitting_set(const std::vector<std::uint64_t>& sets, std::uint64_t chosen, int size, int best) {
  if (size >= best) return best;
  const std::uint64_t* open = nullptr;
  int open_bits = 65;
  for (const auto& s : sets) {
    if (s & chosen) continue;
    int bits = __builtin_popcountll(s);
    if (bits < open_bits) {
      open_bits = bits;
      open = &s;
    }
  }
  if (!open) return size;
  if (size + 1 >= best) return best;
  std::uint64_t s = *open;
  while (s) {
    int v = __builtin_ctzll(s);
    s &= s - 1;
    best = std::min(best, min_hitting_set(sets, chosen | (std::uint64_t{1} << v), size + 1, best));
  }
  return best;
}

}  // namespace

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Monomial& a, const Monomial& b) { return a.total_degree() < b.total_degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out) {
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

IntPoly kpolynomial(std::span<const Monomial> gens, std::span<const int> weights) {
  std::vector<Monomial> g;
  for (const auto& m : gens) g.push_back(strip_component(m));
  long calls = 0;
  return kpoly_rec(minimalize(std::move(g)), weights, calls);
}

int monomial_dimension(std::span<const Monomial> gens, int nvars) {
  std::vector<std::uint64_t> sets;
  for (const auto& m : gens) {
    if (m.is_one()) return -1;
    sets.push_back(m.support);
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return nvars - min_hitting_set(sets, 0, 0, nvars + 1);
}

namespace {

HilbertSeries finish_series(IntPoly k, std::span<const int> weights) {
  HilbertSeries hs;
  hs.kpoly = k;
  hs.weights.assign(weights.begin(), weights.end());
  bool standard = std::all_of(weights.begin(), weights.end(), [](int w) { return w == 1; });
  if (k.empty()) {
    hs.dim = -1;
    return hs;
  }
  if (!standard) {
    // Pole order at t = 1: number of denominator factors minus the order of
    // vanishing of K at 1.
    IntPoly p = k;
    int vanish = 0;
    for (;;) {
      long long s = std::accumulate(p.begin(), p.end(), 0LL);
      if (s != 0 || p.empty()) break;
      IntPoly q(p.size() - 1, 0);
      long long acc = 0;
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        acc += p[i];
        q[i] = acc;
      }
      p = q;
      trim(p);
      ++vanish;
    }
    hs.numerator = k;
    hs.dim = static_cast<int>(weights.size()) - vanish;
    return hs;
  }
  IntPoly p = k;
  int d = static_cast<int>(weights.size());
  while (d > 0) {
    long long s = std::accumulate(p.begin(), p.end(), 0LL);
    if (s != 0) break;
    // Divide by (1 - t): q_i = sum_{j <= i} p_j.
    IntPoly q(p.size() - 1, 0);
    long long acc = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      acc += p[i];
      q[i] = acc;
    }
    p = q;
    trim(p);
    --d;
  }
  hs.numerator = p;
  hs.dim = d;
  return hs;
}

}  // namespace

HilbertSeries hilbert_series(std::span<const Monomial> gens, std::span<const int> weights) {
  return finish_series(kpolynomial(gens, weights), weights);
}

HilbertSeries module_hilbert_series(std::span<const Monomial> leads, std::span<const int> weights,
                                    std::span<const int> shifts, int rank) {
  std::vector<std::vector<Monomial>> per(static_cast<std::size_t>(rank));
  for (const auto& m : leads) {
    if (m.component >= rank) throw Error("lead term outside the free module");
    per[m.component].push_back(m);
  }
  IntPoly total;
  for (int c = 0; c < rank; ++c) {
    IntPoly k = kpolynomial(per[static_cast<std::size_t>(c)], weights);
    int s = c < static_cast<int>(shifts.size()) ? shifts[static_cast<std::size_t>(c)] : 0;
    if (s < 0) throw NotGraded("negative degree shifts are not supported");
    IntPoly shift(static_cast<std::size_t>(s) + 1, 0);
    shift.back() = 1;
    total = total + shift * k;
  }
  return finish_series(total, weights);
}

bool HilbertSeries::standard() const {
  return std::all_of(weights.begin(), weights.end(), [](int w) { return w == 1; });
}

int HilbertSeries::a_invariant() const {
  int sum = std::accumulate(weights.begin(), weights.end(), 0);
  return static_cast<int>(kpoly.size()) - 1 - sum;
}

long long HilbertSeries::degree() const { return std::accumulate(numerator.begin(), numerator.end(), 0LL); }

std::vector<long long> HilbertSeries::expand(int up_to) const {
  std::vector<long long> s(static_cast<std::size_t>(up_to) + 1, 0);
  for (std::size_t i = 0; i < kpoly.size() && i <= static_cast<std::size_t>(up_to); ++i) s[i] = kpoly[i];
  for (int w : weights) {
    // Multiply by 1 / (1 - t^w).
    for (std::size_t i = static_cast<std::size_t>(w); i < s.size(); ++i) s[i] += s[i - static_cast<std::size_t>(w)];
  }
  return s;
}

std::string HilbertSeries::to_string() const {
  auto poly = [](const IntPoly& p) {
    if (p.empty()) return std::string("0");
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
      long long c = p[i];
      if (c == 0) continue;
      long long mag = c < 0 ? -c : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (i == 0) {
        out += std::to_string(mag);
      } else {
        if (mag != 1) out += std::to_string(mag) + "*";
        out += "t";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  };
  if (standard()) {
    std::string den = dim == 0 ? "" : dim == 1 ? "(1 - t)" : "(1 - t)^" + std::to_string(dim);
    return "(" + poly(numerator) + ")" + (den.empty() ? "" : " / " + den);
  }
  std::string den;
  for (int w : weights) den += "(1 - t" + (w == 1 ? std::string() : "^" + std::to_string(w)) + ")";
  return "(" + poly(kpoly) + ") / " + den;
}

long long standard_monomial_count(std::span<const Monomial> gens, std::span<const int> weights, int d) {
  auto s = hilbert_series(gens, weights).expand(d);
  return s[static_cast<std::size_t>(d)];
}

}  // namespace tf
