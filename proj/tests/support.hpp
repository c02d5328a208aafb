#pragma once

// Helpers shared by the unit tests, the property suites and the acceptance
// binary. The brute-force routines here work degree by degree with dense
// linear algebra and never touch a Groebner basis, so they serve as
// independent oracles for graded dimension counts.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "tf/diffalg.hpp"
#include "tf/homology.hpp"
#include "tf/ideal.hpp"
#include "tf/linalg.hpp"
#include "tf/matrix.hpp"
#include "tf/parse.hpp"
#include "tf/session.hpp"

namespace tft {

using K = tf::PrimeField;
using Q = tf::RationalField;
using Poly = tf::Polynomial<K>;
using Ring = tf::RingPtr<K>;

inline std::vector<std::string> numbered(int n, const std::string& stem = "x") {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
  return v;
}

template <class F = K>
tf::RingPtr<F> ring(std::vector<std::string> names, F field = F()) {
  return tf::PolyRing<F>::make(std::move(field), std::move(names));
}

template <class F>
tf::Polynomial<F> poly(const tf::RingPtr<F>& r, const std::string& text) {
  return tf::parse_polynomial(r, text);
}

template <class F>
std::vector<tf::Polynomial<F>> polys(const tf::RingPtr<F>& r, const std::string& text) {
  return tf::parse_polynomial_list(r, text);
}

template <class F>
tf::Ideal<F> ideal(const tf::RingPtr<F>& r, const std::string& text) {
  return tf::Ideal<F>(r, polys(r, text));
}

/// All exponent vectors of total degree d in n variables, lex order.
inline std::vector<std::vector<int>> exponent_vectors(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      e[static_cast<std::size_t>(i)] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, left - k);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, d);
  return out;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Coefficient vector of p over a fixed monomial list (standard grading,
/// component 0). Terms outside the list are ignored by design: callers pass
/// homogeneous input of the matching degree.
template <class F>
std::vector<typename F::Element> coordinates(const tf::Polynomial<F>& p, const std::vector<tf::Monomial>& basis) {
  const F& k = p.field();
  std::vector<typename F::Element> row(basis.size(), k.zero());
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i] == t.monomial) {
        row[i] = t.coefficient;
        break;
      }
    }
  }
  return row;
}

template <class F>
std::vector<tf::Monomial> monomials_of_degree(const tf::RingPtr<F>& r, int d) {
  std::vector<tf::Monomial> out;
  if (d < 0) return out;
  for (const auto& e : exponent_vectors(r->nvars(), d)) out.push_back(r->monomial(e));
  return out;
}

/// Spanning set of the degree-d part of the ideal generated by homogeneous
/// polynomials (standard grading): every monomial multiple of every generator.
template <class F>
std::vector<tf::Polynomial<F>> degree_piece_spanning_set(const tf::RingPtr<F>& r,
                                                        const std::vector<tf::Polynomial<F>>& gens, int d) {
  std::vector<tf::Polynomial<F>> out;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int e = d - g.degree();
    if (e < 0) continue;
    for (const auto& m : monomials_of_degree(r, e)) out.push_back(g.times_term(m, r->field().one()));
  }
  return out;
}

/// dim_k I_d by dense elimination.
template <class F>
long long brute_ideal_dim(const tf::RingPtr<F>& r, const std::vector<tf::Polynomial<F>>& gens, int d) {
  auto basis = monomials_of_degree(r, d);
  std::vector<std::vector<typename F::Element>> rows;
  for (const auto& p : degree_piece_spanning_set(r, gens, d)) rows.push_back(coordinates(p, basis));
  if (rows.empty()) return 0;
  return tf::matrix_rank(r->field(), std::move(rows));
}

/// dim_k (R/I)_d by dense elimination.
template <class F>
long long brute_hilbert_function(const tf::RingPtr<F>& r, const std::vector<tf::Polynomial<F>>& gens, int d) {
  return binomial(r->nvars() + d - 1, d) - brute_ideal_dim(r, gens, d);
}

/// Membership of a homogeneous f in (gens) by linear algebra in degree deg f.
template <class F>
bool brute_contains(const tf::RingPtr<F>& r, const std::vector<tf::Polynomial<F>>& gens, const tf::Polynomial<F>& f) {
  if (f.is_zero()) return true;
  int d = f.degree();
  auto basis = monomials_of_degree(r, d);
  std::vector<std::vector<typename F::Element>> rows;
  for (const auto& p : degree_piece_spanning_set(r, gens, d)) rows.push_back(coordinates(p, basis));
  long long before = rows.empty() ? 0 : tf::matrix_rank(r->field(), rows);
  rows.push_back(coordinates(f, basis));
  return tf::matrix_rank(r->field(), std::move(rows)) == before;
}

/// Random polynomial with `terms` terms of total degree exactly d (when
/// homogeneous) or at most d.
template <class F>
tf::Polynomial<F> random_poly(const tf::RingPtr<F>& r, std::mt19937& rng, int d, int terms, bool homogeneous = true) {
  const F& k = r->field();
  std::uniform_int_distribution<int> coeff(-20, 20);
  std::uniform_int_distribution<int> deg(0, d);
  tf::Polynomial<F> p(r);
  for (int i = 0; i < terms; ++i) {
    int dd = homogeneous ? d : deg(rng);
    auto all = exponent_vectors(r->nvars(), dd);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    int c = coeff(rng);
    if (c == 0) c = 1;
    p += tf::Polynomial<F>::term(r, r->monomial(all[pick(rng)]), k.from_int(c));
  }
  return p;
}

/// Pole order at t = 1 of K(t) / (1 - t)^n, by repeated synthetic division.
inline int pole_order(tf::IntPoly k, int n) {
  while (!k.empty() && k.back() == 0) k.pop_back();
  if (k.empty()) return -1;
  int vanish = 0;
  for (;;) {
    long long s = 0;
    for (auto c : k) s += c;
    if (s != 0) break;
    // k(t) = (1 - t) q(t): q_i = sum_{j <= i} k_j.
    tf::IntPoly q(k.size() - 1, 0);
    long long acc = 0;
    for (std::size_t i = 0; i + 1 < k.size(); ++i) {
      acc += k[i];
      q[i] = acc;
    }
    k = std::move(q);
    ++vanish;
  }
  return n - vanish;
}

}  // namespace tft
