#pragma once

#include <algorithm>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tf/ring.hpp"

namespace tf {

template <class F>
struct Term {
  Monomial monomial;
  typename F::Element coefficient;
};

template <class F>
using TermList = std::vector<Term<F>>;

/// Sparse polynomial (or free-module vector when terms carry nonzero
/// components) with terms kept in strictly decreasing order and no zero
/// coefficients.
template <class F>
class Polynomial {
 public:
  using Element = typename F::Element;

  Polynomial() = default;
  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}
  /// Normalizes arbitrary terms: sorts, merges equal monomials, drops zeros.
  Polynomial(RingPtr<F> ring, TermList<F> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize();
  }

  static Polynomial from_sorted(RingPtr<F> ring, TermList<F> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }
  static Polynomial constant(RingPtr<F> ring, Element c) {
    Polynomial p(std::move(ring));
    if (!p.ring_->field().is_zero(c)) p.terms_.push_back({p.ring_->one(), std::move(c)});
    return p;
  }
  static Polynomial from_int(RingPtr<F> ring, long long c) {
    auto e = ring->field().from_int(c);
    return constant(std::move(ring), std::move(e));
  }
  static Polynomial variable(RingPtr<F> ring, int i) {
    Polynomial p(std::move(ring));
    p.terms_.push_back({p.ring_->variable(i), p.ring_->field().one()});
    return p;
  }
  static Polynomial term(RingPtr<F> ring, const Monomial& m, Element c) {
    Polynomial p(std::move(ring));
    if (!p.ring_->field().is_zero(c)) p.terms_.push_back({m, std::move(c)});
    return p;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  const TermList<F>& terms() const { return terms_; }
  TermList<F>& mutable_terms() { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  /// Nonzero constant in component 0.
  bool is_unit() const {
    return terms_.size() == 1 && terms_[0].monomial.is_one() && terms_[0].monomial.component == 0;
  }

  const Monomial& lead_monomial() const { return terms_.front().monomial; }
  const Element& lead_coefficient() const { return terms_.front().coefficient; }

  /// Maximum weighted degree of a term; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree);
    return d;
  }
  int min_degree() const {
    int d = terms_.empty() ? -1 : terms_.front().monomial.degree;
    for (const auto& t : terms_) d = std::min(d, t.monomial.degree);
    return d;
  }
  int degree_in(int var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, int{t.monomial[var]});
    return d;
  }
  /// All terms share one weighted degree (after adding per-component shifts).
  bool is_homogeneous(std::span<const int> shifts = {}) const {
    if (terms_.empty()) return true;
    auto deg = [&](const Monomial& m) {
      return m.degree + (m.component < shifts.size() ? shifts[m.component] : 0);
    };
    int d = deg(terms_.front().monomial);
    for (const auto& t : terms_) {
      if (deg(t.monomial) != d) return false;
    }
    return true;
  }
  /// Largest component index used plus one.
  int rank() const {
    int r = 0;
    for (const auto& t : terms_) r = std::max(r, t.monomial.component + 1);
    return r;
  }

  Polynomial monic() const {
    if (terms_.empty()) return *this;
    return scaled(field().inv(lead_coefficient()));
  }
  Polynomial scaled(const Element& c) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial, field().mul(t.coefficient, c)});
    return r;
  }
  /// this * c * m, order preserving.
  Polynomial times_term(const Monomial& m, const Element& c) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      r.terms_.push_back({multiply(t.monomial, m), field().mul(t.coefficient, c)});
    }
    return r;
  }

  Polynomial operator-() const { return scaled(field().neg(field().one())); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_ring(*a.ring_, *b.ring_);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    const F& k = a.field();
    TermList<F> out;
    out.reserve(a.size() * b.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) {
        out.push_back({multiply(s.monomial, t.monomial), k.mul(s.coefficient, t.coefficient)});
      }
    }
    return Polynomial(a.ring_, std::move(out));
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(int k) const {
    Polynomial result = from_int(ring_, 1);
    Polynomial base = *this;
    while (k > 0) {
      if (k & 1) result *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ != b.ring_ && !(a.ring_ && b.ring_ && a.ring_->same_as(*b.ring_))) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].monomial == b.terms_[i].monomial)) return false;
      if (!a.field().equal(a.terms_[i].coefficient, b.terms_[i].coefficient)) return false;
    }
    return true;
  }

  /// Formal partial derivative with respect to variable `var`.
  Polynomial derivative(int var) const {
    if (var < 0 || var >= ring_->nvars()) throw UnknownVariable("#" + std::to_string(var));
    Polynomial r(ring_);
    const F& k = field();
    for (const auto& t : terms_) {
      int e = t.monomial[var];
      if (e == 0) continue;
      auto c = k.mul(t.coefficient, k.from_int(e));
      if (k.is_zero(c)) continue;
      Monomial m = t.monomial;
      m.exponents[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(e - 1);
      m.degree -= ring_->weight(var);
      if (e == 1) m.support &= ~(std::uint64_t{1} << var);
      r.terms_.push_back({m, c});
    }
    return r;
  }
  Polynomial derivative(const std::string& name) const { return derivative(ring_->index_of(name)); }

  Element evaluate(std::span<const Element> point) const {
    const F& k = field();
    Element acc = k.zero();
    for (const auto& t : terms_) {
      Element v = t.coefficient;
      for (int i = 0; i < ring_->nvars(); ++i) {
        for (int e = 0; e < t.monomial[i]; ++e) v = k.mul(v, point[static_cast<std::size_t>(i)]);
      }
      acc = k.add(acc, v);
    }
    return acc;
  }

  /// Moves the polynomial into `target`, sending variable i to variable
  /// var_map[i] (which must be a valid index of the target).
  Polynomial embed(const RingPtr<F>& target, std::span<const int> var_map) const {
    TermList<F> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (int i = 0; i < ring_->nvars(); ++i) {
        if (t.monomial[i] == 0) continue;
        auto& slot = m.exponents[static_cast<std::size_t>(var_map[static_cast<std::size_t>(i)])];
        unsigned s = unsigned{slot} + t.monomial[i];
        if (s > 255) throw ExponentOverflow();
        slot = static_cast<std::uint8_t>(s);
      }
      m.component = t.monomial.component;
      target->finish(m);
      out.push_back({m, t.coefficient});
    }
    return Polynomial(target, std::move(out));
  }
  /// Embedding into a ring whose first nvars() variables coincide with ours.
  Polynomial embed_prefix(const RingPtr<F>& target, int offset = 0) const {
    std::vector<int> map(static_cast<std::size_t>(ring_->nvars()));
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<int>(i) + offset;
    return embed(target, map);
  }

  /// Ring homomorphism into `target` given the images of the variables.
  Polynomial substitute(const RingPtr<F>& target, const std::vector<Polynomial>& images) const {
    Polynomial acc(target);
    const int n = ring_->nvars();
    std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(n));
    for (const auto& t : terms_) {
      Polynomial v = constant(target, t.coefficient);
      for (int i = 0; i < n; ++i) {
        int e = t.monomial[i];
        if (e == 0) continue;
        auto& cache = powers[static_cast<std::size_t>(i)];
        if (cache.empty()) cache.push_back(from_int(target, 1));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[static_cast<std::size_t>(i)]);
        v *= cache[static_cast<std::size_t>(e)];
      }
      if (t.monomial.component != 0) {
        for (auto& s : v.terms_) s.monomial.component = t.monomial.component;
      }
      acc += v;
    }
    return acc;
  }

  /// Terms living in component `c`, moved to component 0.
  Polynomial component(int c) const {
    Polynomial r(ring_);
    for (const auto& t : terms_) {
      if (t.monomial.component == c) {
        Monomial m = t.monomial;
        m.component = 0;
        r.terms_.push_back({m, t.coefficient});
      }
    }
    return r;
  }
  /// Copy with every term placed in component `c` (requires a ring element).
  Polynomial in_component(int c) const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.monomial.component = static_cast<std::uint16_t>(c);
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    const F& k = field();
    bool vector = rank() > 1 || (!terms_.empty() && terms_.front().monomial.component > 0);
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const auto& t = terms_[i];
      bool negative = k.is_negative(t.coefficient);
      Element mag = negative ? k.neg(t.coefficient) : t.coefficient;
      if (i == 0) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      std::string mono = ring_->format(t.monomial);
      bool unit = k.is_one(mag);
      if (!unit || mono == "1") {
        out += k.to_string(mag);
        if (mono != "1") out += "*" + mono;
      } else {
        out += mono;
      }
      if (vector) out += "*e" + std::to_string(t.monomial.component + 1);
    }
    return out;
  }

 private:
  void normalize() {
    if (!ring_) return;
    const auto& R = *ring_;
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term<F>& a, const Term<F>& b) { return R.compare(a.monomial, b.monomial) > 0; });
    const F& k = R.field();
    TermList<F> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().monomial == t.monomial) {
        out.back().coefficient = k.add(out.back().coefficient, t.coefficient);
      } else {
        if (!out.empty() && k.is_zero(out.back().coefficient)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && k.is_zero(out.back().coefficient)) out.pop_back();
    terms_ = std::move(out);
  }

  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    if (!a.ring_) return subtract ? -b : b;
    if (!b.ring_) return a;
    check_same_ring(*a.ring_, *b.ring_);
    const auto& R = *a.ring_;
    const F& k = R.field();
    Polynomial r(a.ring_);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int c;
      if (i == a.size()) {
        c = -1;
      } else if (j == b.size()) {
        c = 1;
      } else {
        c = R.compare(a.terms_[i].monomial, b.terms_[j].monomial);
      }
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        const auto& t = b.terms_[j++];
        r.terms_.push_back({t.monomial, subtract ? k.neg(t.coefficient) : t.coefficient});
      } else {
        auto s = subtract ? k.sub(a.terms_[i].coefficient, b.terms_[j].coefficient)
                          : k.add(a.terms_[i].coefficient, b.terms_[j].coefficient);
        if (!k.is_zero(s)) r.terms_.push_back({a.terms_[i].monomial, s});
        ++i;
        ++j;
      }
    }
    return r;
  }

  RingPtr<F> ring_;
  TermList<F> terms_;
};

/// Unweighted degree of a monomial in the variables [first, last), e.g. the
/// T-degree of a term of k[X,T].
inline int block_degree(const Monomial& m, int first, int last) {
  int d = 0;
  for (int i = first; i < last; ++i) d += m[i];
  return d;
}

}  // namespace tf
