#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tf/errors.hpp"
#include "tf/field.hpp"
#include "tf/monomial.hpp"

namespace tf {

enum class OrderKind { DegRevLex, WeightedDegRevLex, Lex, Elimination };

/// Monomial order. Elimination(b) compares the weighted degree in the first
/// b variables before falling back to weighted degrevlex, so any monomial
/// involving one of those variables exceeds every monomial free of them.
struct MonomialOrder {
  OrderKind kind = OrderKind::DegRevLex;
  int block = 0;

  static MonomialOrder degrevlex() { return {OrderKind::DegRevLex, 0}; }
  static MonomialOrder weighted_degrevlex() { return {OrderKind::WeightedDegRevLex, 0}; }
  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder elimination(int block) { return {OrderKind::Elimination, block}; }

  /// Accepts "degrevlex", "wdegrevlex", "lex", "elim:<b>".
  static MonomialOrder parse(const std::string& text) {
    if (text == "degrevlex" || text == "grevlex") return degrevlex();
    if (text == "wdegrevlex" || text == "weighted-degrevlex") return weighted_degrevlex();
    if (text == "lex") return lex();
    if (text.rfind("elim:", 0) == 0) return elimination(std::stoi(text.substr(5)));
    throw Error("unknown monomial order '" + text + "'");
  }

  std::string name() const {
    switch (kind) {
      case OrderKind::DegRevLex: return "degrevlex";
      case OrderKind::WeightedDegRevLex: return "wdegrevlex";
      case OrderKind::Lex: return "lex";
      case OrderKind::Elimination: return "elim:" + std::to_string(block);
    }
    return "?";
  }

  bool operator==(const MonomialOrder&) const = default;
};

template <class F>
class PolyRing;

template <class F>
using RingPtr = std::shared_ptr<const PolyRing<F>>;

/// k[x_1..x_n] with a positive integer grading and a monomial order. Rings
/// are immutable and shared by pointer; two rings are compatible when they
/// agree structurally.
template <class F>
class PolyRing {
 public:
  static RingPtr<F> make(F field, std::vector<std::string> names, std::vector<int> weights = {},
                         std::optional<MonomialOrder> order = std::nullopt) {
    return RingPtr<F>(new PolyRing(std::move(field), std::move(names), std::move(weights), order));
  }

  const F& field() const { return field_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& weights() const { return weights_; }
  int weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }
  bool standard_grading() const { return standard_; }
  const MonomialOrder& order() const { return order_; }

  std::optional<int> find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<int>(it - names_.begin());
  }
  int index_of(const std::string& name) const {
    auto i = find(name);
    if (!i) throw UnknownVariable(name);
    return *i;
  }

  Monomial one(int component = 0) const {
    Monomial m;
    m.component = static_cast<std::uint16_t>(component);
    return m;
  }
  Monomial variable(int i, int power = 1) const {
    Monomial m;
    if (power > 255) throw ExponentOverflow();
    m.exponents[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(power);
    m.degree = weights_[static_cast<std::size_t>(i)] * power;
    m.support = power > 0 ? std::uint64_t{1} << i : 0;
    return m;
  }
  Monomial monomial(std::span<const int> exponents, int component = 0) const {
    Monomial m;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (exponents[i] < 0 || exponents[i] > 255) throw ExponentOverflow();
      m.exponents[i] = static_cast<std::uint8_t>(exponents[i]);
    }
    finish(m);
    m.component = static_cast<std::uint16_t>(component);
    return m;
  }
  /// Recomputes degree and support after the exponents were edited.
  void finish(Monomial& m) const {
    int d = 0;
    for (int i = 0; i < nvars(); ++i) d += weights_[static_cast<std::size_t>(i)] * m[i];
    m.degree = d;
    m.support = support_of(m.exponents);
  }

  Monomial lcm(const Monomial& a, const Monomial& b) const { return tf::lcm(a, b, weights_); }

  /// Three-way comparison; components are compared first (position over
  /// term, lower index is larger).
  int compare(const Monomial& a, const Monomial& b) const {
    if (a.component != b.component) return a.component < b.component ? 1 : -1;
    switch (order_.kind) {
      case OrderKind::WeightedDegRevLex:
        if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
        return revlex(a, b);
      case OrderKind::DegRevLex:
        if (standard_) {
          if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
        } else {
          int da = a.total_degree(), db = b.total_degree();
          if (da != db) return da < db ? -1 : 1;
        }
        return revlex(a, b);
      case OrderKind::Lex:
        for (int i = 0; i < nvars(); ++i) {
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
      case OrderKind::Elimination: {
        int ba = 0, bb = 0;
        for (int i = 0; i < order_.block; ++i) {
          ba += weights_[static_cast<std::size_t>(i)] * a[i];
          bb += weights_[static_cast<std::size_t>(i)] * b[i];
        }
        if (ba != bb) return ba < bb ? -1 : 1;
        if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
        return revlex(a, b);
      }
    }
    return 0;
  }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  /// True when the order refines the grading, i.e. compares degree first.
  bool degree_compatible() const {
    return order_.kind == OrderKind::WeightedDegRevLex ||
           (order_.kind == OrderKind::DegRevLex && standard_);
  }

  std::string format(const Monomial& m) const {
    std::string out;
    for (int i = 0; i < nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += names_[static_cast<std::size_t>(i)];
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
  }

  bool same_as(const PolyRing& o) const {
    return this == &o || (field_ == o.field_ && names_ == o.names_ && weights_ == o.weights_ &&
                          order_ == o.order_);
  }

  /// Appends variables (names must be fresh).
  RingPtr<F> extended(const std::vector<std::string>& extra, const std::vector<int>& extra_weights,
                      std::optional<MonomialOrder> order = std::nullopt) const {
    auto names = names_;
    auto weights = weights_;
    names.insert(names.end(), extra.begin(), extra.end());
    if (extra_weights.empty()) {
      weights.insert(weights.end(), extra.size(), 1);
    } else {
      weights.insert(weights.end(), extra_weights.begin(), extra_weights.end());
    }
    return make(field_, std::move(names), std::move(weights), order ? order : order_);
  }
  /// Prepends variables, e.g. for elimination orders.
  RingPtr<F> prepended(const std::vector<std::string>& extra, const std::vector<int>& extra_weights,
                       MonomialOrder order) const {
    std::vector<std::string> names = extra;
    std::vector<int> weights = extra_weights.empty() ? std::vector<int>(extra.size(), 1) : extra_weights;
    names.insert(names.end(), names_.begin(), names_.end());
    weights.insert(weights.end(), weights_.begin(), weights_.end());
    return make(field_, std::move(names), std::move(weights), order);
  }
  RingPtr<F> with_order(MonomialOrder order) const { return make(field_, names_, weights_, order); }
  RingPtr<F> with_weights(std::vector<int> weights) const {
    MonomialOrder order = order_;
    bool unit = std::all_of(weights.begin(), weights.end(), [](int w) { return w == 1; });
    if (!unit && order.kind == OrderKind::DegRevLex) order = MonomialOrder::weighted_degrevlex();
    return make(field_, names_, std::move(weights), order);
  }

  /// A name not yet used in the ring, derived from `stem`.
  std::string fresh_name(const std::string& stem) const {
    std::string candidate = stem;
    for (int k = 1; find(candidate); ++k) candidate = stem + std::to_string(k);
    return candidate;
  }

 private:
  PolyRing(F field, std::vector<std::string> names, std::vector<int> weights,
           std::optional<MonomialOrder> order)
      : field_(std::move(field)), names_(std::move(names)), weights_(std::move(weights)) {
    if (names_.size() > static_cast<std::size_t>(kMaxVariables)) {
      throw Error("at most " + std::to_string(kMaxVariables) + " variables are supported");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (names_[i] == names_[j]) throw Error("duplicate variable name '" + names_[i] + "'");
      }
    }
    if (weights_.empty()) weights_.assign(names_.size(), 1);
    if (weights_.size() != names_.size()) throw Error("one weight per variable is required");
    for (int w : weights_) {
      if (w <= 0) throw Error("variable weights must be positive");
    }
    standard_ = std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
    if (order) {
      order_ = *order;
    } else {
      order_ = standard_ ? MonomialOrder::degrevlex() : MonomialOrder::weighted_degrevlex();
    }
    if (order_.kind == OrderKind::Elimination && (order_.block < 0 || order_.block > nvars())) {
      throw Error("elimination block out of range");
    }
  }

  int revlex(const Monomial& a, const Monomial& b) const {
    for (int i = nvars() - 1; i >= 0; --i) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }

  F field_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  MonomialOrder order_;
  bool standard_ = true;
};

template <class F>
void check_same_ring(const PolyRing<F>& a, const PolyRing<F>& b) {
  if (!a.same_as(b)) throw RingMismatch();
}

}  // namespace tf
