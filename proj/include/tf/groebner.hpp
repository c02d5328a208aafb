#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "tf/matrix.hpp"
#include "tf/polynomial.hpp"

namespace tf {

/// Work counters of a Buchberger run. They are deterministic for a fixed
/// input and are what reports use in place of wall-clock timings.
struct GroebnerStats {
  long pairs = 0;            ///< S-pairs (and queued generators) reduced
  long reductions = 0;       ///< single reduction steps
  long zero_reductions = 0;  ///< pairs that reduced to zero
  long chain_skipped = 0;    ///< pairs removed by the chain criterion
  long product_skipped = 0;  ///< pairs removed by the coprime-lead criterion

  GroebnerStats& operator+=(const GroebnerStats& o) {
    pairs += o.pairs;
    reductions += o.reductions;
    zero_reductions += o.zero_reductions;
    chain_skipped += o.chain_skipped;
    product_skipped += o.product_skipped;
    return *this;
  }
};

/// Work done by every Groebner engine that ran on the calling thread.
/// Callers reset it to measure a single operation.
GroebnerStats& thread_work_counters();

struct GroebnerOptions {
  /// Degree shift of each free-module component (empty means all zero).
  std::vector<int> shifts;
  /// When >= 0, only pairs of sugar degree <= bound are processed. For
  /// homogeneous input the result is a truncated basis that is correct up to
  /// that degree.
  int degree_bound = -1;
  /// Also express every basis element in terms of the input generators.
  bool track_cofactors = false;
  /// Treat inputs as vectors even if they only use component 0.
  bool module_mode = false;
};

/// A reduced Groebner basis (of an ideal or of a submodule of a free module)
/// with monic elements sorted by increasing lead monomial.
template <class F>
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr<F> ring, std::vector<Polynomial<F>> elements, GroebnerStats stats,
                std::vector<int> shifts, int truncated_at);

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Polynomial<F>>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const GroebnerStats& stats() const { return stats_; }
  const std::vector<int>& shifts() const { return shifts_; }
  /// Degree bound used for truncation, or -1 for a complete basis.
  int truncated_at() const { return truncated_at_; }
  bool is_truncated() const { return truncated_at_ >= 0; }

  /// True when the basis is {1}, i.e. the ideal is the whole ring.
  bool is_unit() const;
  std::vector<Monomial> lead_monomials() const;

  /// Remainder of f: no term is divisible by a lead monomial of the basis.
  Polynomial<F> normal_form(const Polynomial<F>& f) const;
  bool contains(const Polynomial<F>& f) const { return normal_form(f).is_zero(); }

  /// Cofactors of each element in terms of the original generators; only
  /// available when computed with track_cofactors.
  bool has_cofactors() const { return !cofactors_.empty() || elements_.empty(); }
  const std::vector<std::vector<Polynomial<F>>>& cofactors() const { return cofactors_; }
  void set_cofactors(std::vector<std::vector<Polynomial<F>>> c) { cofactors_ = std::move(c); }

  bool operator==(const GroebnerBasis& o) const { return elements_ == o.elements_; }

 private:
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> elements_;
  GroebnerStats stats_;
  std::vector<int> shifts_;
  int truncated_at_ = -1;
  std::vector<std::vector<Polynomial<F>>> cofactors_;
};

/// Reduced Groebner basis of the ideal (or submodule) generated by `gens`.
template <class F>
GroebnerBasis<F> buchberger(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens,
                            const GroebnerOptions& options = {});

/// Groebner basis of the column span of M (position-over-term order).
template <class F>
GroebnerBasis<F> module_buchberger(const PolyMatrix<F>& m, const GroebnerOptions& options = {});

/// Full normal form of f with respect to an arbitrary list of divisors.
template <class F>
Polynomial<F> reduce(const Polynomial<F>& f, const std::vector<Polynomial<F>>& divisors);

/// Cofactors c with f = sum c_i gens_i, or nullopt when f is not in the
/// ideal/submodule generated by gens.
template <class F>
std::optional<std::vector<Polynomial<F>>> lift(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens,
                                               const Polynomial<F>& f);

/// Columns generating the kernel of M. With `minimal` (graded input only)
/// the columns form a minimal generating set. `row_shifts` are the degrees
/// of the target basis vectors; the source degrees are inferred.
template <class F>
PolyMatrix<F> syzygies(const PolyMatrix<F>& m, std::span<const int> row_shifts = {}, bool minimal = false,
                       GroebnerStats* stats = nullptr);

/// Indices of a minimal generating subset of homogeneous `gens` (graded
/// Nakayama; lower degrees first, then input order).
template <class F>
std::vector<int> minimal_generator_indices(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens,
                                           std::span<const int> shifts = {}, GroebnerStats* stats = nullptr);

/// Weighted degree of a vector term including its component shift.
inline int shifted_degree(const Monomial& m, std::span<const int> shifts) {
  return m.degree + (m.component < shifts.size() ? shifts[m.component] : 0);
}

/// Degree of the leading form of a vector: max shifted degree over terms.
template <class F>
int shifted_degree(const Polynomial<F>& p, std::span<const int> shifts) {
  int d = -1;
  for (const auto& t : p.terms()) d = std::max(d, shifted_degree(t.monomial, shifts));
  return d;
}

}  // namespace tf
