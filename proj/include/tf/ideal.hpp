#pragma once

#include <climits>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tf/groebner.hpp"
#include "tf/hilbert.hpp"

namespace tf {

/// Height reported for the unit ideal.
inline constexpr int kInfiniteHeight = INT_MAX;

enum class SaturationMethod {
  IteratedColon,  ///< repeated colon ideals until the chain stabilises
  ExtraVariable,  ///< (I + (1 - z g)) intersected with the original ring
};

template <class F>
class Ideal;

template <class F>
struct SaturationResult;

/// Ideal of a polynomial ring: generators plus a lazily computed reduced
/// Groebner basis shared between copies.
template <class F>
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> generators);

  static Ideal zero(RingPtr<F> ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr<F> ring);
  /// The ideal generated by the given variables (all of them by default).
  static Ideal variables(RingPtr<F> ring, std::vector<int> which = {});

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Polynomial<F>>& generators() const { return gens_; }

  const GroebnerBasis<F>& gb() const;
  /// Reduced basis elements.
  const std::vector<Polynomial<F>>& basis() const { return gb().elements(); }

  /// All reduced-basis elements are homogeneous for the ring's grading.
  bool is_homogeneous() const;
  bool is_unit() const { return gb().is_unit(); }
  bool is_zero() const { return gb().elements().empty(); }

  bool contains(const Polynomial<F>& f) const;
  bool contains(const Ideal& o) const;
  bool operator==(const Ideal& o) const;

  Ideal operator+(const Ideal& o) const;
  Ideal operator*(const Ideal& o) const;
  Ideal intersect(const Ideal& o) const;

  /// (I : g) = {f : f g in I}.
  Ideal quotient(const Polynomial<F>& g) const;
  /// (I : J) as the intersection of the quotients by the generators of J.
  Ideal quotient(const Ideal& j) const;
  SaturationResult<F> saturate(const Polynomial<F>& g,
                               SaturationMethod method = SaturationMethod::IteratedColon) const;

  /// I intersected with k[keep], returned in the same ring.
  Ideal eliminate(const std::vector<int>& keep) const;

  /// Krull dimension of R/I; -1 for the unit ideal.
  int dim() const;
  /// dim R - dim R/I; kInfiniteHeight for the unit ideal.
  int height() const;
  HilbertSeries hilbert_series() const;
  bool radical_contains(const Polynomial<F>& f) const;
  /// g is a nonzerodivisor on R/I (false when g lies in I).
  bool is_nonzerodivisor(const Polynomial<F>& g) const;
  /// dim_k of the degree-d piece of I (homogeneous I only).
  long long degree_part_dim(int d) const;
  /// Largest k with I contained in (x_1..x_n)^k.
  int order() const;

  /// Copy of the ideal in another ring, mapping variable i to var_map[i].
  Ideal embed(const RingPtr<F>& target, std::span<const int> var_map) const;
  /// Same generators, ring with a different monomial order (or weights).
  Ideal with_ring(const RingPtr<F>& target) const;

  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::optional<GroebnerBasis<F>> gb;
  };

  RingPtr<F> ring_;
  std::vector<Polynomial<F>> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

template <class F>
struct SaturationResult {
  Ideal<F> ideal;
  /// Smallest k with (I : g^k) = (I : g^infinity).
  int steps = 0;
};

/// q with h = q g; throws when g does not divide h.
template <class F>
Polynomial<F> exact_quotient(const Polynomial<F>& h, const Polynomial<F>& g);

/// Height of K in R/I: dim(R/I) - dim(R/(K + I)), assuming R/I is
/// equidimensional.
template <class F>
int height_in_quotient(const Ideal<F>& k, const Ideal<F>& i);

/// mu((I + n^3)/n^3) for I inside n^2: the rank of the quadratic parts of
/// the generators. Throws when I is not contained in n^2.
template <class F>
int mu_mod_cube(const Ideal<F>& i);

/// Basis of the degree-d part of a homogeneous ideal (echelon form).
template <class F>
std::vector<Polynomial<F>> degree_part_basis(const Ideal<F>& i, int d);

/// Global switch for the Groebner basis cache shared by all ideals.
void set_gb_cache_enabled(bool enabled);
bool gb_cache_enabled();
/// Directory of the persistent cache; empty disables the disk layer.
void set_gb_cache_directory(const std::string& dir);
const std::string& gb_cache_directory();

}  // namespace tf
