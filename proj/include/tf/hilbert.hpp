#pragma once

#include <span>
#include <string>
#include <vector>

#include "tf/monomial.hpp"

namespace tf {

/// Univariate integer polynomial, coefficient of t^i at index i.
using IntPoly = std::vector<long long>;

/// Hilbert series K(t) / prod_i (1 - t^{w_i}) of a graded quotient. For the
/// standard grading it is also kept in lowest terms h(t) / (1 - t)^d.
struct HilbertSeries {
  IntPoly kpoly;             ///< numerator over the full denominator
  std::vector<int> weights;  ///< variable weights of the ambient ring
  IntPoly numerator;         ///< h(t); equals kpoly when the grading is not standard
  int dim = 0;               ///< pole order at t = 1 (Krull dimension)

  bool standard() const;
  /// Degree of the series as a rational function: deg K - sum of weights.
  int a_invariant() const;
  /// Multiplicity h(1) (standard grading).
  long long degree() const;
  /// Coefficients of t^0 .. t^up_to of the expanded series.
  std::vector<long long> expand(int up_to) const;
  std::string to_string() const;
};

/// Minimal generators of the monomial ideal (per component), in the input's
/// relative order after sorting by degree.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// K-polynomial of R/(gens) for the given weights (component ignored).
IntPoly kpolynomial(std::span<const Monomial> gens, std::span<const int> weights);

/// Krull dimension of k[x]/(gens); -1 for the unit ideal.
int monomial_dimension(std::span<const Monomial> gens, int nvars);

/// Series of R/(gens).
HilbertSeries hilbert_series(std::span<const Monomial> gens, std::span<const int> weights);

/// Series of F/M for a free module F = sum R(-shift_c) given the lead terms
/// of a Groebner basis of M (components taken from the monomials).
HilbertSeries module_hilbert_series(std::span<const Monomial> leads, std::span<const int> weights,
                                    std::span<const int> shifts, int rank);

/// Number of monomials of weighted degree d not in the ideal.
long long standard_monomial_count(std::span<const Monomial> gens, std::span<const int> weights, int d);

IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
void trim(IntPoly& p);

}  // namespace tf
