#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tf/ideal.hpp"
#include "tf/matrix.hpp"

namespace tf {

enum class AlgebraRole { Base, Tangent, Rees };

/// A quotient k[X]/I, or a quotient of k[X,T] for the tangent and Rees
/// algebras. The X block is the first x_count variables; the T block follows.
template <class F>
struct PresentedAlgebra {
  Ideal<F> ideal;
  AlgebraRole role = AlgebraRole::Base;
  int x_count = 0;
  std::shared_ptr<const PresentedAlgebra<F>> base;
  /// Rees algebras: the element (of the base ring) saturated away.
  std::optional<Polynomial<F>> witness;

  const RingPtr<F>& ring() const { return ideal.ring(); }
  int dim() const { return ideal.dim(); }

  static PresentedAlgebra quotient(Ideal<F> i) {
    PresentedAlgebra a;
    a.x_count = i.ring()->nvars();
    a.ideal = std::move(i);
    return a;
  }
};

/// Finite module over a base algebra A = R/I given as the cokernel of a
/// matrix over R (taken modulo I). Rows are generators.
template <class F>
struct PresentedModule {
  std::shared_ptr<const PresentedAlgebra<F>> base;
  PolyMatrix<F> presentation;
  std::vector<int> row_degrees;
  int rank = 0;

  int generators() const { return presentation.rows(); }
  const RingPtr<F>& ring() const { return base->ring(); }
  /// Degree of each relation column (row shifts applied).
  std::vector<int> column_degrees() const;
  /// Relations over R: the presentation columns plus I times each basis vector.
  std::vector<Polynomial<F>> relations_over_ring() const;
  /// The module is zero.
  bool is_zero() const;
};

template <class F>
struct TorsionReport {
  Ideal<F> j;
  Ideal<F> j_sat;
  Polynomial<F> witness;  ///< element of the base ring
  int steps = 0;
  bool linear_type = true;
  /// A few generators of the saturation outside J (smallest degrees first).
  std::vector<Polynomial<F>> new_generators;
};

template <class F>
struct ReesResult {
  PresentedAlgebra<F> algebra;
  TorsionReport<F> report;
};

struct FtRecord {
  int index = 0;
  int height = 0;  ///< kInfiniteHeight for the unit ideal
  int bound = 0;
  bool met() const { return height >= bound; }
};

struct FtReport {
  int t = 0;
  int rank = 0;
  std::vector<FtRecord> records;
  bool verdict = true;
};

template <class F>
struct QuadricSpread {
  int quadrics = 0;           ///< dim_k of the degree-2 part
  int spread = 0;             ///< analytic spread of the ideal they generate
  int jacobian_rank = 0;      ///< rank of their Jacobian at a random point
  int height = 0;             ///< height of the ideal
  bool equals_twice_height = false;
};

/// Positive integer weights making every polynomial weighted-homogeneous,
/// preferring the current weights of the ring; nullopt when none is found.
template <class F>
std::optional<std::vector<int>> quasi_homogeneous_weights(const RingPtr<F>& ring,
                                                          const std::vector<Polynomial<F>>& polys);

/// Same algebra in a ring graded so that the ideal is homogeneous, when such
/// weights exist; otherwise the input unchanged.
template <class F>
PresentedAlgebra<F> graded_form(const PresentedAlgebra<F>& a);

/// n x m matrix (d f_i / d X_j) with rows indexed by variables.
template <class F>
PolyMatrix<F> jacobian(const Ideal<F>& i);

/// Kaehler differentials of A: the Jacobian presentation, rank dim A.
template <class F>
PresentedModule<F> omega_presentation(const PresentedAlgebra<F>& a);

/// Sym(E) as a quotient of k[X, T_1..T_n], T_j of the degree of generator j.
template <class F>
PresentedAlgebra<F> symmetric_algebra(const PresentedModule<F>& e);

/// Tangent algebra S = Sym(Omega).
template <class F>
PresentedAlgebra<F> tangent_algebra(const PresentedAlgebra<F>& a);

/// First (n - rank) x (n - rank) minor of the presentation that is a
/// nonzerodivisor on A, scanned by degree, then row set, then column set.
/// Throws NoWitness.
template <class F>
Polynomial<F> torsion_witness(const PresentedModule<F>& e);
template <class F>
Polynomial<F> torsion_witness(const PresentedAlgebra<F>& a);

/// Rees algebra Sym(E)/torsion by saturating with the torsion witness.
template <class F>
ReesResult<F> rees_algebra(const PresentedModule<F>& e, SaturationMethod method = SaturationMethod::IteratedColon);
template <class F>
ReesResult<F> rees_algebra(const PresentedAlgebra<F>& a, SaturationMethod method = SaturationMethod::IteratedColon);

/// Rees algebra of the ideal (gens) of the base ring A (as the module it
/// generates), saturating by the first nonzero generator.
template <class F>
ReesResult<F> rees_algebra_of_ideal(const PresentedAlgebra<F>& a, const std::vector<Polynomial<F>>& gens);

/// Fitt_i(E) = I_{n-i}(presentation) + I, the unit ideal when i >= n.
template <class F>
Ideal<F> fitting_ideal(const PresentedModule<F>& e, int i);

template <class F>
FtReport ft_check(const PresentedModule<F>& e, int t);

/// (F_t) for the differentials of A: edim A_p <= 2 dim A_p - t off the
/// regular locus.
template <class F>
bool edim_criterion(const PresentedAlgebra<F>& a, int t);

/// Krull dimension of the special fibre R(E)/(X)R(E).
template <class F>
int analytic_spread(const PresentedModule<F>& e);
template <class F>
int analytic_spread(const PresentedAlgebra<F>& a, const std::vector<Polynomial<F>>& ideal_gens);

template <class F>
QuadricSpread<F> spread_of_quadric_part(const Ideal<F>& i);

/// Omega/tau, presented by the Jacobian columns plus the T-linear elements
/// of the Rees ideal that are new.
template <class F>
PresentedModule<F> omega_mod_torsion(const PresentedAlgebra<F>& a, const ReesResult<F>* rees = nullptr);

/// Number of generators minus the largest t such that some t-minor of the
/// presentation is a nonzerodivisor on A.
template <class F>
int generic_rank(const PresentedModule<F>& e);

/// Scalar multiple with the smallest coefficients (prime fields) or a
/// primitive integer polynomial (rationals); for display only.
template <class F>
Polynomial<F> display_normalize(const Polynomial<F>& p);

}  // namespace tf
