#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tf/diffalg.hpp"
#include "tf/hilbert.hpp"

namespace tf {

/// beta_{i,j}: rank of the degree-j part of the generators of F_i.
struct BettiTable {
  std::map<std::pair<int, int>, int> entries;

  int at(int i, int j) const;
  /// Sum over j of beta_{i,j}.
  int total(int i) const;
  int length() const;
  /// Macaulay-style table: rows are j - i, columns are i.
  std::string to_string() const;
};

/// Graded free resolution 0 <- F_0 <- F_1 <- ... where maps[i] : F_{i+1} -> F_i.
template <class F>
struct FreeResolution {
  RingPtr<F> ring;
  std::vector<std::vector<int>> degrees;  ///< twists of F_0, F_1, ...
  std::vector<PolyMatrix<F>> maps;
  bool minimal = true;
  GroebnerStats stats;

  /// Projective dimension of the resolved module: index of the last nonzero F.
  int length() const { return static_cast<int>(maps.size()); }
  int rank(int i) const { return static_cast<int>(degrees[static_cast<std::size_t>(i)].size()); }
  BettiTable betti() const;
  /// sum_i (-1)^i sum_j beta_{i,j} t^j; equals the K-polynomial of the module.
  IntPoly alternating_sum() const;
  /// Every product maps[i] * maps[i+1] is zero.
  bool is_complex() const;
  /// No differential has a nonzero constant entry.
  bool entries_in_maximal_ideal() const;
};

/// Minimal graded free resolution of R/I. Throws NotGraded for
/// non-homogeneous input and Error for the unit ideal.
template <class F>
FreeResolution<F> resolve(const Ideal<F>& i);

/// Minimal graded free resolution of a module over R/I, as an R-module
/// (relations: the presentation plus I times every generator).
template <class F>
FreeResolution<F> resolve(const PresentedModule<F>& m);

struct ProjdimDepth {
  int pd = 0;
  int depth = 0;
};

template <class F>
ProjdimDepth projdim_depth(const PresentedAlgebra<F>& a);
template <class F>
ProjdimDepth projdim_depth(const PresentedModule<F>& m);

/// Krull dimension of the cokernel of the relation vectors (from the lead
/// terms of a module Groebner basis); -1 for the zero module.
template <class F>
int module_dimension(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& relations, int rank,
                     std::span<const int> shifts);

/// How Cohen-Macaulayness is decided. Reduction: substitute generic linear
/// forms for the last dim variables, certify they form a system of
/// parameters (the result is Artinian), and compare Hilbert series; exact,
/// standard grading only. Resolution: depth from the projective dimension.
/// Auto uses the reduction when it applies and the resolution otherwise.
enum class CmMethod { Auto, Reduction, Resolution };

template <class F>
bool is_cohen_macaulay(const PresentedAlgebra<F>& a, CmMethod method = CmMethod::Auto);
template <class F>
bool is_cohen_macaulay(const PresentedModule<F>& m, CmMethod method = CmMethod::Auto);

/// Cohen-Macaulay with last Betti number 1 (the type, read off the socle of
/// an Artinian reduction or from the resolution).
template <class F>
bool is_gorenstein(const PresentedAlgebra<F>& a, CmMethod method = CmMethod::Auto);

/// Gorenstein with a-invariant 0.
template <class F>
bool cy_type_check(const PresentedAlgebra<F>& a);

/// First Koszul homology of the stored generators of I, presented over R/I.
/// Generators are the first syzygies; relations are the Koszul syzygies
/// pulled back. The rank field is left at 0 (not computed).
template <class F>
PresentedModule<F> koszul_h1(const Ideal<F>& i);

/// Length of a regular sequence of random linear forms on R/I (standard
/// grading; probabilistic lower bound for depth, equal to it for large fields).
template <class F>
int depth_probe(const Ideal<F>& i, unsigned seed = 1);

}  // namespace tf
