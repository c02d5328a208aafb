#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tf/ideal.hpp"
#include "tf/matrix.hpp"

namespace tf {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Matrix constructor as written in the input; literal entries stay as text
/// until the coefficient field is known.
struct MatrixSpec {
  enum class Kind { Named, Generic, Symmetric, Catalecticant, Literal };
  Kind kind = Kind::Named;
  std::string ref;  ///< Named: a matrix defined earlier
  int a = 0;
  int b = 0;
  std::vector<std::vector<std::pair<std::string, SourcePos>>> rows;
  SourcePos pos;
};

struct MatrixDef {
  std::string name;
  MatrixSpec spec;
  SourcePos pos;
};

struct IdealDef {
  std::string name;
  bool minors = false;
  int t = 0;
  MatrixSpec matrix;  ///< minors only
  std::string polys;  ///< polynomial list otherwise
  SourcePos polys_pos;
  SourcePos pos;
};

struct CheckStmt {
  std::string op;
  std::vector<std::string> args;
  SourcePos pos;
};

/// Field-independent parse of an input file. Statements are ';'-terminated;
/// '#' and '//' start comments that run to the end of the line.
///
///   char <p>;                      (0 selects the rationals)
///   ring <names | x1..xN> [weights w1 .. wN];
///   matrix <M> = generic r c | symmetric s | catalecticant r | [[a, b], [c, d]];
///   ideal <I> = <f1, f2, ...> | minors t <M | constructor>;
///   check <op> <args...>;
struct SessionAst {
  std::optional<std::uint32_t> characteristic;
  std::vector<std::string> names;
  std::vector<int> weights;
  std::vector<MatrixDef> matrices;
  std::vector<IdealDef> ideals;
  std::vector<CheckStmt> checks;
};

/// Throws ParseError with the line and column of the offending token.
SessionAst parse_session(std::string_view text);

/// A parsed session bound to a coefficient field.
template <class F>
struct Session {
  RingPtr<F> ring;
  std::map<std::string, PolyMatrix<F>> matrices;
  std::vector<std::pair<std::string, Ideal<F>>> ideals;  ///< in input order

  /// Throws Error for an unknown name.
  const Ideal<F>& ideal(const std::string& name) const;
};

/// Builds the ring and every named object. Polynomial and semantic errors
/// (unknown variable, matrix too large for the ring) are ParseErrors
/// positioned in the original text.
template <class F>
Session<F> instantiate(const SessionAst& ast, const F& field, std::optional<MonomialOrder> order = std::nullopt);

}  // namespace tf
