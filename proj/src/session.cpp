#include "tf/session.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "tf/parse.hpp"

namespace tf {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

/// Comment-free copy of the input with identical offsets, plus offset to
/// line/column mapping.
class Source {
 public:
  explicit Source(std::string_view text) : text_(text) {
    bool in_comment = false;
    line_starts_.push_back(0);
    for (std::size_t i = 0; i < text_.size(); ++i) {
      char c = text_[i];
      if (c == '\n') {
        in_comment = false;
        line_starts_.push_back(i + 1);
        continue;
      }
      if (!in_comment && (c == '#' || (c == '/' && i + 1 < text_.size() && text_[i + 1] == '/'))) {
        in_comment = true;
      }
      if (in_comment) text_[i] = ' ';
    }
  }

  const std::string& text() const { return text_; }

  SourcePos pos(std::size_t offset) const {
    auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
    std::size_t line = static_cast<std::size_t>(it - line_starts_.begin());
    return {line, offset - line_starts_[line - 1] + 1};
  }

  [[noreturn]] void fail(std::size_t offset, const std::string& what) const {
    auto p = pos(offset);
    throw ParseError(what, p.line, p.column);
  }

 private:
  std::string text_;
  std::vector<std::size_t> line_starts_;
};

/// Cursor over one statement [begin, end) of the source.
class Cursor {
 public:
  Cursor(const Source& src, std::size_t begin, std::size_t end) : src_(&src), pos_(begin), end_(end) {}

  void skip_space() {
    while (pos_ < end_ && is_space(src_->text()[pos_])) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= end_;
  }
  std::size_t offset() const { return pos_; }
  char peek() {
    skip_space();
    return pos_ < end_ ? src_->text()[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  /// Next run of non-space characters (stopping before ',', '[' and ']').
  std::string word() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < end_) {
      char c = src_->text()[pos_];
      if (is_space(c) || c == ',' || c == '[' || c == ']' || c == '=') break;
      ++pos_;
    }
    return src_->text().substr(start, pos_ - start);
  }

  std::string identifier(const char* what) {
    skip_space();
    std::size_t start = pos_;
    if (pos_ >= end_ || !is_ident_start(src_->text()[pos_])) fail(std::string("expected ") + what);
    while (pos_ < end_ && is_ident(src_->text()[pos_])) ++pos_;
    return src_->text().substr(start, pos_ - start);
  }

  long long integer(const char* what) {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < end_ && std::isdigit(static_cast<unsigned char>(src_->text()[pos_]))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(src_->text().data() + start, src_->text().data() + pos_, v);
    if (ec != std::errc() || ptr != src_->text().data() + pos_) {
      pos_ = start;
      fail(std::string(what) + " out of range");
    }
    return v;
  }

  /// Remaining text of the statement, trimmed, with its starting offset.
  std::pair<std::string, std::size_t> rest() {
    skip_space();
    std::size_t start = pos_;
    std::size_t stop = end_;
    while (stop > start && is_space(src_->text()[stop - 1])) --stop;
    pos_ = end_;
    return {src_->text().substr(start, stop - start), start};
  }

  [[noreturn]] void fail(const std::string& what) const { src_->fail(std::min(pos_, end_), what); }
  SourcePos here() const { return src_->pos(pos_); }

  /// Top-level comma separated items up to the matching ']' (the opening
  /// '[' already consumed).
  std::vector<std::pair<std::string, SourcePos>> bracket_items() {
    std::vector<std::pair<std::string, SourcePos>> items;
    std::size_t start = pos_;
    int depth = 0;
    for (; pos_ < end_; ++pos_) {
      char c = src_->text()[pos_];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && (c == ',' || c == ']')) {
        std::size_t s = start, e = pos_;
        while (s < e && is_space(src_->text()[s])) ++s;
        while (e > s && is_space(src_->text()[e - 1])) --e;
        if (s == e) src_->fail(s, "empty matrix entry");
        items.emplace_back(src_->text().substr(s, e - s), src_->pos(s));
        start = pos_ + 1;
        if (c == ']') {
          ++pos_;
          return items;
        }
      }
    }
    fail("expected ']'");
  }

 private:
  const Source* src_;
  std::size_t pos_;
  std::size_t end_;
};

MatrixSpec parse_matrix_spec(Cursor& c, const std::vector<std::string>& defined) {
  MatrixSpec spec;
  c.skip_space();
  spec.pos = c.here();
  if (c.accept('[')) {
    spec.kind = MatrixSpec::Kind::Literal;
    do {
      c.expect('[');
      spec.rows.push_back(c.bracket_items());
    } while (c.accept(','));
    c.expect(']');
    for (const auto& row : spec.rows) {
      if (row.size() != spec.rows.front().size()) c.fail("matrix rows have different lengths");
    }
    return spec;
  }
  std::string kind = c.identifier("a matrix");
  auto positive = [&](const char* what) {
    long long v = c.integer(what);
    if (v < 1 || v > 64) c.fail(std::string(what) + " must be between 1 and 64");
    return static_cast<int>(v);
  };
  if (kind == "generic") {
    spec.kind = MatrixSpec::Kind::Generic;
    spec.a = positive("row count");
    spec.b = positive("column count");
  } else if (kind == "symmetric") {
    spec.kind = MatrixSpec::Kind::Symmetric;
    spec.a = positive("matrix size");
  } else if (kind == "catalecticant") {
    spec.kind = MatrixSpec::Kind::Catalecticant;
    spec.a = positive("catalecticant shift");
  } else {
    if (std::find(defined.begin(), defined.end(), kind) == defined.end()) {
      throw ParseError("unknown matrix '" + kind + "'", spec.pos.line, spec.pos.column);
    }
    spec.kind = MatrixSpec::Kind::Named;
    spec.ref = kind;
  }
  return spec;
}

void parse_ring(Cursor& c, SessionAst& ast, const Source& src) {
  if (!ast.names.empty()) c.fail("ring already declared");
  while (!c.at_end()) {
    c.accept(',');
    std::size_t at = c.offset();
    std::string w = c.word();
    if (w.empty()) c.fail("expected a variable name");
    if (w == "weights") {
      while (!c.at_end()) {
        c.accept(',');
        long long v = c.integer("a weight");
        if (v < 1 || v > 1000) c.fail("weights must be between 1 and 1000");
        ast.weights.push_back(static_cast<int>(v));
      }
      if (ast.weights.size() != ast.names.size()) {
        src.fail(at, "expected " + std::to_string(ast.names.size()) + " weights, got " +
                         std::to_string(ast.weights.size()));
      }
      break;
    }
    auto dots = w.find("..");
    if (dots != std::string::npos) {
      // x1..x6: common prefix, numeric range.
      std::string lo = w.substr(0, dots), hi = w.substr(dots + 2);
      auto split = [&](const std::string& s) {
        std::size_t k = s.size();
        while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
        if (k == 0 || k == s.size()) src.fail(at, "malformed variable range '" + w + "'");
        return std::make_pair(s.substr(0, k), std::stoi(s.substr(k)));
      };
      auto [p1, a] = split(lo);
      auto [p2, b] = split(hi);
      if (p1 != p2 || a > b) src.fail(at, "malformed variable range '" + w + "'");
      for (int i = a; i <= b; ++i) ast.names.push_back(p1 + std::to_string(i));
    } else {
      if (!is_ident_start(w[0]) || !std::all_of(w.begin(), w.end(), is_ident)) {
        src.fail(at, "invalid variable name '" + w + "'");
      }
      ast.names.push_back(w);
    }
  }
  if (ast.names.empty()) c.fail("expected variable names");
  if (ast.names.size() > 40) c.fail("at most 40 variables are supported");
  auto sorted = ast.names;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) c.fail("duplicate variable '" + *dup + "'");
}

}  // namespace

SessionAst parse_session(std::string_view text) {
  Source src(text);
  const std::string& s = src.text();
  SessionAst ast;
  std::vector<std::string> matrix_names;
  std::vector<std::string> ideal_names;

  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size()) {
      if (s[i] == '[' || s[i] == '(') ++depth;
      if (s[i] == ']' || s[i] == ')') --depth;
      if (s[i] != ';') continue;
      if (depth != 0) src.fail(i, "unbalanced brackets");
    }
    Cursor c(src, start, i);
    start = i + 1;
    if (c.at_end()) continue;
    if (i == s.size()) c.fail("missing ';'");
    std::size_t stmt_begin = c.offset();
    SourcePos stmt_pos = src.pos(stmt_begin);
    std::string kw = c.identifier("a statement");
    if (kw == "char") {
      if (ast.characteristic) c.fail("characteristic already declared");
      if (!ast.names.empty()) c.fail("'char' must precede 'ring'");
      long long p = c.integer("a characteristic");
      if (p != 0 && (p > 2147483647LL || !is_prime(static_cast<std::uint32_t>(p)))) {
        c.fail("characteristic must be 0 or a prime below 2^31");
      }
      ast.characteristic = static_cast<std::uint32_t>(p);
      if (!c.at_end()) c.fail("unexpected text after characteristic");
    } else if (kw == "ring") {
      parse_ring(c, ast, src);
    } else if (kw == "matrix" || kw == "ideal") {
      if (ast.names.empty()) c.fail("'" + kw + "' before 'ring'");
      std::string name = c.identifier("a name");
      if (std::find(matrix_names.begin(), matrix_names.end(), name) != matrix_names.end() ||
          std::find(ideal_names.begin(), ideal_names.end(), name) != ideal_names.end()) {
        c.fail("'" + name + "' already defined");
      }
      c.expect('=');
      if (kw == "matrix") {
        MatrixDef def{name, parse_matrix_spec(c, matrix_names), stmt_pos};
        if (!c.at_end()) c.fail("unexpected text after matrix");
        ast.matrices.push_back(std::move(def));
        matrix_names.push_back(name);
      } else {
        IdealDef def;
        def.name = name;
        def.pos = stmt_pos;
        if (c.at_end()) c.fail("expected a polynomial list or 'minors'");
        Cursor look = c;
        std::string first = look.word();
        bool is_minors = first == "minors" && !look.at_end() &&
                         std::isdigit(static_cast<unsigned char>(look.peek()));
        if (is_minors) {
          c = look;
          def.minors = true;
          long long t = c.integer("a minor size");
          if (t < 1 || t > 64) c.fail("minor size must be between 1 and 64");
          def.t = static_cast<int>(t);
          def.matrix = parse_matrix_spec(c, matrix_names);
          if (!c.at_end()) c.fail("unexpected text after matrix");
        } else {
          auto [body, at] = c.rest();
          def.polys = body;
          def.polys_pos = src.pos(at);
        }
        ast.ideals.push_back(std::move(def));
        ideal_names.push_back(name);
      }
    } else if (kw == "check") {
      CheckStmt chk;
      chk.pos = stmt_pos;
      chk.op = c.identifier("an operation");
      while (!c.at_end()) {
        c.accept(',');
        std::string w = c.word();
        if (w.empty()) c.fail("unexpected character");
        chk.args.push_back(w);
      }
      ast.checks.push_back(std::move(chk));
    } else {
      src.fail(stmt_begin, "unknown statement '" + kw + "'");
    }
  }
  if (ast.names.empty() && (!ast.ideals.empty() || !ast.checks.empty())) {
    throw ParseError("missing 'ring' declaration", 1, 1);
  }
  return ast;
}

template <class F>
const Ideal<F>& Session<F>::ideal(const std::string& name) const {
  for (const auto& [n, i] : ideals) {
    if (n == name) return i;
  }
  throw Error("unknown ideal '" + name + "'");
}

namespace {

template <class F>
PolyMatrix<F> build_matrix(const Session<F>& session, const MatrixSpec& spec) {
  const auto& ring = session.ring;
  try {
    switch (spec.kind) {
      case MatrixSpec::Kind::Named: return session.matrices.at(spec.ref);
      case MatrixSpec::Kind::Generic: return generic_matrix(ring, spec.a, spec.b);
      case MatrixSpec::Kind::Symmetric: return symmetric_matrix(ring, spec.a);
      case MatrixSpec::Kind::Catalecticant: return catalecticant_matrix(ring, spec.a);
      case MatrixSpec::Kind::Literal: {
        std::vector<std::vector<Polynomial<F>>> rows;
        for (const auto& row : spec.rows) {
          auto& out = rows.emplace_back();
          for (const auto& [text, pos] : row) out.push_back(parse_polynomial(ring, text, pos.line, pos.column));
        }
        return PolyMatrix<F>::from_rows(ring, rows);
      }
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), spec.pos.line, spec.pos.column);
  }
  throw Error("unreachable");
}

}  // namespace

template <class F>
Session<F> instantiate(const SessionAst& ast, const F& field, std::optional<MonomialOrder> order) {
  Session<F> session;
  if (ast.names.empty()) throw ParseError("missing 'ring' declaration", 1, 1);
  if (!order && !ast.weights.empty() &&
      std::any_of(ast.weights.begin(), ast.weights.end(), [](int w) { return w != 1; })) {
    order = MonomialOrder::weighted_degrevlex();
  }
  session.ring = PolyRing<F>::make(field, ast.names, ast.weights, order);
  for (const auto& def : ast.matrices) session.matrices.emplace(def.name, build_matrix(session, def.spec));
  for (const auto& def : ast.ideals) {
    std::vector<Polynomial<F>> gens;
    if (def.minors) {
      auto m = build_matrix(session, def.matrix);
      if (def.t > std::min(m.rows(), m.cols())) {
        throw ParseError("minor size " + std::to_string(def.t) + " exceeds the matrix", def.pos.line,
                         def.pos.column);
      }
      gens = minors(m, def.t);
    } else {
      gens = parse_polynomial_list(session.ring, def.polys, def.polys_pos.line, def.polys_pos.column);
    }
    session.ideals.emplace_back(def.name, Ideal<F>(session.ring, std::move(gens)));
  }
  return session;
}

#define TF_INSTANTIATE_SESSION(F)                                                                     \
  template struct Session<F>;                                                                          \
  template Session<F> instantiate(const SessionAst&, const F&, std::optional<MonomialOrder>);

TF_INSTANTIATE_SESSION(PrimeField)
TF_INSTANTIATE_SESSION(RationalField)

}  // namespace tf
