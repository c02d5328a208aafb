#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tf/polynomial.hpp"

namespace tf {

/// Rectangular matrix of polynomials over one ring, stored row-major.
/// Columns double as free-module vectors: entry (i, j) sits in component i.
template <class F>
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr<F> ring, int rows, int cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols),
        entries_(static_cast<std::size_t>(rows * cols), Polynomial<F>(ring_)) {}

  static PolyMatrix from_rows(RingPtr<F> ring, const std::vector<std::vector<Polynomial<F>>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    PolyMatrix m(std::move(ring), r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) {
        throw Error("ragged matrix rows");
      }
      for (int j = 0; j < c; ++j) m.set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    return m;
  }
  /// Builds a matrix from free-module vectors; `rows` fixes the ambient rank.
  static PolyMatrix from_columns(RingPtr<F> ring, int rows, const std::vector<Polynomial<F>>& columns) {
    PolyMatrix m(ring, rows, static_cast<int>(columns.size()));
    for (int j = 0; j < m.cols_; ++j) {
      const auto& v = columns[static_cast<std::size_t>(j)];
      std::vector<TermList<F>> split(static_cast<std::size_t>(rows));
      for (const auto& t : v.terms()) {
        if (t.monomial.component >= rows) throw Error("vector component out of range");
        Term<F> s = t;
        s.monomial.component = 0;
        split[t.monomial.component].push_back(std::move(s));
      }
      for (int i = 0; i < rows; ++i) {
        m.set(i, j, Polynomial<F>::from_sorted(ring, std::move(split[static_cast<std::size_t>(i)])));
      }
    }
    return m;
  }
  /// A single row holding the given polynomials.
  static PolyMatrix row(RingPtr<F> ring, const std::vector<Polynomial<F>>& entries) {
    return from_rows(std::move(ring), {entries});
  }

  const RingPtr<F>& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Polynomial<F>& at(int i, int j) const { return entries_[index(i, j)]; }
  void set(int i, int j, Polynomial<F> p) {
    if (p.ring()) check_same_ring(*ring_, *p.ring());
    entries_[index(i, j)] = std::move(p);
  }

  /// Column j as a vector whose component i carries entry (i, j).
  Polynomial<F> column(int j) const {
    Polynomial<F> v(ring_);
    for (int i = 0; i < rows_; ++i) v += at(i, j).in_component(i);
    return v;
  }
  std::vector<Polynomial<F>> columns() const {
    std::vector<Polynomial<F>> out;
    out.reserve(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
  }
  std::vector<Polynomial<F>> row_entries(int i) const {
    std::vector<Polynomial<F>> out;
    for (int j = 0; j < cols_; ++j) out.push_back(at(i, j));
    return out;
  }

  PolyMatrix transpose() const {
    PolyMatrix t(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix dimensions do not match");
    PolyMatrix c(a.ring_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int j = 0; j < b.cols_; ++j) {
        Polynomial<F> s(a.ring_);
        for (int k = 0; k < a.cols_; ++k) {
          if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
          s += a.at(i, k) * b.at(k, j);
        }
        c.set(i, j, std::move(s));
      }
    }
    return c;
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& p) { return p.is_zero(); });
  }
  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < i; ++j)
        if (!(at(i, j) == at(j, i))) return false;
    return true;
  }

  PolyMatrix permuted(const std::vector<int>& row_order, const std::vector<int>& col_order) const {
    PolyMatrix p(ring_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        p.set(i, j, at(row_order[static_cast<std::size_t>(i)], col_order[static_cast<std::size_t>(j)]));
    return p;
  }

  PolyMatrix select_columns(const std::vector<int>& keep) const {
    PolyMatrix p(ring_, rows_, static_cast<int>(keep.size()));
    for (int i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < keep.size(); ++j) p.set(i, static_cast<int>(j), at(i, keep[j]));
    return p;
  }
  PolyMatrix hconcat(const PolyMatrix& o) const {
    if (o.rows_ != rows_) throw Error("matrix dimensions do not match");
    PolyMatrix p(ring_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) p.set(i, j, at(i, j));
      for (int j = 0; j < o.cols_; ++j) p.set(i, cols_ + j, o.at(i, j));
    }
    return p;
  }

  std::string to_string() const {
    std::string out = "[";
    for (int i = 0; i < rows_; ++i) {
      if (i) out += "; ";
      for (int j = 0; j < cols_; ++j) {
        if (j) out += ", ";
        out += at(i, j).to_string();
      }
    }
    return out + "]";
  }

 private:
  std::size_t index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw Error("matrix index out of range");
    return static_cast<std::size_t>(i * cols_ + j);
  }

  RingPtr<F> ring_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Polynomial<F>> entries_;
};

/// r x c matrix of distinct variables, filled row by row from `first`.
template <class F>
PolyMatrix<F> generic_matrix(const RingPtr<F>& ring, int r, int c, int first = 0) {
  if (r <= 0 || c <= 0) throw Error("matrix dimensions must be positive");
  if (first + r * c > ring->nvars()) {
    throw Error("generic " + std::to_string(r) + "x" + std::to_string(c) + " matrix needs " +
                std::to_string(r * c) + " variables");
  }
  PolyMatrix<F> m(ring, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.set(i, j, Polynomial<F>::variable(ring, first + i * c + j));
  return m;
}

/// Symmetric s x s matrix; the upper triangle is filled row by row.
template <class F>
PolyMatrix<F> symmetric_matrix(const RingPtr<F>& ring, int s) {
  if (s <= 0) throw Error("matrix dimensions must be positive");
  if (s * (s + 1) / 2 > ring->nvars()) {
    throw Error("symmetric " + std::to_string(s) + "x" + std::to_string(s) + " matrix needs " +
                std::to_string(s * (s + 1) / 2) + " variables");
  }
  PolyMatrix<F> m(ring, s, s);
  int v = 0;
  for (int i = 0; i < s; ++i) {
    for (int j = i; j < s; ++j) {
      auto x = Polynomial<F>::variable(ring, v++);
      m.set(i, j, x);
      m.set(j, i, x);
    }
  }
  return m;
}

/// The 2 x 4 matrix with rows (X_1..X_4) and (X_{r+1}..X_{r+4}): the Hankel
/// matrix for r = 1 and the generic matrix for r = 4.
template <class F>
PolyMatrix<F> catalecticant_matrix(const RingPtr<F>& ring, int r) {
  if (r < 1) throw Error("catalecticant shift must be at least 1");
  if (r + 4 > ring->nvars()) {
    throw Error("catalecticant(" + std::to_string(r) + ") needs " + std::to_string(r + 4) + " variables");
  }
  PolyMatrix<F> m(ring, 2, 4);
  for (int j = 0; j < 4; ++j) {
    m.set(0, j, Polynomial<F>::variable(ring, j));
    m.set(1, j, Polynomial<F>::variable(ring, r + j));
  }
  return m;
}

namespace detail {

/// Laplace expansion along the first selected row with memoisation on the
/// (row set, column set) pair.
template <class F>
class MinorTable {
 public:
  explicit MinorTable(const PolyMatrix<F>& m) : m_(m) {}

  const Polynomial<F>& det(const std::vector<int>& rows, std::uint64_t col_mask) {
    std::uint64_t row_mask = 0;
    for (int r : rows) row_mask |= std::uint64_t{1} << r;
    auto key = std::make_pair(row_mask, col_mask);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Polynomial<F> value(m_.ring());
    if (rows.size() == 1) {
      for (int j = 0; j < m_.cols(); ++j) {
        if (col_mask >> j & 1) value = m_.at(rows[0], j);
      }
    } else {
      std::vector<int> rest(rows.begin() + 1, rows.end());
      int sign = 1;
      for (int j = 0; j < m_.cols(); ++j) {
        if (!(col_mask >> j & 1)) continue;
        const auto& a = m_.at(rows[0], j);
        if (!a.is_zero()) {
          const auto& sub = det(rest, col_mask & ~(std::uint64_t{1} << j));
          if (!sub.is_zero()) {
            if (sign > 0) {
              value += a * sub;
            } else {
              value -= a * sub;
            }
          }
        }
        sign = -sign;
      }
    }
    return memo_.emplace(key, std::move(value)).first->second;
  }

 private:
  const PolyMatrix<F>& m_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, Polynomial<F>> memo_;
};

inline void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  if (k > n) return;
  for (;;) {
    visit(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace detail

/// A t x t minor together with the row and column sets it was taken from.
template <class F>
struct Minor {
  std::vector<int> rows;
  std::vector<int> cols;
  Polynomial<F> value;
};

/// All t x t minors in lexicographic (row set, column set) order, zeros
/// included.
template <class F>
std::vector<Minor<F>> all_minors(const PolyMatrix<F>& m, int t) {
  if (t < 1 || t > std::min(m.rows(), m.cols())) {
    throw Error("minor size " + std::to_string(t) + " out of range");
  }
  if (m.cols() > 63 || m.rows() > 63) throw Error("matrix too large for minor enumeration");
  detail::MinorTable<F> table(m);
  std::vector<Minor<F>> out;
  detail::for_each_subset(m.rows(), t, [&](const std::vector<int>& rows) {
    detail::for_each_subset(m.cols(), t, [&](const std::vector<int>& cols) {
      std::uint64_t mask = 0;
      for (int c : cols) mask |= std::uint64_t{1} << c;
      out.push_back({rows, cols, table.det(rows, mask)});
    });
  });
  return out;
}

/// Generators of the ideal of t x t minors: zeros dropped, duplicates up to
/// a nonzero scalar removed, first occurrence kept.
template <class F>
std::vector<Polynomial<F>> minors(const PolyMatrix<F>& m, int t) {
  std::vector<Polynomial<F>> out;
  std::vector<Polynomial<F>> seen;
  for (auto& minor : all_minors(m, t)) {
    if (minor.value.is_zero()) continue;
    auto key = minor.value.monic();
    bool duplicate = std::any_of(seen.begin(), seen.end(), [&](const auto& s) { return s == key; });
    if (duplicate) continue;
    seen.push_back(std::move(key));
    out.push_back(std::move(minor.value));
  }
  return out;
}

template <class F>
Polynomial<F> determinant(const PolyMatrix<F>& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  auto all = all_minors(m, m.rows());
  return all.front().value;
}

}  // namespace tf
