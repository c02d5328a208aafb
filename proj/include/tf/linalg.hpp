#pragma once

#include <utility>
#include <vector>

namespace tf {

/// Dense row reduction over a coefficient field. Rows are modified in
/// place; returns the pivot columns in order.
template <class F>
std::vector<int> row_reduce(const F& k, std::vector<std::vector<typename F::Element>>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && k.is_zero(rows[p][c])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    auto inv = k.inv(rows[r][c]);
    for (auto& x : rows[r]) x = k.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || k.is_zero(rows[i][c])) continue;
      auto f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = k.sub(rows[i][j], k.mul(f, rows[r][j]));
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

template <class F>
int matrix_rank(const F& k, std::vector<std::vector<typename F::Element>> rows) {
  return static_cast<int>(row_reduce(k, rows).size());
}

/// Basis of {v : A v = 0}.
template <class F>
std::vector<std::vector<typename F::Element>> nullspace(const F& k, std::vector<std::vector<typename F::Element>> rows,
                                                        std::size_t cols) {
  auto pivots = row_reduce(k, rows);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::vector<typename F::Element>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Element> v(cols, k.zero());
    v[free] = k.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[static_cast<std::size_t>(pivots[i])] = k.neg(rows[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace tf
