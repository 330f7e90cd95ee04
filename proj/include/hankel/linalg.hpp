#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "hankel/kernels.hpp"
#include "hankel/rational.hpp"

namespace hankel {

static_assert(sizeof(ModP) == sizeof(std::uint32_t));

template <class K>
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, K(0)) {}
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  std::span<K> row(std::size_t i) { return {a_.data() + i * cols_, cols_}; }

 private:
  std::size_t rows_, cols_;
  std::vector<K> a_;
};

namespace detail {

// row_t -= c * row_p, from column `from` on
template <class K>
void eliminate_row(DenseMatrix<K>& m, std::size_t t, std::size_t p, const K& c, std::size_t from) {
  if constexpr (std::is_same_v<K, ModP>) {
    auto rt = m.row(t).subspan(from), rp = m.row(p).subspan(from);
    kernels::axpy_mod({reinterpret_cast<std::uint32_t*>(rt.data()), rt.size()},
                      {reinterpret_cast<const std::uint32_t*>(rp.data()), rp.size()}, c.value());
  } else {
    for (std::size_t j = from; j < m.cols(); ++j)
      if (!is_zero(m(p, j))) m(t, j) -= c * m(p, j);
  }
}

// Reduced row echelon form in place; returns pivot columns.
template <class K>
std::vector<std::size_t> echelon(DenseMatrix<K>& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    K inv = K(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t t = 0; t < m.rows(); ++t) {
      if (t == row || is_zero(m(t, col))) continue;
      K c = m(t, col);
      eliminate_row(m, t, row, c, col);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <class K>
std::size_t rank(DenseMatrix<K> m) {
  return detail::echelon(m, m.cols()).size();
}

// Some x with m x = rhs, or none if inconsistent.
template <class K>
std::optional<std::vector<K>> solve(const DenseMatrix<K>& m, const std::vector<K>& rhs) {
  DenseMatrix<K> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  auto pivots = detail::echelon(aug, m.cols());
  for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
    if (!is_zero(aug(i, m.cols()))) return std::nullopt;
  std::vector<K> x(m.cols(), K(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

}  // namespace hankel
