#ifndef LGM_LINALG_HPP
#define LGM_LINALG_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "lgm/fields.hpp"

namespace lgm {

/// Dense row-major matrix over a field.
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(size_t n, const K& one) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  K& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const K& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape");
    Matrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a.at(i, k))) continue;
        for (size_t j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t i = 0; i < a.a_.size(); ++i)
      if (!(a.a_[i] == b.a_[i])) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<K> a_;
};

/// In-place reduced row echelon form; returns the pivot columns in order.
template <class K>
std::vector<size_t> rref(Matrix<K>& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t sel = row;
    while (sel < m.rows() && is_zero(m.at(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (size_t j = col; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
    K inv = m.at(row, col);
    for (size_t j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) / inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m.at(i, col))) continue;
      K f = m.at(i, col);
      for (size_t j = col; j < m.cols(); ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class K>
size_t rank(Matrix<K> m) {
  return rref(m).size();
}

/// Canonical kernel basis: one vector per free column, unit in that column.
template <class K>
std::vector<std::vector<K>> kernel_basis(Matrix<K> m, const K& one) {
  std::vector<size_t> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<K>> basis;
  for (size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<K> v(m.cols());
    v[f] = one;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = K{} - m.at(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace lgm

#endif
