#pragma once

// Small dense matrices over an exact field, with exact Gaussian elimination.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace sl2ybe {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& flat() const { return data_; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Right multiplication by diag(d).
  Matrix scale_columns(const std::vector<T>& d) const {
    Matrix r = *this;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) *= d[j];
    return r;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
    return r;
  }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.data_) x = s * x;
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Row echelon form in place by first-nonzero pivoting; returns the rank.
template <class T>
std::size_t row_reduce(std::vector<std::vector<T>>& rows) {
  std::size_t rank = 0;
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const T inv = T(1) / rows[rank][col];
    for (auto& x : rows[rank]) x = x * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const T factor = rows[r][col];
      for (std::size_t c = col; c < width; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

/// Rank of a family of equally sized vectors.
template <class T>
std::size_t rank_of(std::vector<std::vector<T>> vectors) {
  return row_reduce(vectors);
}

/// Coefficients c with sum_i c_i basis_i == target when such exist. When the
/// basis is dependent the free coefficients are set to zero.
template <class T>
std::optional<std::vector<T>> solve_combination(const std::vector<std::vector<T>>& basis,
                                                const std::vector<T>& target) {
  const std::size_t n = basis.size();
  const std::size_t len = target.size();
  // Augmented system: one row per coordinate, columns = basis vectors + target.
  std::vector<std::vector<T>> rows(len, std::vector<T>(n + 1, T(0)));
  for (std::size_t r = 0; r < len; ++r) {
    for (std::size_t c = 0; c < n; ++c) rows[r][c] = basis[c][r];
    rows[r][n] = target[r];
  }
  row_reduce(rows);
  std::vector<T> coeffs(n, T(0));
  for (const auto& row : rows) {
    std::size_t lead = 0;
    while (lead <= n && row[lead].is_zero()) ++lead;
    if (lead == n) return std::nullopt;  // 0 = nonzero
    if (lead < n) coeffs[lead] = row[n];
  }
  return coeffs;
}

}  // namespace sl2ybe
