#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "tropos/errors.hpp"
#include "tropos/scalar.hpp"

namespace tropos {

// Sorted 0-based row or column indices.
using IndexSet = std::vector<std::size_t>;

// Dense row-major matrix. Shared by the tropical and the series layers.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw DimensionError("entry count " + std::to_string(entries_.size()) + " does not match " +
                           std::to_string(rows_) + "x" + std::to_string(cols_));
    }
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw DimensionError("ragged matrix literal");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  std::span<const T> entries() const { return entries_; }

  Matrix submatrix(std::span<const std::size_t> row_set, std::span<const std::size_t> col_set) const {
    Matrix out(row_set.size(), col_set.size());
    for (std::size_t a = 0; a < row_set.size(); ++a) {
      for (std::size_t b = 0; b < col_set.size(); ++b) {
        if (row_set[a] >= rows_ || col_set[b] >= cols_) throw DimensionError("submatrix index out of range");
        out(a, b) = (*this)(row_set[a], col_set[b]);
      }
    }
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

using TropMatrix = Matrix<TropScalar>;

// 0 on the diagonal, −∞ elsewhere.
TropMatrix trop_identity(std::size_t n);

// Max-plus product (A ⊙ B)_{ij} = max_k A_{ik} + B_{kj}.
TropMatrix max_plus_product(const TropMatrix& a, const TropMatrix& b);

// True iff no entry is −∞.
bool is_finite(const TropMatrix& a);

// {0, 1, ..., n-1}.
IndexSet full_index_set(std::size_t n);

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<IndexSet> k_subsets(std::size_t n, std::size_t k);

// Shorthand for tests and diagnostics: "[[1,3],[4,-inf]]".
std::string to_string(const TropMatrix& a);

}  // namespace tropos
