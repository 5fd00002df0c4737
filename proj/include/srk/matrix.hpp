// Copyright 2026 The srkbench Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense matrices over GF(q) and the rank-based subspace queries built on them.

#ifndef SRK_MATRIX_HPP_
#define SRK_MATRIX_HPP_

#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "srk/gf.hpp"

namespace srk {

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(rows * cols, 0) {
    if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
  }
  Matrix(int rows, int cols, std::vector<Elem> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (static_cast<int>(entries_.size()) != rows * cols)
      throw Error("matrix entry count does not match its shape");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Elem operator()(int r, int c) const { return entries_[r * cols_ + c]; }
  Elem& operator()(int r, int c) { return entries_[r * cols_ + c]; }
  std::span<const Elem> entries() const { return entries_; }
  bool is_zero() const {
    for (Elem x : entries_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend auto operator<=>(const Matrix& a, const Matrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elem> entries_;
};

inline Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

// [a | b]
inline Matrix hconcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error("hconcat: row counts differ");
  Matrix out(a.rows(), a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (int c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

inline Matrix add(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("add: shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out(r, c) = f.add(a(r, c), b(r, c));
  return out;
}

inline Matrix sub(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("sub: shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out(r, c) = f.sub(a(r, c), b(r, c));
  return out;
}

// Gaussian elimination over GF(q).
inline int rank(const Field& f, Matrix m) {
  const int rows = m.rows(), cols = m.cols();
  int rk = 0;
  for (int c = 0; c < cols && rk < rows; ++c) {
    int pivot = -1;
    for (int r = rk; r < rows; ++r) {
      if (m(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rk)
      for (int cc = c; cc < cols; ++cc) std::swap(m(pivot, cc), m(rk, cc));
    const Elem inv = f.inv(m(rk, c));
    for (int r = rk + 1; r < rows; ++r) {
      if (m(r, c) == 0) continue;
      const Elem factor = f.mul(m(r, c), inv);
      for (int cc = c; cc < cols; ++cc) m(r, cc) = f.sub(m(r, cc), f.mul(factor, m(rk, cc)));
    }
    ++rk;
  }
  return rk;
}

// dim(col X ∩ col Y) = rk X + rk Y - rk [X | Y].
inline int col_space_intersection_dim(const Field& f, const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows()) throw Error("column-space intersection needs equal row counts");
  return rank(f, x) + rank(f, y) - rank(f, hconcat(x, y));
}

inline int row_space_intersection_dim(const Field& f, const Matrix& x, const Matrix& y) {
  if (x.cols() != y.cols()) throw Error("row-space intersection needs equal column counts");
  return col_space_intersection_dim(f, transpose(x), transpose(y));
}

// Matrix whose row-major entries are the base-q digits of idx, first entry
// most significant.
inline Matrix matrix_from_index(int rows, int cols, int q, std::uint64_t idx) {
  Matrix m(rows, cols);
  for (int k = rows * cols - 1; k >= 0; --k) {
    m(k / cols, k % cols) = static_cast<Elem>(idx % q);
    idx /= q;
  }
  return m;
}

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 24;

// All q^(rows*cols) matrices in lexicographic entry order.
class MatrixRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Matrix;
    using difference_type = std::ptrdiff_t;
    using pointer = const Matrix*;
    using reference = const Matrix&;

    iterator() = default;
    iterator(const MatrixRange* r, std::uint64_t i) : range_(r), index_(i) {
      if (range_ && index_ < range_->count_) current_ = Matrix(range_->rows_, range_->cols_);
    }
    const Matrix& operator*() const { return current_; }
    const Matrix* operator->() const { return &current_; }
    iterator& operator++() {
      ++index_;
      // Odometer increment, last entry fastest.
      auto n = range_->rows_ * range_->cols_;
      for (int k = n - 1; k >= 0; --k) {
        Elem& e = current_(k / range_->cols_, k % range_->cols_);
        if (++e < range_->q_) break;
        e = 0;
      }
      return *this;
    }
    void operator++(int) { ++*this; }
    bool operator==(const iterator& o) const { return index_ == o.index_; }

   private:
    const MatrixRange* range_ = nullptr;
    std::uint64_t index_ = 0;
    Matrix current_;
  };

  MatrixRange(int rows, int cols, const Field& f, std::uint64_t budget) : rows_(rows), cols_(cols), q_(f.q()) {
    count_ = 1;
    for (int i = 0; i < rows * cols; ++i) {
      if (count_ > budget / static_cast<std::uint64_t>(q_))
        throw BudgetExceeded("matrix enumeration of " + std::to_string(rows) + "x" + std::to_string(cols) +
                             " over GF(" + std::to_string(q_) + ") exceeds budget");
      count_ *= q_;
    }
  }

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, count_); }
  std::uint64_t size() const { return count_; }

 private:
  int rows_, cols_, q_;
  std::uint64_t count_ = 0;
};

inline MatrixRange enumerate_matrices(int rows, int cols, const Field& f,
                                      std::uint64_t budget = kDefaultEnumerationBudget) {
  return MatrixRange(rows, cols, f, budget);
}

}  // namespace srk

#endif  // SRK_MATRIX_HPP_
