#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "tropsolve/errors.hpp"
#include "tropsolve/trop.hpp"

namespace tropsolve {

/// Dense row-major matrix. Zero rows or columns are allowed.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) fail(ErrorCode::DimensionMismatch, "ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> row(std::size_t i) const {
    return std::span<const T>(data_).subspan(i * cols_, cols_);
  }
  std::span<T> row(std::size_t i) { return std::span<T>(data_).subspan(i * cols_, cols_); }

  /// Rows and columns are taken in the order given.
  Matrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
    Matrix out(rows.size(), cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = 0; b < cols.size(); ++b) out(a, b) = (*this)(rows[a], cols[b]);
    return out;
  }

  void append_row(std::span<const T> values) {
    if (rows_ == 0 && data_.empty()) cols_ = values.size();
    if (values.size() != cols_) fail(ErrorCode::DimensionMismatch, "row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using SignedMatrix = Matrix<SignedTrop>;
using TropMatrix = Matrix<Trop>;
using SignedVec = std::vector<SignedTrop>;
using TropVec = std::vector<Trop>;

/// |M| entrywise.
TropMatrix modulus_matrix(const SignedMatrix& m);

struct RowSides {
  Trop lhs;
  Trop rhs;
};

/// Both sides of max(a+ (.) x, b+) >= max(a- (.) x, b-) for one row.
RowSides eval_row(std::span<const SignedTrop> a, const SignedTrop& b, std::span<const Trop> x);

struct Sides {
  TropVec lhs;
  TropVec rhs;
};

/// Row-wise lhs_i = A+_i (.) x (+) b+_i and rhs_i = A-_i (.) x (+) b-_i.
Sides eval_sides(const SignedMatrix& a, std::span<const SignedTrop> b, std::span<const Trop> x);

}  // namespace tropsolve
