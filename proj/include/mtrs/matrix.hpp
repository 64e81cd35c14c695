#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mtrs/field.hpp"

namespace mtrs {

/// Dense row-major matrix over a Field.
class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols)
      : f_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(Field f, std::size_t rows, std::size_t cols, std::vector<Elem> data);

  static Matrix identity(const Field& f, std::size_t n);
  /// Builds a matrix from rows of element strings.
  static Matrix parse(const Field& f, const std::vector<std::vector<std::string>>& rows);

  const Field& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> data() const { return data_; }

  bool is_zero() const;
  std::vector<std::vector<std::string>> to_strings() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field f_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
/// Rows of `a` followed by rows of `b`.
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix select_columns(const Matrix& a, std::span<const std::size_t> cols);
Matrix select_rows(const Matrix& a, std::span<const std::size_t> rows);

/// Reduced row echelon form. Pivots are the leftmost nonzero column, taken
/// from the topmost available row and normalised to 1.
RrefResult rref(const Matrix& a);
std::size_t rank(const Matrix& a);
Elem det(const Matrix& a);
bool is_nonsingular(const Matrix& a);

/// Basis of the right kernel {v : a v = 0}, one basis vector per row.
Matrix null_space(const Matrix& a);

/// Basis (rows, in RREF) of rowspace(a) ∩ rowspace(b), computed from the
/// kernel of [a^T | -b^T].
Matrix row_space_intersection(const Matrix& a, const Matrix& b);

/// Row-reduced basis of the row space with zero rows dropped.
Matrix row_basis(const Matrix& a);

namespace detail {
/// Determinant of the n x n matrix held row-major in `buf`; destroys `buf`.
Elem det_in_place(const Field& f, std::span<Elem> buf, std::size_t n);
}  // namespace detail

}  // namespace mtrs
