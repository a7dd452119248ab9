#pragma once

#include <cstddef>
#include <vector>

#include "flagcoh/rational.hpp"

namespace flagcoh {

// Dense exact matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  Vector operator*(const Vector& v) const;
  Matrix operator*(const Matrix& m) const;
  Matrix operator-(const Matrix& m) const;
  bool operator==(const Matrix& m) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

// Basis of {x : m x = 0}, returned as the rows of a matrix in reduced row
// echelon form (first nonzero entry of each row is 1).
Matrix nullspace(const Matrix& m);

// Rows of `vectors` reduced to a canonical echelon basis of their span.
Matrix row_space_basis(const std::vector<Vector>& vectors, std::size_t dim);

// True when v lies in the row span of `basis`.
bool in_row_span(const Matrix& basis, const Vector& v);

Rational determinant(Matrix m);

// Solves m x = b for square invertible m; throws ConsistencyError otherwise.
Vector solve(Matrix m, Vector b);

}  // namespace flagcoh
