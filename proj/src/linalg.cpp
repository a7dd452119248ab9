#include "flagcoh/linalg.hpp"

#include <utility>

#include "flagcoh/error.hpp"

namespace flagcoh {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Vector Matrix::operator*(const Vector& v) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (sgn(a) != 0 && sgn(v[c]) != 0) acc += a * v[c];
    }
    out[r] = acc;
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& m) const {
  Matrix out(rows_, m.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < m.cols_; ++c)
        if (sgn(m(k, c)) != 0) out(r, c) += a * m(k, c);
    }
  return out;
}

Matrix Matrix::operator-(const Matrix& m) const {
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= m.data_[i];
  return out;
}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead_row, k));
    const Rational inv = 1 / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    std::vector<std::size_t> support;
    for (std::size_t k = c; k < m.cols(); ++k)
      if (sgn(m(lead_row, k)) != 0) support.push_back(k);
    Rational product;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      const Rational f = m(r, c);
      for (auto k : support) {
        mpq_mul(product.get_mpq_t(), f.get_mpq_t(), m(lead_row, k).get_mpq_t());
        mpq_sub(m(r, k).get_mpq_t(), m(r, k).get_mpq_t(), product.get_mpq_t());
      }
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

Matrix nullspace(const Matrix& m) {
  Matrix r = m;
  const auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return row_space_basis(basis, m.cols());
}

Matrix row_space_basis(const std::vector<Vector>& vectors, std::size_t dim) {
  Matrix m = Matrix::from_rows(vectors, dim);
  const auto pivots = rref(m);
  Matrix out(pivots.size(), dim);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < dim; ++c) out(r, c) = m(r, c);
  return out;
}

bool in_row_span(const Matrix& basis, const Vector& v) {
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < basis.rows(); ++r) rows.push_back(basis.row(r));
  const std::size_t before = rank(Matrix::from_rows(rows, v.size()));
  rows.push_back(v);
  return rank(Matrix::from_rows(rows, v.size())) == before;
}

Rational determinant(Matrix m) {
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

Vector solve(Matrix m, Vector b) {
  const std::size_t n = m.rows();
  Matrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = b[r];
  }
  const auto pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw ConsistencyError("solve: matrix is singular");
  return aug.column(n);
}

}  // namespace flagcoh
