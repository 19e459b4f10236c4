#pragma once

#include <string>
#include <vector>

#include "acx/scalar.hpp"

namespace acx {

using Vector = std::vector<Scalar>;

/// Dense matrix over Scalar with exact Gaussian elimination.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
  static Matrix identity(int n);
  /// Rows given as nested lists.
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<Vector>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Scalar& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  Vector row(int r) const;
  Vector column(int c) const;

  Matrix transpose() const;
  Matrix conj_transpose() const;
  Matrix conj() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Vector operator*(const Matrix& x, const Vector& v);
  friend Matrix operator+(const Matrix& x, const Matrix& y);
  friend Matrix operator-(const Matrix& x, const Matrix& y);
  Matrix operator-() const;
  friend Matrix operator*(const Scalar& c, Matrix x);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<int> rref();
  int rank() const;
  /// Basis of the right null space, one vector per free column (free entry 1).
  std::vector<Vector> kernel() const;
  /// Throws std::domain_error if singular.
  Matrix inverse() const;

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

}  // namespace acx
