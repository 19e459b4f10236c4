#include "acx/matrix.hpp"

#include <stdexcept>

namespace acx {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (int c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) { return from_rows(cols).transpose(); }

Vector Matrix::row(int r) const { return {data_.begin() + static_cast<long>(r) * cols_, data_.begin() + static_cast<long>(r + 1) * cols_}; }

Vector Matrix::column(int c) const {
  Vector v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::conj() const {
  Matrix t = *this;
  for (auto& x : t.data_) x = x.conj();
  return t;
}

Matrix Matrix::conj_transpose() const { return transpose().conj(); }

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix r(x.rows_, y.cols_);
  for (int i = 0; i < x.rows_; ++i)
    for (int k = 0; k < x.cols_; ++k) {
      const Scalar& a = x(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < y.cols_; ++j)
        if (!y(k, j).is_zero()) r(i, j) += a * y(k, j);
    }
  return r;
}

Vector operator*(const Matrix& x, const Vector& v) {
  if (x.cols_ != static_cast<int>(v.size())) throw std::invalid_argument("matrix shape mismatch");
  Vector r(x.rows_);
  for (int i = 0; i < x.rows_; ++i)
    for (int k = 0; k < x.cols_; ++k)
      if (!x(i, k).is_zero() && !v[k].is_zero()) r[i] += x(i, k) * v[k];
  return r;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix r = x;
  for (size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += y.data_[k];
  return r;
}

Matrix operator-(const Matrix& x, const Matrix& y) { return x + (-y); }

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& v : r.data_) v = -v;
  return r;
}

Matrix operator*(const Scalar& c, Matrix x) {
  for (auto& v : x.data_) v *= c;
  return x;
}

std::vector<int> Matrix::rref() {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int p = r;
    while (p < rows_ && (*this)(p, c).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != r)
      for (int k = 0; k < cols_; ++k) std::swap((*this)(p, k), (*this)(r, k));
    const Scalar inv = (*this)(r, c).inverse();
    for (int k = c; k < cols_; ++k) (*this)(r, k) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == r || (*this)(i, c).is_zero()) continue;
      const Scalar f = (*this)(i, c);
      for (int k = c; k < cols_; ++k)
        if (!(*this)(r, k).is_zero()) (*this)(i, k) -= f * (*this)(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int Matrix::rank() const {
  Matrix m = *this;
  return static_cast<int>(m.rref().size());
}

std::vector<Vector> Matrix::kernel() const {
  Matrix m = *this;
  const std::vector<int> pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols_);
    v[f] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  Matrix aug(rows_, 2 * cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
    aug(r, cols_ + r) = 1;
  }
  const auto pivots = aug.rref();
  if (static_cast<int>(pivots.size()) < rows_ || (rows_ > 0 && pivots[rows_ - 1] >= cols_))
    throw std::domain_error("singular matrix");
  Matrix inv(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) inv(r, c) = aug(r, cols_ + c);
  return inv;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (int r = 0; r < rows_; ++r) {
    out += r == 0 ? "[" : ", [";
    for (int c = 0; c < cols_; ++c) out += (c == 0 ? "" : ", ") + (*this)(r, c).to_string();
    out += "]";
  }
  return out + "]";
}

}  // namespace acx
