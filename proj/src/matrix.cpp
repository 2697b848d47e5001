#include "wfa/matrix.hpp"

#include "wfa/error.hpp"

namespace wfa {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": size " + std::to_string(a) + " vs " +
                         std::to_string(b));
  }
}

}  // namespace

Vector Vector::unit(std::size_t size, std::size_t index) {
  Vector v(size);
  v[index] = 1;
  return v;
}

bool Vector::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Vector& Vector::operator+=(const Vector& o) {
  require_same_size(size(), o.size(), "vector sum");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  require_same_size(size(), o.size(), "vector difference");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

Vector& Vector::operator*=(const Rational& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

Vector Vector::operator-() const {
  Vector out(*this);
  for (auto& e : out.entries_) e = -e;
  return out;
}

Rational dot(const Vector& a, const Vector& b) {
  require_same_size(a.size(), b.size(), "dot product");
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Vector concat(const Vector& a, const Vector& b) {
  std::vector<Rational> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return Vector(std::move(out));
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const Vector& diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(std::vector<Rational>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                      data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_row(std::size_t r, const Vector& v) {
  require_same_size(v.size(), cols_, "set_row");
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  require_same_size(v.size(), rows_, "set_column");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw DimensionError("block out of range");
  Matrix b(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  }
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionError("block out of range");
  for (std::size_t r = 0; r < b.rows_; ++r) {
    for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }
}

bool Matrix::is_zero() const {
  for (const auto& e : data_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Rational Matrix::trace() const {
  if (!is_square()) throw DimensionError("trace of non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& e : data_) e *= s;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix out(*this);
  for (auto& e : out.data_) e = -e;
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw DimensionError("matrix product: " + std::to_string(a.rows_) + "x" +
                         std::to_string(a.cols_) + " times " + std::to_string(b.rows_) + "x" +
                         std::to_string(b.cols_));
  }
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) p(i, j) += aik * b(k, j);
      }
    }
  }
  return p;
}

Vector operator*(const Matrix& a, const Vector& x) {
  require_same_size(a.cols_, x.size(), "matrix-vector product");
  Vector y(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    Rational acc;
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (!a(i, j).is_zero() && !x[j].is_zero()) acc += a(i, j) * x[j];
    }
    y[i] = acc;
  }
  return y;
}

Vector operator*(const Vector& x, const Matrix& a) {
  require_same_size(x.size(), a.rows_, "vector-matrix product");
  Vector y(a.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (!a(i, j).is_zero()) y[j] += x[i] * a(i, j);
    }
  }
  return y;
}

std::size_t Matrix::hash() const {
  std::size_t h = rows_ * 31 + cols_;
  for (const auto& e : data_) h ^= e.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Rational norm_bound_sq(const Matrix& a) {
  Rational s;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) s += a(r, c) * a(r, c);
  }
  return s;
}

Matrix block_matrix(const Matrix& top_left, const Matrix& top_right, const Matrix& bottom_left,
                    const Matrix& bottom_right) {
  if (top_left.rows() != top_right.rows() || bottom_left.rows() != bottom_right.rows() ||
      top_left.cols() != bottom_left.cols() || top_right.cols() != bottom_right.cols()) {
    throw DimensionError("incompatible block shapes");
  }
  Matrix m(top_left.rows() + bottom_left.rows(), top_left.cols() + top_right.cols());
  m.set_block(0, 0, top_left);
  m.set_block(0, top_left.cols(), top_right);
  m.set_block(top_left.rows(), 0, bottom_left);
  m.set_block(top_left.rows(), top_left.cols(), bottom_right);
  return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  return block_matrix(a, Matrix::zero(a.rows(), b.cols()), Matrix::zero(b.rows(), a.cols()), b);
}

}  // namespace wfa
