#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "wfa/rational.hpp"

namespace wfa {

/// Dense vector of rationals. Whether it acts as a row or a column is
/// decided by the side it is multiplied from.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t size) : entries_(size) {}
  Vector(std::initializer_list<Rational> entries) : entries_(entries) {}
  explicit Vector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

  static Vector unit(std::size_t size, std::size_t index);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Rational> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool is_zero() const;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Rational& s);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(Vector a, const Rational& s) { return a *= s; }
  friend Vector operator*(const Rational& s, Vector a) { return a *= s; }
  Vector operator-() const;

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Rational> entries_;
};

Rational dot(const Vector& a, const Vector& b);

/// Concatenation (a, b).
Vector concat(const Vector& a, const Vector& b);

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix diagonal(const Vector& diag);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_row(std::size_t r, const Vector& v);
  void set_column(std::size_t c, const Vector& v);

  Matrix transpose() const;
  /// Copy of the rows x cols block starting at (r0, c0).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  bool is_zero() const;
  Rational trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  Matrix operator-() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  /// Column action A x.
  friend Vector operator*(const Matrix& a, const Vector& x);
  /// Row action x A.
  friend Vector operator*(const Vector& x, const Matrix& a);

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::size_t hash() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Sum of squared entries (squared Frobenius norm). Submultiplicative,
/// and a value < 1 implies spectral norm < 1.
Rational norm_bound_sq(const Matrix& a);

/// Block matrix [[top_left, top_right], [bottom_left, bottom_right]].
Matrix block_matrix(const Matrix& top_left, const Matrix& top_right, const Matrix& bottom_left,
                    const Matrix& bottom_right);

/// Block-diagonal sum of a and b.
Matrix direct_sum(const Matrix& a, const Matrix& b);

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const { return m.hash(); }
};

}  // namespace wfa
