#pragma once

#include <optional>
#include <vector>

#include "wfa/matrix.hpp"

namespace wfa {

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

RowEchelon row_reduce(Matrix a);

std::size_t rank(const Matrix& a);

/// Basis of {x : A x = 0}, one vector per free column in increasing
/// column order; each basis vector has a 1 at its free column.
std::vector<Vector> kernel(const Matrix& a);

/// Basis of {x : x A = 0}.
std::vector<Vector> left_kernel(const Matrix& a);

/// Basis of the column space of A, taken from A's own pivot columns.
std::vector<Vector> column_space(const Matrix& a);

struct LinearSolution {
  std::optional<Vector> particular;  ///< empty when A x = b is inconsistent
  std::vector<Vector> kernel_basis;
};

/// Exact solve of A x = b. The particular solution sets free variables to 0.
LinearSolution solve_linear(const Matrix& a, const Vector& b);

std::optional<Matrix> inverse(const Matrix& a);

Rational determinant(const Matrix& a);

/// True when v lies in the span of the given vectors.
bool in_span(const std::vector<Vector>& basis, const Vector& v);

/// Polynomial with rational coefficients in ascending degree order.
/// The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);

  /// Monic polynomial with the given roots.
  static Polynomial from_roots(const std::vector<Rational>& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == Rational(1); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int k) const;
  Rational leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }
  Rational operator()(const Rational& x) const;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Quotient and remainder of division by (x - root).
  std::pair<Polynomial, Rational> divide_linear(const Rational& root) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// det(lambda E - A), monic of degree n.
Polynomial char_poly(const Matrix& a);

/// True iff every complex root of the monic polynomial p has modulus
/// strictly below 1 (Schur-Cohn recursion, exact). Roots on the unit circle
/// count as outside. Throws PreconditionError when p is not monic.
bool roots_inside_unit_disk(const Polynomial& p);

/// Monic minimal polynomial of x relative to M: the least-degree monic q
/// with q(M) x = 0.
Polynomial local_minimal_polynomial(const Matrix& m, const Vector& x);


/// Span of vectors added one at a time, kept in echelon form so that
/// membership tests cost O(n * rank).
class IncrementalBasis {
 public:
  explicit IncrementalBasis(std::size_t dim) : dim_(dim) {}

  /// Adds v when it is independent of the vectors seen so far.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  Vector reduce(Vector v) const;
  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace wfa
