#include "wfa/linalg.hpp"

#include "wfa/error.hpp"

namespace wfa {

RowEchelon row_reduce(Matrix a) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
    }
    const Rational inv = Rational(1) / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!a(row, c).is_zero()) a(r, c) -= factor * a(row, c);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

std::size_t rank(const Matrix& a) { return row_reduce(a).rank(); }

std::vector<Vector> kernel(const Matrix& a) {
  const RowEchelon e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> left_kernel(const Matrix& a) { return kernel(a.transpose()); }

std::vector<Vector> column_space(const Matrix& a) {
  const RowEchelon e = row_reduce(a);
  std::vector<Vector> basis;
  basis.reserve(e.pivots.size());
  for (auto p : e.pivots) basis.push_back(a.column(p));
  return basis;
}

LinearSolution solve_linear(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) {
    throw DimensionError("solve_linear: matrix has " + std::to_string(a.rows()) +
                         " rows, right-hand side has " + std::to_string(b.size()));
  }
  Matrix aug(a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  aug.set_column(a.cols(), b);
  const RowEchelon e = row_reduce(aug);
  LinearSolution out;
  out.kernel_basis = kernel(a);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return out;
  Vector x(a.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, a.cols());
  out.particular = std::move(x);
  return out;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, Matrix::identity(n));
  const RowEchelon e = row_reduce(aug);
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] >= n)) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

Rational determinant(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("determinant of non-square matrix");
  Matrix m = a;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Rational();
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const Rational factor = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

bool in_span(const std::vector<Vector>& basis, const Vector& v) {
  if (basis.empty()) return v.is_zero();
  return solve_linear(Matrix::from_columns(basis, v.size()), v).particular.has_value();
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::from_roots(const std::vector<Rational>& roots) {
  Polynomial p({Rational(1)});
  for (const auto& r : roots) p = p * Polynomial({-r, Rational(1)});
  return p;
}

Rational Polynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational();
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Rational> Polynomial::divide_linear(const Rational& root) const {
  if (coeffs_.empty()) return {Polynomial(), Rational()};
  // synthetic division from the top coefficient down
  std::vector<Rational> q(coeffs_.size() - 1);
  Rational carry;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    carry = carry * root + coeffs_[k];
    if (k > 0) q[k - 1] = carry;
  }
  return {Polynomial(std::move(q)), carry};
}

Polynomial char_poly(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("characteristic polynomial of non-square matrix");
  // Faddeev-LeVerrier: exact over the rationals, divisions only by integers.
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix m = Matrix::zero(n, n);
  const Matrix id = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + id * c[n - k + 1];
    c[n - k] = -(a * m).trace() / Rational(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

bool roots_inside_unit_disk(const Polynomial& p) {
  if (!p.is_monic()) throw PreconditionError("roots_inside_unit_disk needs a monic polynomial");
  std::vector<Rational> a = p.coefficients();
  while (a.size() > 1) {
    const std::size_t n = a.size() - 1;
    const Rational& lead = a[n];
    const Rational& tail = a[0];
    if (tail.abs() >= lead.abs()) return false;
    // Schur transform (a_n p(z) - a_0 p*(z)) / z, real coefficients
    std::vector<Rational> next(n);
    for (std::size_t k = 0; k < n; ++k) next[k] = lead * a[k + 1] - tail * a[n - 1 - k];
    const Rational scale = Rational(1) / next[n - 1];
    for (auto& x : next) x *= scale;
    a = std::move(next);
  }
  return true;
}

Polynomial local_minimal_polynomial(const Matrix& m, const Vector& x) {
  if (!m.is_square() || m.cols() != x.size()) throw DimensionError("local minimal polynomial");
  if (x.is_zero()) return Polynomial({Rational(1)});
  std::vector<Vector> krylov{x};
  Vector v = m * x;
  while (true) {
    const auto sol = solve_linear(Matrix::from_columns(krylov, x.size()), v);
    if (sol.particular) {
      std::vector<Rational> q(krylov.size() + 1);
      for (std::size_t i = 0; i < krylov.size(); ++i) q[i] = -(*sol.particular)[i];
      q.back() = 1;
      return Polynomial(std::move(q));
    }
    krylov.push_back(v);
    v = m * v;
  }
}


Vector IncrementalBasis::reduce(Vector v) const {
  if (v.size() != dim_) throw DimensionError("IncrementalBasis: wrong vector size");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = v[pivots_[i]];
    if (!f.is_zero()) v -= rows_[i] * f;
  }
  return v;
}

bool IncrementalBasis::contains(const Vector& v) const { return reduce(v).is_zero(); }

bool IncrementalBasis::add(const Vector& v) {
  Vector r = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && r[p].is_zero()) ++p;
  if (p == dim_) return false;
  r *= Rational(1) / r[p];
  // keep rows fully reduced on their pivots
  for (auto& row : rows_) {
    const Rational f = row[p];
    if (!f.is_zero()) row -= r * f;
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

}  // namespace wfa
