#include "wfa/power_limit.hpp"

#include "wfa/error.hpp"

namespace wfa {

namespace {

Matrix power(const Matrix& m, std::size_t k) {
  Matrix result = Matrix::identity(m.rows());
  Matrix base = m;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

// Splits vectors along ker((M-E)^n) + im((M-E)^n).
class FittingSplit {
 public:
  explicit FittingSplit(const Matrix& m) : m_(m), shifted_(m - Matrix::identity(m.rows())) {
    const Matrix nilpart = power(shifted_, m.rows());
    generalized_ = kernel(nilpart);
    std::vector<Vector> basis = generalized_;
    for (auto& v : column_space(nilpart)) basis.push_back(std::move(v));
    coordinates_ = *inverse(Matrix::from_columns(basis, m.rows()));
  }

  std::optional<Vector> limit(const Vector& x) const {
    const Vector c = coordinates_ * x;
    Vector fixed(x.size());
    for (std::size_t i = 0; i < generalized_.size(); ++i) fixed += generalized_[i] * c[i];
    if (!(shifted_ * fixed).is_zero()) return std::nullopt;  // Jordan growth
    const Vector rest = x - fixed;
    if (!roots_inside_unit_disk(local_minimal_polynomial(m_, rest))) return std::nullopt;
    return fixed;
  }

 private:
  const Matrix& m_;
  Matrix shifted_;
  std::vector<Vector> generalized_;
  Matrix coordinates_;
};

void require_square(const Matrix& m, const char* what) {
  if (!m.is_square()) throw DimensionError(std::string(what) + ": matrix must be square");
}

}  // namespace

std::optional<Vector> power_limit_vec(const Matrix& m, const Vector& x) {
  require_square(m, "power_limit_vec");
  if (m.cols() != x.size()) throw DimensionError("power_limit_vec: dimension mismatch");
  if (x.empty()) return x;
  return FittingSplit(m).limit(x);
}

std::optional<Matrix> power_limit_matrix(const Matrix& m) {
  require_square(m, "power_limit_matrix");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  const FittingSplit split(m);
  Matrix out(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto col = split.limit(Vector::unit(n, j));
    if (!col) return std::nullopt;
    out.set_column(j, *col);
  }
  return out;
}

Polynomial minimal_recurrence(const std::vector<Rational>& seq) {
  std::vector<Rational> conn{Rational(1)};
  std::vector<Rational> prev{Rational(1)};
  std::size_t length = 0;
  std::size_t shift = 1;
  Rational prev_disc = 1;
  for (std::size_t n = 0; n < seq.size(); ++n) {
    Rational disc = seq[n];
    for (std::size_t i = 1; i <= length && i < conn.size(); ++i) disc += conn[i] * seq[n - i];
    if (disc.is_zero()) {
      ++shift;
      continue;
    }
    const Rational factor = disc / prev_disc;
    std::vector<Rational> next = conn;
    if (next.size() < prev.size() + shift) next.resize(prev.size() + shift);
    for (std::size_t i = 0; i < prev.size(); ++i) next[i + shift] -= factor * prev[i];
    if (2 * length <= n) {
      prev = conn;
      length = n + 1 - length;
      prev_disc = disc;
      shift = 1;
    } else {
      ++shift;
    }
    conn = std::move(next);
  }
  // characteristic polynomial z^L C(1/z)
  std::vector<Rational> chi(length + 1);
  for (std::size_t k = 0; k <= length; ++k) {
    const std::size_t i = length - k;
    if (i < conn.size()) chi[k] = conn[i];
  }
  return Polynomial(std::move(chi));
}

std::optional<Rational> sequence_limit(const Vector& c, const Matrix& m, const Vector& y) {
  require_square(m, "sequence_limit");
  if (c.size() != m.rows() || y.size() != m.cols()) {
    throw DimensionError("sequence_limit: dimension mismatch");
  }
  const std::size_t n = m.rows();
  if (n == 0) return Rational();
  std::vector<Rational> terms;
  terms.reserve(2 * n);
  Vector v = y;
  for (std::size_t j = 0; j < 2 * n; ++j) {
    terms.push_back(dot(c, v));
    if (j + 1 < 2 * n) v = m * v;
  }
  Polynomial rest = minimal_recurrence(terms);
  int unit_roots = 0;
  while (rest.degree() >= 1) {
    auto [q, r] = rest.divide_linear(Rational(1));
    if (!r.is_zero()) break;
    rest = std::move(q);
    ++unit_roots;
  }
  if (unit_roots > 1 || !roots_inside_unit_disk(rest)) return std::nullopt;
  if (unit_roots == 0) return Rational();
  // q(shift) kills the decaying part, leaving q(1) * limit
  Rational t;
  const auto& q = rest.coefficients();
  for (std::size_t i = 0; i < q.size(); ++i) t += q[i] * terms[i];
  return t / rest(Rational(1));
}

}  // namespace wfa
