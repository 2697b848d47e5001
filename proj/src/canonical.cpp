#include "wfa/canonical.hpp"

#include "wfa/error.hpp"
#include "wfa/linalg.hpp"
#include "wfa/power_limit.hpp"

namespace wfa {

MatrixSet CanonicalForm::block_set() const { return MatrixSet(wfa.alphabet(), blocks); }

std::vector<Vector> common_left_one_eigenspace(const Wfa& a) {
  const std::size_t n = a.dim();
  Matrix stacked(n, n * a.alphabet_size());
  const Matrix id = Matrix::identity(n);
  for (Letter x = 0; x < a.alphabet_size(); ++x) stacked.set_block(0, x * n, a.transition(x) - id);
  return left_kernel(stacked);
}

std::optional<Vector> common_left_one_eigenvector(const Wfa& a) {
  auto space = common_left_one_eigenspace(a);
  if (space.empty()) return std::nullopt;
  Vector v = space.front();
  std::size_t last = v.size();
  while (v[last - 1].is_zero()) --last;
  v *= Rational(1) / v[last - 1];
  return v;
}

Matrix reassemble(const Matrix& block, const Vector& column) {
  const std::size_t m = block.rows();
  Matrix out(m + 1, m + 1);
  out.set_block(0, 0, block);
  for (std::size_t i = 0; i < m; ++i) out(i, m) = column[i];
  out(m, m) = 1;
  return out;
}

std::optional<CanonicalForm> to_canonical_form(const Wfa& a) {
  const auto space = common_left_one_eigenspace(a);
  const auto eigen = common_left_one_eigenvector(a);
  if (!eigen) return std::nullopt;
  const std::size_t n = a.dim();

  IncrementalBasis span(n);
  span.add(*eigen);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n && rows.size() + 1 < n; ++i) {
    Vector e = Vector::unit(n, i);
    if (span.add(e)) rows.push_back(std::move(e));
  }
  rows.push_back(*eigen);
  const Matrix t = Matrix::from_rows(rows, n);
  Wfa changed = change_basis(a, *inverse(t));

  CanonicalForm out{changed, {}, {}, Vector::unit(n, n - 1), space.size() > 1};
  for (const auto& m : changed.transitions()) {
    out.blocks.push_back(m.block(0, 0, n - 1, n - 1));
    out.columns.push_back(m.block(0, n - 1, n - 1, 1).column(0));
  }
  return out;
}

bool LimitCheckReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed()) return false;
  }
  return true;
}

LimitCheckReport limit_matrix_checks(const Wfa& a, const std::vector<Word>& periods,
                                     std::size_t depth) {
  LimitCheckReport report;
  if (a.dim() == 0) {
    for (const auto& v : periods) report.checks.push_back({v, true, true, true, true});
    return report;
  }
  if (!is_minimal(a)) throw PreconditionError("limit checks need a minimal automaton");
  const auto canonical = to_canonical_form(a);
  if (!canonical) throw PreconditionError("limit checks need a common left 1-eigenvector");
  if (!std::holds_alternative<verdict::Stable>(decide_stability(canonical->block_set(), depth))) {
    throw PreconditionError("limit checks need stable canonical blocks");
  }
  const Vector eigen = *common_left_one_eigenvector(a);
  for (const auto& v : periods) {
    if (v.empty()) throw PreconditionError("limit checks need nonempty periods");
    LimitCheck check{v};
    const auto limit = power_limit_matrix(word_matrix(a, v));
    if (limit) {
      check.limit_exists = true;
      check.absorbing = true;
      for (const auto& m : a.transitions()) check.absorbing = check.absorbing && (*limit * m == *limit);
      check.rank_at_most_one = rank(*limit) <= 1;
      check.rows_along_eigenrow = true;
      for (std::size_t r = 0; r < limit->rows(); ++r) {
        check.rows_along_eigenrow = check.rows_along_eigenrow && in_span({eigen}, limit->row(r));
      }
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace wfa
