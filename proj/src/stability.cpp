#include "wfa/stability.hpp"

#include <unordered_set>

#include "wfa/error.hpp"
#include "wfa/linalg.hpp"

namespace wfa {

namespace {

std::vector<std::string> default_letters(std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(std::to_string(i));
  return out;
}

struct Product {
  Matrix value;
  Word word;
};

// Distinct products of the next length, each with its least word.
std::vector<Product> extend(const std::vector<Product>& level, const MatrixSet& s) {
  std::vector<Product> next;
  std::unordered_set<Matrix, MatrixHash> seen;
  for (const auto& p : level) {
    for (Letter a = 0; a < s.size(); ++a) {
      Matrix q = p.value * s[a];
      if (!seen.insert(q).second) continue;
      Word w = p.word;
      w.push_back(a);
      next.push_back({std::move(q), std::move(w)});
    }
  }
  return next;
}

bool same_subspace(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t dim) {
  if (a.size() != b.size()) return false;
  IncrementalBasis span(dim);
  for (const auto& v : a) span.add(v);
  for (const auto& v : b) {
    if (!span.contains(v)) return false;
  }
  return true;
}

Matrix matrix_power(const Matrix& m, std::size_t k) {
  Matrix out = Matrix::identity(m.rows());
  for (std::size_t i = 0; i < k; ++i) out = out * m;
  return out;
}

}  // namespace

MatrixSet::MatrixSet(std::vector<std::string> alphabet, std::vector<Matrix> matrices)
    : alphabet_(std::move(alphabet)), matrices_(std::move(matrices)) {
  if (matrices_.empty()) throw PreconditionError("matrix set must not be empty");
  if (alphabet_.size() != matrices_.size()) throw DimensionError("one matrix per letter required");
  const std::size_t n = matrices_.front().rows();
  for (const auto& m : matrices_) {
    if (m.rows() != n || m.cols() != n) throw DimensionError("matrix set needs equal square sizes");
  }
}

MatrixSet::MatrixSet(std::vector<Matrix> matrices) {
  alphabet_ = default_letters(matrices.size());
  *this = MatrixSet(std::move(alphabet_), std::move(matrices));
}

Matrix MatrixSet::product(const Word& w) const {
  Matrix p = Matrix::identity(dim());
  for (Letter a : w) p = p * matrices_.at(a);
  return p;
}

std::string MatrixSet::format_word(const Word& w) const {
  bool single = true;
  for (const auto& s : alphabet_) single = single && s.size() == 1;
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single && i > 0) out += ",";
    out += alphabet_.at(w[i]);
  }
  return out;
}

MatrixSet transition_set(const Wfa& a) { return MatrixSet(a.alphabet(), a.transitions()); }

StabilityVerdict decide_stability(const MatrixSet& s, std::size_t max_depth) {
  if (max_depth == 0) throw PreconditionError("stability depth budget must be positive");
  std::vector<Product> level{{Matrix::identity(s.dim()), Word()}};
  for (std::size_t depth = 1; depth <= max_depth; ++depth) {
    level = extend(level, s);
    std::vector<bool> contracts(level.size());
    bool all_contract = true;
    for (std::size_t i = 0; i < level.size(); ++i) {
      contracts[i] = norm_bound_sq(level[i].value) < Rational(1);
      all_contract = all_contract && contracts[i];
    }
    if (all_contract) return verdict::Stable{depth};
    for (std::size_t i = 0; i < level.size(); ++i) {
      // a contracting product has spectral radius < 1 already
      if (!contracts[i] && !roots_inside_unit_disk(char_poly(level[i].value))) {
        return verdict::NotStable{level[i].word};
      }
    }
  }
  return verdict::Unknown{max_depth};
}

std::vector<Vector> left_one_eigenspace(const Matrix& a) {
  return left_kernel(a - Matrix::identity(a.rows()));
}

RcpVerdict is_continuous_rcp(const MatrixSet& s, std::size_t max_depth) {
  const std::size_t n = s.dim();
  const Matrix id = Matrix::identity(n);
  const auto e1 = left_one_eigenspace(s[0]);
  for (Letter a = 0; a < s.size(); ++a) {
    if (!same_subspace(e1, left_one_eigenspace(s[a]), n)) {
      return verdict::NotRcp{std::nullopt, "left 1-eigenspaces differ"};
    }
    const auto generalized = left_kernel(matrix_power(s[a] - id, n));
    if (generalized.size() != e1.size()) {
      return verdict::NotRcp{std::nullopt,
                             "left 1-eigenspace of letter " + s.alphabet()[a] + " is not simple"};
    }
  }
  // V = orthogonal complement of E_1; rows of T are a basis of V then E_1
  std::vector<Vector> rows =
      e1.empty() ? std::vector<Vector>{} : kernel(Matrix::from_rows(e1, n));
  const std::size_t v_dim = rows.size();
  if (e1.empty()) {
    for (std::size_t i = 0; i < n; ++i) rows.push_back(Vector::unit(n, i));
  } else {
    rows.insert(rows.end(), e1.begin(), e1.end());
  }
  const std::size_t keep = e1.empty() ? n : v_dim;
  const Matrix t = Matrix::from_rows(rows, n);
  const Matrix t_inv = *inverse(t);
  Matrix select = Matrix::zero(n, n);
  for (std::size_t i = 0; i < keep; ++i) select(i, i) = 1;
  const Matrix projection = t_inv * select * t;
  std::vector<Matrix> projected;
  for (const auto& m : s.matrices()) projected.push_back(projection * m * projection);
  const auto result = decide_stability(MatrixSet(s.alphabet(), std::move(projected)), max_depth);
  if (const auto* st = std::get_if<verdict::Stable>(&result)) return verdict::ContinuousRcp{st->certificate_depth};
  if (const auto* ns = std::get_if<verdict::NotStable>(&result)) {
    return verdict::NotRcp{ns->witness, "projected set is not stable"};
  }
  return std::get<verdict::Unknown>(result);
}

MatrixSet reduce_to_pair(const MatrixSet& s) {
  const std::size_t m = s.size();
  const std::size_t n = s.dim();
  const std::size_t total = m * n;
  Matrix shift = Matrix::zero(total, total);
  if (m > 1) shift.set_block(0, n, Matrix::identity(n * (m - 1)));
  Matrix stack = Matrix::zero(total, total);
  for (std::size_t i = 0; i < m; ++i) stack.set_block(i * n, 0, s[i]);
  return MatrixSet({"0", "1"}, {std::move(shift), std::move(stack)});
}

MatrixSet block_compose(const MatrixSet& b, const std::vector<Matrix>& c, const MatrixSet& d) {
  if (b.alphabet() != d.alphabet() || c.size() != b.size()) {
    throw DimensionError("block_compose: alphabets differ");
  }
  std::vector<Matrix> out;
  for (Letter a = 0; a < b.size(); ++a) {
    if (c[a].rows() != b.dim() || c[a].cols() != d.dim()) {
      throw DimensionError("block_compose: coupling block has the wrong shape");
    }
    out.push_back(block_matrix(b[a], c[a], Matrix::zero(d.dim(), b.dim()), d[a]));
  }
  return MatrixSet(b.alphabet(), std::move(out));
}

Rational product_bound_scan(const MatrixSet& s, std::size_t depth) {
  Rational best;
  std::vector<Product> level{{Matrix::identity(s.dim()), Word()}};
  for (std::size_t d = 1; d <= depth; ++d) {
    level = extend(level, s);
    for (const auto& p : level) best = std::max(best, norm_bound_sq(p.value));
  }
  return best;
}

}  // namespace wfa
