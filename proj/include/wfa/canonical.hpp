#pragma once

#include <optional>
#include <vector>

#include "wfa/stability.hpp"
#include "wfa/wfa.hpp"

namespace wfa {

/// Automaton whose matrices all read [[B_a | b_a], [0 | 1]].
struct CanonicalForm {
  Wfa wfa;
  std::vector<Matrix> blocks;   ///< B_a, aligned with the alphabet
  std::vector<Vector> columns;  ///< b_a, aligned with the alphabet
  Vector eigenrow;              ///< (0, ..., 0, 1)
  /// The common left 1-eigenspace had dimension >= 2; the first kernel
  /// vector was used anyway.
  bool eigenspace_multiple = false;

  MatrixSet block_set() const;
};

/// Basis of {x : x A_a = x for every letter a}.
std::vector<Vector> common_left_one_eigenspace(const Wfa& a);

/// First vector of the common left 1-eigenspace, scaled so its last nonzero
/// entry is 1; nullopt when the space is {0}.
std::optional<Vector> common_left_one_eigenvector(const Wfa& a);

/// Change of basis sending the common left 1-eigenvector to (0, ..., 0, 1).
/// The other basis rows are the first unit vectors independent of it.
/// nullopt when there is no common left 1-eigenvector.
std::optional<CanonicalForm> to_canonical_form(const Wfa& a);

/// [[block | column], [0 | 1]].
Matrix reassemble(const Matrix& block, const Vector& column);

struct LimitCheck {
  Word period;
  bool limit_exists = false;
  bool absorbing = false;         ///< L A_a = L for every letter
  bool rank_at_most_one = false;
  bool rows_along_eigenrow = false;
  bool passed() const { return limit_exists && absorbing && rank_at_most_one && rows_along_eigenrow; }
};

struct LimitCheckReport {
  std::vector<LimitCheck> checks;
  bool passed() const;
};

/// For each period v, L = lim A_v^k must exist, absorb every A_a from the
/// right, have rank <= 1 and rows along the common left 1-eigenvector.
/// Requires a minimal automaton whose canonical blocks are certified stable
/// within `depth`; throws PreconditionError otherwise.
LimitCheckReport limit_matrix_checks(const Wfa& a, const std::vector<Word>& periods,
                                     std::size_t depth = 16);

}  // namespace wfa
