#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "wfa/matrix.hpp"
#include "wfa/wfa.hpp"

namespace wfa {

/// Finite family {A_a} of equally sized square matrices, indexed by an
/// ordered alphabet.
class MatrixSet {
 public:
  MatrixSet(std::vector<std::string> alphabet, std::vector<Matrix> matrices);
  /// Letters "0", "1", ... in order.
  explicit MatrixSet(std::vector<Matrix> matrices);

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<Matrix>& matrices() const { return matrices_; }
  const Matrix& operator[](Letter a) const { return matrices_.at(a); }
  std::size_t size() const { return matrices_.size(); }
  std::size_t dim() const { return matrices_.front().rows(); }

  Matrix product(const Word& w) const;
  std::string format_word(const Word& w) const;

 private:
  std::vector<std::string> alphabet_;
  std::vector<Matrix> matrices_;
};

/// Transition matrices of an automaton as a set.
MatrixSet transition_set(const Wfa& a);

namespace verdict {

/// Every product of length `certificate_depth` has norm_bound_sq < 1.
struct Stable {
  std::size_t certificate_depth;
};
/// The product over `witness` has a characteristic root of modulus >= 1.
struct NotStable {
  Word witness;
};
struct Unknown {
  std::size_t explored_depth;
};

struct ContinuousRcp {
  std::size_t certificate_depth;
};
/// Either a stability witness of the projected set, or a structural
/// failure of the common left 1-eigenspace conditions.
struct NotRcp {
  std::optional<Word> witness;
  std::string reason;
};

}  // namespace verdict

using StabilityVerdict = std::variant<verdict::Stable, verdict::NotStable, verdict::Unknown>;
using RcpVerdict = std::variant<verdict::ContinuousRcp, verdict::NotRcp, verdict::Unknown>;

/// Breadth-first search over product lengths 1..max_depth. At each length,
/// Stable when every product contracts in the Frobenius bound; NotStable
/// with the lexicographically least product word whose characteristic
/// polynomial has a root outside the open unit disk; Unknown otherwise.
/// Products are deduplicated per length, keeping the least word.
StabilityVerdict decide_stability(const MatrixSet& s, std::size_t max_depth);

/// Continuous-RCP test: all A_a share the left 1-eigenspace E_1, each A_a's
/// generalized left 1-eigenspace equals E_1, and the set projected onto the
/// orthogonal complement of E_1 is stable.
RcpVerdict is_continuous_rcp(const MatrixSet& s, std::size_t max_depth);

/// Two mn x mn matrices whose products' blocks enumerate the products of
/// the m given n x n matrices, so the pair is stable iff the set is.
MatrixSet reduce_to_pair(const MatrixSet& s);

/// {[[B_a, C_a], [0, D_a]]}.
MatrixSet block_compose(const MatrixSet& b, const std::vector<Matrix>& c, const MatrixSet& d);

/// Max of norm_bound_sq over all products of length 1..depth.
Rational product_bound_scan(const MatrixSet& s, std::size_t depth);

/// Left 1-eigenspace {x : x A = x} of one matrix.
std::vector<Vector> left_one_eigenspace(const Matrix& a);

}  // namespace wfa
