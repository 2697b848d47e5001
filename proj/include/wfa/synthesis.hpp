#pragma once

#include <optional>
#include <vector>

#include "wfa/wfa.hpp"

namespace wfa {

struct SynthesisInput {
  Matrix b0_block;  ///< B_0
  Matrix b1_block;  ///< B_1
  Vector k;         ///< nonzero element of ker(B_0 + B_1 - E)
  Vector b0;        ///< column of letter 0
  std::optional<Vector> initial;  ///< defaults to e_1
};

/// Basis of ker(B_0 + B_1 - E). Throws DimensionError on a size mismatch.
std::vector<Vector> kernel_of_sum_minus_identity(const Matrix& b0, const Matrix& b1);

/// Binary ap automaton with matrices [[B_i | b_i], [0 | 1]] and final
/// distribution (F', 1), where b_1 = (E - B_1)(k + (E - B_0)^-1 b_0) and
/// F' = -(B_0 + B_1 - 2E)^-1 (b_0 + b_1). Its omega-function and real
/// function are continuous and it is not constant.
///
/// Throws NonconstantImpossible when det(B_0 + B_1 - E) != 0,
/// PreconditionError when k is zero or outside the kernel, or when {B_0, B_1}
/// is not certified stable within `stability_depth`.
Wfa synthesize_continuous(const SynthesisInput& input, std::size_t stability_depth = 16);

/// A_a F == F for every letter. Throws PreconditionError unless the
/// automaton is ap and left minimal.
bool is_constant_function(const Wfa& a);

}  // namespace wfa
