#include "wfa/synthesis.hpp"

#include "wfa/canonical.hpp"
#include "wfa/error.hpp"
#include "wfa/linalg.hpp"
#include "wfa/stability.hpp"

namespace wfa {

std::vector<Vector> kernel_of_sum_minus_identity(const Matrix& b0, const Matrix& b1) {
  if (!b0.is_square() || b0.rows() != b1.rows() || b0.cols() != b1.cols()) {
    throw DimensionError("B_0 and B_1 must be square of the same size");
  }
  return kernel(b0 + b1 - Matrix::identity(b0.rows()));
}

Wfa synthesize_continuous(const SynthesisInput& in, std::size_t stability_depth) {
  const auto basis = kernel_of_sum_minus_identity(in.b0_block, in.b1_block);
  const std::size_t m = in.b0_block.rows();
  if (in.k.size() != m || in.b0.size() != m) throw DimensionError("k and b0 must have length " + std::to_string(m));
  if (in.initial && in.initial->size() != m + 1) {
    throw DimensionError("initial distribution must have length " + std::to_string(m + 1));
  }
  if (basis.empty()) throw NonconstantImpossible("det(B0 + B1 - E) != 0: only constant functions are possible");
  if (in.k.is_zero()) throw PreconditionError("k must be nonzero");
  const Matrix id = Matrix::identity(m);
  if (!((in.b0_block + in.b1_block - id) * in.k).is_zero()) {
    throw PreconditionError("k is not in the kernel of B0 + B1 - E");
  }
  const MatrixSet pair({"0", "1"}, {in.b0_block, in.b1_block});
  if (!std::holds_alternative<verdict::Stable>(decide_stability(pair, stability_depth))) {
    throw PreconditionError("{B0, B1} is not certified stable within depth " +
                            std::to_string(stability_depth));
  }
  // stable pairs have no eigenvalue 1, so E - B_0 is invertible
  const Matrix inv0 = *inverse(id - in.b0_block);
  const Vector b1 = (id - in.b1_block) * (in.k + inv0 * in.b0);
  const auto twice = inverse(in.b0_block + in.b1_block - id * Rational(2));
  if (!twice) throw Error("internal: B0 + B1 - 2E is singular for a stable pair");
  const Vector f_top = -(*twice * (in.b0 + b1));

  Vector final_dist = concat(f_top, Vector{Rational(1)});
  Vector initial = in.initial ? *in.initial : Vector::unit(m + 1, 0);
  return Wfa({"0", "1"}, std::move(initial),
             {reassemble(in.b0_block, in.b0), reassemble(in.b1_block, b1)}, std::move(final_dist));
}

bool is_constant_function(const Wfa& a) {
  if (!is_ap(a)) throw PreconditionError("constancy test needs an average-preserving automaton");
  if (!is_left_minimal(a)) throw PreconditionError("constancy test needs a left-minimal automaton");
  for (const auto& m : a.transitions()) {
    if (m * a.final_dist() != a.final_dist()) return false;
  }
  return true;
}

}  // namespace wfa
