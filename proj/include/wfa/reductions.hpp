#pragma once

#include <string>
#include <vector>

#include "wfa/stability.hpp"
#include "wfa/wfa.hpp"

namespace wfa {

struct GadgetMember {
  std::size_t i;  ///< 0-based index of the initial unit vector
  std::size_t j;  ///< 0-based index of the coupled coordinate
  Wfa wfa;
};

/// Automata sharing alphabet and dimension, indexed by (i, j) in row-major
/// order.
struct GadgetFamily {
  std::string provenance;
  std::vector<GadgetMember> members;
};

/// Members (S, e_i, e_j): all omega-functions vanish iff S is stable.
GadgetFamily zero_test_gadgets(const MatrixSet& s);

/// n^2 binary ap automata of dimension n + 1 with matrices
/// [[B_0 | e_j], [0 | 1]] and [[B_1 | -e_j], [0 | 1]], initial e_i and
/// final e_{n+1}. Their omega-functions are all continuous iff {B_0, B_1}
/// is stable.
GadgetFamily stability_to_ap_continuity_gadgets(const Matrix& b0, const Matrix& b1);

/// Fixed 3-state binary ap automaton whose real function is continuous,
/// piecewise linear and zero at both ends of [0, 1].
Wfa d_automaton();

/// n^2 binary ap automata of dimension n + 3 coupling [[B_a | C_a], [0 | D_a]]
/// with the D-automaton's matrices, C_0 = e_j (1, 0, 0), C_1 = -C_0,
/// initial e_i and final (0, ..., 0, 1/2, 1/2, 1).
GadgetFamily stability_to_uniform_gadgets(const Matrix& b0, const Matrix& b1);

}  // namespace wfa
