#pragma once

#include <optional>

#include "wfa/linalg.hpp"

namespace wfa {

/// Exact lim_{k->inf} M^k x, or nullopt when the sequence diverges.
///
/// Uses the Fitting decomposition R^n = ker((M-E)^n) + im((M-E)^n). The
/// component of x in the generalized 1-eigenspace must already be fixed by
/// M, and the component in the image part must decay, which is decided by
/// the Schur-Cohn test on its local minimal polynomial. The limit is then
/// the generalized-eigenspace component.
std::optional<Vector> power_limit_vec(const Matrix& m, const Vector& x);

/// Exact lim_{k->inf} M^k, columnwise; nullopt unless every column converges.
std::optional<Matrix> power_limit_matrix(const Matrix& m);

/// Exact lim_{k->inf} c M^k y for a row c and column y.
///
/// Independent of power_limit_vec: finds the minimal linear recurrence of
/// the scalar sequence (Berlekamp-Massey over 2n terms) and accepts it when
/// the recurrence polynomial is (z-1)^e q(z) with e <= 1 and q stable. The
/// scalar limit can exist even when the vector sequence M^k y does not.
std::optional<Rational> sequence_limit(const Vector& c, const Matrix& m, const Vector& y);

/// Minimal recurrence polynomial of a finite sequence, monic, as found by
/// Berlekamp-Massey. Exposed for tests.
Polynomial minimal_recurrence(const std::vector<Rational>& seq);

}  // namespace wfa
