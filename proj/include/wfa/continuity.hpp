#pragma once

#include <optional>
#include <string>
#include <variant>

#include "wfa/canonical.hpp"
#include "wfa/stability.hpp"

namespace wfa {

namespace verdict {

/// Certificate depth of the stable canonical blocks; 0 for the zero function.
struct ContinuousEverywhere {
  std::size_t certificate_depth;
};

enum class DiscontinuityReason { NoEigenrow, StabilityWitness, Structural };

struct NotContinuous {
  DiscontinuityReason reason;
  std::optional<Word> witness;  ///< set for StabilityWitness
  std::string detail;
};

/// f is continuous on words and its real counterpart is continuous too.
struct BothContinuous {
  std::size_t certificate_depth;
};
/// f is continuous on words but the real counterpart jumps at a dyadic point.
struct OmegaOnlyContinuous {
  std::size_t certificate_depth;
};

}  // namespace verdict

using ContinuityVerdict =
    std::variant<verdict::ContinuousEverywhere, verdict::NotContinuous, verdict::Unknown>;
using UniformContinuityVerdict = std::variant<verdict::BothContinuous, verdict::OmegaOnlyContinuous,
                                              verdict::NotContinuous, verdict::Unknown>;

const char* to_string(verdict::DiscontinuityReason r);

/// Minimizes, extracts the canonical form and decides stability of its
/// blocks. Throws PreconditionError for non-ap input.
ContinuityVerdict analyze_omega_continuity(const Wfa& a, std::size_t max_depth);

/// b_0 + B_0 (E - B_1)^-1 b_1 == b_1 + B_1 (E - B_0)^-1 b_0, exactly.
/// Throws PreconditionError unless the form is binary with E - B_i invertible.
bool check_dyadic_matching(const CanonicalForm& c);

/// analyze_omega_continuity followed by the dyadic matching test.
/// Throws PreconditionError for non-ap or non-binary input.
UniformContinuityVerdict analyze_uniform_continuity(const Wfa& a, std::size_t max_depth);

struct OneSidedValues {
  OmegaValue right;  ///< f(v 1 0^omega)
  OmegaValue left;   ///< f(v 0 1^omega)
};

OneSidedValues dyadic_one_sided_values(const Wfa& a, const Word& v);

/// f(1^omega), the left limit of the real function at x = 1.
OmegaValue endpoint_left_limit(const Wfa& a);

}  // namespace wfa
