#include "wfa/continuity.hpp"

#include "wfa/error.hpp"
#include "wfa/linalg.hpp"

namespace wfa {

namespace {

void require_binary(const Wfa& a) {
  if (!a.is_binary()) throw PreconditionError("the binary alphabet (0, 1) is required");
}

struct OmegaAnalysis {
  ContinuityVerdict verdict;
  std::optional<CanonicalForm> canonical;  ///< set when the blocks were examined
};

OmegaAnalysis analyze(const Wfa& a, std::size_t max_depth) {
  if (!is_ap(a)) throw PreconditionError("continuity analysis needs an average-preserving automaton");
  const Wfa m = minimize(a);
  if (m.dim() == 0) return {verdict::ContinuousEverywhere{0}, std::nullopt};
  auto canonical = to_canonical_form(m);
  if (!canonical) {
    return {verdict::NotContinuous{verdict::DiscontinuityReason::NoEigenrow, std::nullopt,
                                   "no common left 1-eigenvector"},
            std::nullopt};
  }
  const auto st = decide_stability(canonical->block_set(), max_depth);
  if (const auto* s = std::get_if<verdict::Stable>(&st)) {
    return {verdict::ContinuousEverywhere{s->certificate_depth}, std::move(canonical)};
  }
  if (const auto* ns = std::get_if<verdict::NotStable>(&st)) {
    return {verdict::NotContinuous{verdict::DiscontinuityReason::StabilityWitness, ns->witness,
                                   "canonical blocks are not stable"},
            std::move(canonical)};
  }
  return {std::get<verdict::Unknown>(st), std::move(canonical)};
}

}  // namespace

const char* to_string(verdict::DiscontinuityReason r) {
  switch (r) {
    case verdict::DiscontinuityReason::NoEigenrow: return "NoEigenrow";
    case verdict::DiscontinuityReason::StabilityWitness: return "StabilityWitness";
    case verdict::DiscontinuityReason::Structural: return "Structural";
  }
  return "Structural";
}

ContinuityVerdict analyze_omega_continuity(const Wfa& a, std::size_t max_depth) {
  return analyze(a, max_depth).verdict;
}

bool check_dyadic_matching(const CanonicalForm& c) {
  require_binary(c.wfa);
  const std::size_t m = c.wfa.dim() - 1;
  const Matrix id = Matrix::identity(m);
  const auto inv0 = inverse(id - c.blocks[0]);
  const auto inv1 = inverse(id - c.blocks[1]);
  if (!inv0 || !inv1) throw PreconditionError("dyadic matching needs E - B_0 and E - B_1 invertible");
  const Vector lhs = c.columns[0] + c.blocks[0] * (*inv1 * c.columns[1]);
  const Vector rhs = c.columns[1] + c.blocks[1] * (*inv0 * c.columns[0]);
  return lhs == rhs;
}

UniformContinuityVerdict analyze_uniform_continuity(const Wfa& a, std::size_t max_depth) {
  require_binary(a);
  auto result = analyze(a, max_depth);
  if (const auto* ce = std::get_if<verdict::ContinuousEverywhere>(&result.verdict)) {
    if (!result.canonical || check_dyadic_matching(*result.canonical)) {
      return verdict::BothContinuous{ce->certificate_depth};
    }
    return verdict::OmegaOnlyContinuous{ce->certificate_depth};
  }
  if (const auto* nc = std::get_if<verdict::NotContinuous>(&result.verdict)) return *nc;
  return std::get<verdict::Unknown>(result.verdict);
}

OneSidedValues dyadic_one_sided_values(const Wfa& a, const Word& v) {
  require_binary(a);
  return {omega_eval(a, UltimatelyPeriodicWord(v + Word{1}, Word{0})),
          omega_eval(a, UltimatelyPeriodicWord(v + Word{0}, Word{1}))};
}

OmegaValue endpoint_left_limit(const Wfa& a) {
  require_binary(a);
  return omega_eval(a, UltimatelyPeriodicWord(Word(), Word{1}));
}

}  // namespace wfa
