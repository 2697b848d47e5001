#include "doctest.h"
#include "fixtures.hpp"
#include "wfa/canonical.hpp"
#include "wfa/continuity.hpp"
#include "wfa/error.hpp"
#include "wfa/synthesis.hpp"

using namespace wfa;
using fixtures::q;

namespace {

template <class T, class V>
bool is(const V& v) {
  return std::holds_alternative<T>(v);
}

// Unit upper-triangular times unit lower-triangular: determinant 1.
Matrix unimodular(fixtures::Rng& rng, std::size_t n) {
  std::uniform_int_distribution<long> entry(-1, 1);
  Matrix u = Matrix::identity(n);
  Matrix l = Matrix::identity(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r + 1; c < n; ++c) {
      u(r, c) = entry(rng);
      l(c, r) = entry(rng);
    }
  }
  return u * l;
}

struct StablePair {
  Matrix b0;
  Matrix b1;
};

// Simultaneously triangular pair, diagonals inside (-1, 1), with one diagonal
// pair summing to 1 so that B_0 + B_1 - E is singular. Resampled until the
// stability engine certifies it.
StablePair stable_singular_pair(fixtures::Rng& rng, std::size_t m) {
  static const Rational halves[][2] = {{q(1, 4), q(3, 4)}, {q(1, 3), q(2, 3)}, {q(1, 2), q(1, 2)}, {q(3, 5), q(2, 5)}};
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<long> small(-2, 2);
  while (true) {
    Matrix t0(m, m), t1(m, m);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = r; c < m; ++c) {
        t0(r, c) = Rational(small(rng), 4);
        t1(r, c) = Rational(small(rng), 4);
      }
    }
    const std::size_t special = static_cast<std::size_t>(pick(rng)) % m;
    const auto& h = halves[pick(rng)];
    t0(special, special) = h[0];
    t1(special, special) = h[1];
    const Matrix p = unimodular(rng, m);
    const Matrix p_inv = *inverse(p);
    StablePair out{p * t0 * p_inv, p * t1 * p_inv};
    if (is<verdict::Stable>(decide_stability(MatrixSet({out.b0, out.b1}), 12))) return out;
  }
}

}  // namespace

TEST_CASE("kernel of B_0 + B_1 - E") {
  const auto k = kernel_of_sum_minus_identity(fixtures::contex_b0(), fixtures::contex_b1());
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vector{1, 0});
  CHECK(kernel_of_sum_minus_identity(Matrix{{q(1, 4)}}, Matrix{{q(1, 4)}}).empty());
  CHECK(kernel_of_sum_minus_identity(Matrix{{q(2, 7)}}, Matrix{{q(5, 7)}}).size() == 1);
  CHECK_THROWS_AS(kernel_of_sum_minus_identity(Matrix{{1}}, Matrix::identity(2)), DimensionError);
}

TEST_CASE("contex seed reproduces contex") {
  const Wfa a = synthesize_continuous({fixtures::contex_b0(), fixtures::contex_b1(), Vector{9, 0}, Vector{3, 0}, {}});
  CHECK(a.transition(1).column(2) == Vector{5, 6, 1});
  CHECK(a.final_dist() == Vector{10, 6, 1});
  CHECK(a == fixtures::contex());
}

TEST_CASE("scalar synthesis") {
  const Wfa a = synthesize_continuous({Matrix{{q(1, 2)}}, Matrix{{q(1, 2)}}, Vector{2}, Vector{1}, {}});
  CHECK(a.transition(1) == Matrix{{q(1, 2), 2}, {0, 1}});
  CHECK(a.final_dist() == Vector{3, 1});
  const Wfa b = synthesize_continuous({Matrix{{q(1, 2)}}, Matrix{{q(1, 2)}}, Vector{2}, Vector{1}, Vector{0, 1}});
  CHECK(b.initial() == Vector{0, 1});
}

TEST_CASE("synthesis rejects invalid seeds") {
  const Matrix quarter{{q(1, 4)}};
  CHECK_THROWS_AS(synthesize_continuous({quarter, quarter, Vector{1}, Vector{1}, {}}), NonconstantImpossible);
  CHECK_THROWS_AS(synthesize_continuous({fixtures::contex_b0(), fixtures::contex_b1(), Vector{0, 0}, Vector{3, 0}, {}}),
                  PreconditionError);
  CHECK_THROWS_AS(synthesize_continuous({fixtures::contex_b0(), fixtures::contex_b1(), Vector{0, 1}, Vector{3, 0}, {}}),
                  PreconditionError);
  // B_0 + B_1 - E = 0 but the pair is not stable
  CHECK_THROWS_AS(synthesize_continuous({Matrix{{1}}, Matrix{{0}}, Vector{1}, Vector{1}, {}}), PreconditionError);
  CHECK_THROWS_AS(synthesize_continuous({fixtures::contex_b0(), fixtures::contex_b1(), Vector{9}, Vector{3, 0}, {}}),
                  DimensionError);
  CHECK_THROWS_AS(
      synthesize_continuous({fixtures::contex_b0(), fixtures::contex_b1(), Vector{9, 0}, Vector{3, 0}, Vector{1, 0}}),
      DimensionError);
}

TEST_CASE("synthesized automata are continuous, ap and not constant") {
  fixtures::Rng rng(61);
  int left_minimal = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = 1 + trial % 3;
    const StablePair pair = stable_singular_pair(rng, m);
    const Matrix id = Matrix::identity(m);
    CHECK_FALSE(determinant(pair.b0 + pair.b1 - id * q(2)).is_zero());
    const auto basis = kernel_of_sum_minus_identity(pair.b0, pair.b1);
    REQUIRE_FALSE(basis.empty());
    Rational scale = fixtures::random_rational(rng, 3, 2);
    if (scale.is_zero()) scale = 1;
    const Vector k = basis.front() * scale;
    const Vector b0 = fixtures::random_vector(rng, m);
    const Vector initial = fixtures::random_vector(rng, m + 1);
    const Wfa a = synthesize_continuous({pair.b0, pair.b1, k, b0, initial});

    CHECK(is_ap(a));
    const auto c = to_canonical_form(a);
    REQUIRE(c);
    CHECK(check_dyadic_matching(*c));
    CHECK(is<verdict::ContinuousEverywhere>(analyze_omega_continuity(a, 16)));

    const Vector f_top = a.final_dist().size() > 1 ? Matrix::from_columns({a.final_dist()}, m + 1).block(0, 0, m, 1).column(0)
                                                   : Vector();
    const Vector b1 = a.transition(1).block(0, m, m, 1).column(0);
    CHECK(((pair.b0 + pair.b1 - id * q(2)) * f_top + b0 + b1).is_zero());
    const Vector gap = *inverse(id - pair.b1) * b1 - *inverse(id - pair.b0) * b0;
    CHECK(((pair.b0 + pair.b1 - id) * gap).is_zero());
    CHECK_FALSE(gap.is_zero());

    if (is_left_minimal(a)) {
      ++left_minimal;
      CHECK_FALSE(is_constant_function(a));
    }
  }
  CHECK(left_minimal >= 40);
}

TEST_CASE("constant function test") {
  const Wfa two_state({"0", "1"}, Vector{1, 0}, {Matrix{{q(1, 2), 1}, {0, 1}}, Matrix{{q(1, 2), 1}, {0, 1}}},
                      Vector{2, 1});
  CHECK(is_constant_function(two_state));
  CHECK_FALSE(is_constant_function(fixtures::contex()));
  CHECK(is_constant_function(fixtures::zero_automaton()));
  CHECK_THROWS_AS(is_constant_function(fixtures::universal_counterexample()), PreconditionError);
  CHECK_THROWS_AS(is_constant_function(fixtures::constant_example()), PreconditionError);
}
