#include "wfa/reductions.hpp"

#include "wfa/error.hpp"

namespace wfa {

namespace {

const Matrix& d0() {
  static const Matrix m{{0, 1, 0}, {0, Rational(1, 2), 0}, {0, 0, 1}};
  return m;
}

const Matrix& d1() {
  static const Matrix m{{0, -1, 1}, {0, Rational(1, 2), Rational(1, 2)}, {0, 0, 1}};
  return m;
}

void require_pair(const Matrix& b0, const Matrix& b1) {
  if (!b0.is_square() || b0.rows() != b1.rows() || b0.cols() != b1.cols()) {
    throw DimensionError("gadgets need two square matrices of the same size");
  }
}

}  // namespace

GadgetFamily zero_test_gadgets(const MatrixSet& s) {
  const std::size_t n = s.dim();
  GadgetFamily out{"zero-test", {}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.members.push_back({i, j, Wfa(s.alphabet(), Vector::unit(n, i), s.matrices(), Vector::unit(n, j))});
    }
  }
  return out;
}

GadgetFamily stability_to_ap_continuity_gadgets(const Matrix& b0, const Matrix& b1) {
  require_pair(b0, b1);
  const std::size_t n = b0.rows();
  GadgetFamily out{"ap-continuity", {}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix a0(n + 1, n + 1), a1(n + 1, n + 1);
      a0.set_block(0, 0, b0);
      a1.set_block(0, 0, b1);
      a0(j, n) = 1;
      a1(j, n) = -1;
      a0(n, n) = 1;
      a1(n, n) = 1;
      out.members.push_back({i, j, Wfa({"0", "1"}, Vector::unit(n + 1, i), {a0, a1}, Vector::unit(n + 1, n))});
    }
  }
  return out;
}

Wfa d_automaton() {
  return Wfa({"0", "1"}, Vector{1, 0, 0}, {d0(), d1()}, Vector{Rational(1, 2), Rational(1, 2), 1});
}

GadgetFamily stability_to_uniform_gadgets(const Matrix& b0, const Matrix& b1) {
  require_pair(b0, b1);
  const std::size_t n = b0.rows();
  GadgetFamily out{"uniform-continuity", {}};
  Vector final_dist(n + 3);
  final_dist[n] = Rational(1, 2);
  final_dist[n + 1] = Rational(1, 2);
  final_dist[n + 2] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix c0(n, 3);
      c0(j, 0) = 1;
      Matrix a0 = block_matrix(b0, c0, Matrix::zero(3, n), d0());
      Matrix a1 = block_matrix(b1, -c0, Matrix::zero(3, n), d1());
      out.members.push_back({i, j, Wfa({"0", "1"}, Vector::unit(n + 3, i), {a0, a1}, final_dist)});
    }
  }
  return out;
}

}  // namespace wfa
