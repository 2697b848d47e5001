#pragma once

#include <Eigen/Dense>
#include <random>
#include <vector>

#include "wfa/linalg.hpp"
#include "wfa/stability.hpp"
#include "wfa/wfa.hpp"

namespace fixtures {

using wfa::Matrix;
using wfa::Rational;
using wfa::Vector;
using wfa::Wfa;
using Rng = std::mt19937_64;

inline Rational q(long p, long d = 1) { return Rational(p, d); }

// I=(1,0), A_0=[[-1,0],[0,0]], A_1=[[0,1],[0,0]], F=(0,1).
inline Wfa universal_counterexample() {
  return Wfa({"0", "1"}, Vector{1, 0}, {Matrix{{-1, 0}, {0, 0}}, Matrix{{0, 1}, {0, 0}}}, Vector{0, 1});
}

inline Wfa three_letter() {
  return Wfa({"0", "1", "2"}, Vector{1, 0},
             {Matrix{{-1, 0}, {0, 1}}, Matrix{{0, 1}, {0, 1}}, Matrix{{0, -1}, {0, 1}}}, Vector{0, 1});
}

inline Matrix contex_b0() { return Matrix{{q(1, 3), q(1, 3)}, {q(1, 3), q(1, 3)}}; }
inline Matrix contex_b1() { return Matrix{{q(2, 3), 0}, {q(-1, 3), q(2, 3)}}; }

inline Wfa contex() {
  return Wfa({"0", "1"}, Vector{1, 0, 0},
             {Matrix{{q(1, 3), q(1, 3), 3}, {q(1, 3), q(1, 3), 0}, {0, 0, 1}},
              Matrix{{q(2, 3), 0, 5}, {q(-1, 3), q(2, 3), 6}, {0, 0, 1}}},
             Vector{10, 6, 1});
}

// ap and constant 1, but not minimal.
inline Wfa constant_example() {
  const Matrix a{{-1, 0}, {0, 1}};
  return Wfa({"0", "1"}, Vector{0, 1}, {a, a}, Vector{0, 1});
}

inline Wfa zero_automaton(std::size_t letters = 2) {
  std::vector<std::string> alphabet;
  for (std::size_t i = 0; i < letters; ++i) alphabet.push_back(std::to_string(i));
  return Wfa(alphabet, Vector(), std::vector<Matrix>(letters, Matrix()), Vector());
}

// Canonical form with B_0 = B_1 = 0, b_0 = 1, b_1 = 0: continuous on words,
// jumps at x = 1/2 as a real function.
inline Wfa omega_only() {
  return Wfa({"0", "1"}, Vector{1, 0}, {Matrix{{0, 1}, {0, 1}}, Matrix{{0, 0}, {0, 1}}},
             Vector{q(1, 2), 1});
}

inline Rational random_rational(Rng& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long max_num = 3,
                            long max_den = 4) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_rational(rng, max_num, max_den);
  }
  return m;
}

inline Vector random_vector(Rng& rng, std::size_t n, long max_num = 3, long max_den = 4) {
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = random_rational(rng, max_num, max_den);
  return v;
}

inline Matrix random_invertible(Rng& rng, std::size_t n) {
  while (true) {
    Matrix m = random_matrix(rng, n, n);
    if (!wfa::determinant(m).is_zero()) return m;
  }
}

// Random WFA whose last matrix is corrected by a rank-one term so that
// sum_a A_a F = |Sigma| F.
inline Wfa random_ap_wfa(Rng& rng, std::size_t n, std::size_t letters) {
  Vector f = random_vector(rng, n);
  while (f.is_zero()) f = random_vector(rng, n);
  std::vector<Matrix> ms;
  Vector sum(n);
  for (std::size_t a = 0; a < letters; ++a) {
    ms.push_back(random_matrix(rng, n, n));
    sum += ms.back() * f;
  }
  const Vector residual = f * Rational(static_cast<long>(letters)) - sum;
  const Rational scale = Rational(1) / wfa::dot(f, f);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) ms.back()(r, c) += residual[r] * f[c] * scale;
  }
  std::vector<std::string> alphabet;
  for (std::size_t a = 0; a < letters; ++a) alphabet.push_back(std::to_string(a));
  return Wfa(alphabet, random_vector(rng, n), ms, f);
}

// Square matrices with entries in {-1, 0, 1}/(den*n), so every row sum of |a_ij| is below one.
inline Matrix random_contraction(Rng& rng, std::size_t n, long den = 6) {
  const long max_num = 1;
  Matrix m(n, n);
  std::uniform_int_distribution<long> num(-max_num, max_num);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Rational(num(rng), den * static_cast<long>(n));
  }
  return m;
}

inline std::vector<wfa::Word> random_words(Rng& rng, std::size_t letters, std::size_t count,
                                           std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> letter(0, letters - 1);
  std::vector<wfa::Word> out;
  for (std::size_t i = 0; i < count; ++i) {
    wfa::Word w;
    const std::size_t l = len(rng);
    for (std::size_t k = 0; k < l; ++k) w.push_back(letter(rng));
    out.push_back(std::move(w));
  }
  return out;
}

inline wfa::UltimatelyPeriodicWord random_periodic(Rng& rng, std::size_t letters,
                                                   std::size_t max_head, std::size_t max_period) {
  auto head = random_words(rng, letters, 1, max_head).front();
  wfa::Word period;
  while (period.empty()) period = random_words(rng, letters, 1, max_period).front();
  return wfa::UltimatelyPeriodicWord(std::move(head), std::move(period));
}

// Floating-point oracles.

inline Eigen::MatrixXd to_eigen(const Matrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).to_double();
  }
  return out;
}

inline Eigen::VectorXd to_eigen(const Vector& v) {
  Eigen::VectorXd out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out(i) = v[i].to_double();
  return out;
}

inline double spectral_radius(const Matrix& m) {
  if (m.rows() == 0) return 0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen(m), false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

// Numeric I A_u A_v^k ... prefix value at position `len` of u v^omega.
inline double numeric_prefix_value(const Wfa& a, const wfa::UltimatelyPeriodicWord& w, std::size_t len) {
  Eigen::RowVectorXd row = to_eigen(a.initial()).transpose();
  for (std::size_t i = 0; i < len; ++i) row = row * to_eigen(a.transition(w.at(i)));
  return row.dot(to_eigen(a.final_dist()));
}

}  // namespace fixtures
