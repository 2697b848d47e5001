#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wfa/matrix.hpp"

namespace wfa {

/// Index into an automaton's alphabet.
using Letter = std::size_t;

/// Finite word as a sequence of letter indices.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const std::vector<Letter>& letters() const { return letters_; }

  void push_back(Letter a) { letters_.push_back(a); }
  Word prefix(std::size_t k) const;
  friend Word operator+(const Word& a, const Word& b);

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// All words of length exactly k over an alphabet of the given size, in
/// lexicographic order.
std::vector<Word> words_of_length(std::size_t alphabet_size, std::size_t k);

/// The infinite word head . period^omega.
struct UltimatelyPeriodicWord {
  Word head;
  Word period;

  UltimatelyPeriodicWord(Word head_word, Word period_word);
  /// Letter at position i (0-based) of the infinite word.
  Letter at(std::size_t i) const;
  Word prefix(std::size_t k) const;
};

/// Value of an omega-function: a rational when the limit exists, empty
/// when it does not.
using OmegaValue = std::optional<Rational>;

/// Weighted finite automaton (I, {A_a}, F) with rational weights.
/// Dimension 0 is the valid trivial automaton.
class Wfa {
 public:
  Wfa(std::vector<std::string> alphabet, Vector initial, std::vector<Matrix> transitions,
      Vector final_dist);

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  std::size_t alphabet_size() const { return alphabet_.size(); }
  std::size_t dim() const { return initial_.size(); }
  const Vector& initial() const { return initial_; }
  const Vector& final_dist() const { return final_; }
  const Matrix& transition(Letter a) const;
  const std::vector<Matrix>& transitions() const { return transitions_; }

  /// Alphabet is exactly ("0", "1") in that order.
  bool is_binary() const;

  Wfa with_initial(Vector initial) const;
  Wfa with_final(Vector final_dist) const;

  /// Word from text. When every letter is a single character the text is
  /// read character by character; otherwise letters are comma separated.
  /// Throws PreconditionError on a foreign letter.
  Word parse_word(std::string_view text) const;
  std::string format_word(const Word& w) const;
  Letter letter(std::string_view symbol) const;

  friend bool operator==(const Wfa&, const Wfa&) = default;

 private:
  std::vector<std::string> alphabet_;
  Vector initial_;
  std::vector<Matrix> transitions_;
  Vector final_;
};

/// A_{v_1} ... A_{v_m}; identity for the empty word.
Matrix word_matrix(const Wfa& a, const Word& v);

/// F_A(v) = I A_v F.
Rational eval_word(const Wfa& a, const Word& v);

/// f_A(u v^omega), decided exactly. The prefix sequence splits into |v|
/// subsequences I A_u A_v^j A_p F, one per proper prefix p of v; the value
/// exists iff each converges and all limits agree.
OmegaValue omega_eval(const Wfa& a, const UltimatelyPeriodicWord& w);

/// Exact check of sum_a A_a F = |Sigma| F.
bool is_ap(const Wfa& a);

/// (I M, M^-1 A_a M, M^-1 F). Throws SingularMatrixError for singular M.
Wfa change_basis(const Wfa& a, const Matrix& m);

/// Basis of <I A_u> in BFS discovery order (rows).
std::vector<Vector> forward_basis(const Wfa& a);
/// Basis of <A_u F> in BFS discovery order (columns).
std::vector<Vector> backward_basis(const Wfa& a);

bool is_left_minimal(const Wfa& a);
bool is_right_minimal(const Wfa& a);
bool is_minimal(const Wfa& a);

/// Restriction to the forward span; the result is left minimal.
Wfa left_reduce(const Wfa& a);
/// Quotient onto the backward span; the result is right minimal.
Wfa right_reduce(const Wfa& a);
/// Minimal automaton with the same word function (left then right
/// reduction). Already minimal input is returned unchanged.
Wfa minimize(const Wfa& a);

/// Automaton computing F_A - F_B (direct sum with negated second initial
/// distribution). Throws PreconditionError on alphabet mismatch.
Wfa difference(const Wfa& a, const Wfa& b);

/// Decides f_A = f_B for ap automata. The caller guarantees that at least
/// one of the two omega-functions is everywhere defined; this is not checked.
bool equal_ap(const Wfa& a, const Wfa& b);

/// True iff the ap automaton computes the zero function.
bool is_zero_ap(const Wfa& a);

/// Replaces the final distribution by F' = lim ((sum_a A_a)/|Sigma|)^i G
/// where G = lim_k A_{pref_k(w)} F along the anchor word w. Non left-minimal
/// input is minimized first. Returns nullopt when a limit fails to exist
/// or the result is not ap.
std::optional<Wfa> ap_redistribute(const Wfa& a, const UltimatelyPeriodicWord& anchor);

/// Binary expansion of a dyadic x = p / 2^m in [0,1), without trailing
/// padding beyond m bits. Throws PreconditionError when x is not dyadic or
/// out of range.
Word dyadic_bits(const Rational& x);

/// f^(x) = f_A(bin(x)) for dyadic x, i.e. omega_eval at bits(x) 0^omega.
OmegaValue real_eval_dyadic(const Wfa& a, const Rational& x);

struct Sample {
  Rational x;
  OmegaValue value;
};

/// f^(i / 2^m) for i = 0 .. 2^m - 1.
std::vector<Sample> sample(const Wfa& a, unsigned depth);

}  // namespace wfa
