#include "wfa/wfa.hpp"

#include <deque>

#include "wfa/error.hpp"
#include "wfa/linalg.hpp"
#include "wfa/power_limit.hpp"

namespace wfa {

Word Word::prefix(std::size_t k) const {
  if (k > letters_.size()) throw PreconditionError("prefix longer than word");
  return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(k)));
}

Word operator+(const Word& a, const Word& b) {
  std::vector<Letter> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

std::vector<Word> words_of_length(std::size_t alphabet_size, std::size_t k) {
  std::vector<Word> out{Word()};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Word> next;
    next.reserve(out.size() * alphabet_size);
    for (const auto& w : out) {
      for (Letter a = 0; a < alphabet_size; ++a) {
        Word x = w;
        x.push_back(a);
        next.push_back(std::move(x));
      }
    }
    out = std::move(next);
  }
  return out;
}

UltimatelyPeriodicWord::UltimatelyPeriodicWord(Word head_word, Word period_word)
    : head(std::move(head_word)), period(std::move(period_word)) {
  if (period.empty()) throw PreconditionError("ultimately periodic word needs a nonempty period");
}

Letter UltimatelyPeriodicWord::at(std::size_t i) const {
  if (i < head.size()) return head[i];
  return period[(i - head.size()) % period.size()];
}

Word UltimatelyPeriodicWord::prefix(std::size_t k) const {
  Word w;
  for (std::size_t i = 0; i < k; ++i) w.push_back(at(i));
  return w;
}

// ---------------------------------------------------------------------------

Wfa::Wfa(std::vector<std::string> alphabet, Vector initial, std::vector<Matrix> transitions,
         Vector final_dist)
    : alphabet_(std::move(alphabet)),
      initial_(std::move(initial)),
      transitions_(std::move(transitions)),
      final_(std::move(final_dist)) {
  if (alphabet_.empty()) throw PreconditionError("alphabet must not be empty");
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (alphabet_[i].empty()) throw PreconditionError("empty letter symbol");
    for (std::size_t j = 0; j < i; ++j) {
      if (alphabet_[i] == alphabet_[j]) throw PreconditionError("duplicate letter '" + alphabet_[i] + "'");
    }
  }
  if (transitions_.size() != alphabet_.size()) {
    throw DimensionError("need exactly one transition matrix per letter");
  }
  const std::size_t n = initial_.size();
  if (final_.size() != n) throw DimensionError("initial and final distributions differ in length");
  for (const auto& m : transitions_) {
    if (m.rows() != n || m.cols() != n) {
      throw DimensionError("transition matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    }
  }
}

const Matrix& Wfa::transition(Letter a) const {
  if (a >= transitions_.size()) throw PreconditionError("foreign letter index " + std::to_string(a));
  return transitions_[a];
}

bool Wfa::is_binary() const {
  return alphabet_.size() == 2 && alphabet_[0] == "0" && alphabet_[1] == "1";
}

Wfa Wfa::with_initial(Vector initial) const {
  return Wfa(alphabet_, std::move(initial), transitions_, final_);
}

Wfa Wfa::with_final(Vector final_dist) const {
  return Wfa(alphabet_, initial_, transitions_, std::move(final_dist));
}

Letter Wfa::letter(std::string_view symbol) const {
  for (Letter a = 0; a < alphabet_.size(); ++a) {
    if (alphabet_[a] == symbol) return a;
  }
  throw PreconditionError("foreign letter '" + std::string(symbol) + "'");
}

Word Wfa::parse_word(std::string_view text) const {
  Word w;
  bool single_chars = true;
  for (const auto& s : alphabet_) single_chars = single_chars && s.size() == 1;
  if (single_chars && text.find(',') == std::string_view::npos) {
    for (char c : text) w.push_back(letter(std::string_view(&c, 1)));
    return w;
  }
  std::size_t start = 0;
  if (text.empty()) return w;
  while (true) {
    const auto comma = text.find(',', start);
    w.push_back(letter(text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                          : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return w;
}

std::string Wfa::format_word(const Word& w) const {
  bool single_chars = true;
  for (const auto& s : alphabet_) single_chars = single_chars && s.size() == 1;
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single_chars && i > 0) out += ",";
    out += alphabet_.at(w[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------

Matrix word_matrix(const Wfa& a, const Word& v) {
  Matrix p = Matrix::identity(a.dim());
  for (Letter x : v) p = p * a.transition(x);
  return p;
}

namespace {

// I A_v as a row vector.
Vector row_through(const Wfa& a, Vector row, const Word& v) {
  for (Letter x : v) row = row * a.transition(x);
  return row;
}

// A_v x as a column vector.
Vector column_through(const Wfa& a, const Word& v, Vector col) {
  for (auto it = v.letters().rbegin(); it != v.letters().rend(); ++it) col = a.transition(*it) * col;
  return col;
}

// Limit of c A_u A_v^j A_p F over j, for every proper prefix p of v. All
// limits must exist and agree.
OmegaValue functional_limit(const Wfa& a, const Vector& c, const Word& period) {
  const Matrix cycle = word_matrix(a, period);
  OmegaValue common;
  for (std::size_t r = 0; r < period.size(); ++r) {
    const Vector y = column_through(a, period.prefix(r), a.final_dist());
    OmegaValue lim = sequence_limit(c, cycle, y);
    if (!lim) return std::nullopt;
    if (common && *common != *lim) return std::nullopt;
    common = std::move(lim);
  }
  return common;
}

// Coordinates of vectors lying in the row span of an independent family.
class RowCoordinates {
 public:
  explicit RowCoordinates(const std::vector<Vector>& basis, std::size_t dim) {
    const Matrix b = Matrix::from_rows(basis, dim);
    pivots_ = row_reduce(b).pivots;
    Matrix square(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < pivots_.size(); ++j) square(i, j) = b(i, pivots_[j]);
    }
    inv_ = *inverse(square);
  }

  Vector of(const Vector& v) const {
    Vector restricted(pivots_.size());
    for (std::size_t j = 0; j < pivots_.size(); ++j) restricted[j] = v[pivots_[j]];
    return restricted * inv_;
  }

 private:
  std::vector<std::size_t> pivots_;
  Matrix inv_;
};

Wfa trivial_like(const Wfa& a) {
  return Wfa(a.alphabet(), Vector(), std::vector<Matrix>(a.alphabet_size(), Matrix()), Vector());
}

}  // namespace

Rational eval_word(const Wfa& a, const Word& v) {
  return dot(row_through(a, a.initial(), v), a.final_dist());
}

OmegaValue omega_eval(const Wfa& a, const UltimatelyPeriodicWord& w) {
  for (Letter x : w.head) a.transition(x);
  for (Letter x : w.period) a.transition(x);
  if (a.dim() == 0) return Rational();
  return functional_limit(a, row_through(a, a.initial(), w.head), w.period);
}

bool is_ap(const Wfa& a) {
  Vector sum(a.dim());
  for (const auto& m : a.transitions()) sum += m * a.final_dist();
  return sum == a.final_dist() * Rational(static_cast<long>(a.alphabet_size()));
}

Wfa change_basis(const Wfa& a, const Matrix& m) {
  if (m.rows() != a.dim() || m.cols() != a.dim()) throw DimensionError("change_basis: wrong matrix size");
  const auto inv = inverse(m);
  if (!inv) throw SingularMatrixError("change_basis: basis matrix is singular");
  std::vector<Matrix> ts;
  ts.reserve(a.alphabet_size());
  for (const auto& t : a.transitions()) ts.push_back(*inv * t * m);
  return Wfa(a.alphabet(), a.initial() * m, std::move(ts), *inv * a.final_dist());
}

std::vector<Vector> forward_basis(const Wfa& a) {
  IncrementalBasis span(a.dim());
  std::vector<Vector> basis;
  std::deque<Vector> queue;
  if (a.dim() > 0 && span.add(a.initial())) {
    basis.push_back(a.initial());
    queue.push_back(a.initial());
  }
  while (!queue.empty()) {
    const Vector v = queue.front();
    queue.pop_front();
    for (const auto& t : a.transitions()) {
      Vector next = v * t;
      if (span.add(next)) {
        basis.push_back(next);
        queue.push_back(std::move(next));
      }
    }
  }
  return basis;
}

std::vector<Vector> backward_basis(const Wfa& a) {
  IncrementalBasis span(a.dim());
  std::vector<Vector> basis;
  std::deque<Vector> queue;
  if (a.dim() > 0 && span.add(a.final_dist())) {
    basis.push_back(a.final_dist());
    queue.push_back(a.final_dist());
  }
  while (!queue.empty()) {
    const Vector v = queue.front();
    queue.pop_front();
    for (const auto& t : a.transitions()) {
      Vector next = t * v;
      if (span.add(next)) {
        basis.push_back(next);
        queue.push_back(std::move(next));
      }
    }
  }
  return basis;
}

bool is_left_minimal(const Wfa& a) { return forward_basis(a).size() == a.dim(); }
bool is_right_minimal(const Wfa& a) { return backward_basis(a).size() == a.dim(); }
bool is_minimal(const Wfa& a) { return is_left_minimal(a) && is_right_minimal(a); }

Wfa left_reduce(const Wfa& a) {
  const auto basis = forward_basis(a);
  if (basis.empty()) return trivial_like(a);
  const RowCoordinates coords(basis, a.dim());
  const std::size_t l = basis.size();
  std::vector<Matrix> ts;
  for (const auto& t : a.transitions()) {
    Matrix reduced(l, l);
    for (std::size_t i = 0; i < l; ++i) reduced.set_row(i, coords.of(basis[i] * t));
    ts.push_back(std::move(reduced));
  }
  Vector fin(l);
  for (std::size_t i = 0; i < l; ++i) fin[i] = dot(basis[i], a.final_dist());
  return Wfa(a.alphabet(), coords.of(a.initial()), std::move(ts), std::move(fin));
}

Wfa right_reduce(const Wfa& a) {
  const auto basis = backward_basis(a);
  if (basis.empty()) return trivial_like(a);
  // same as a left reduction of the transposed automaton
  const RowCoordinates coords(basis, a.dim());
  const std::size_t r = basis.size();
  std::vector<Matrix> ts;
  for (const auto& t : a.transitions()) {
    Matrix reduced(r, r);
    for (std::size_t j = 0; j < r; ++j) reduced.set_column(j, coords.of(t * basis[j]));
    ts.push_back(std::move(reduced));
  }
  Vector init(r);
  for (std::size_t j = 0; j < r; ++j) init[j] = dot(a.initial(), basis[j]);
  return Wfa(a.alphabet(), std::move(init), std::move(ts), coords.of(a.final_dist()));
}

Wfa minimize(const Wfa& a) { return is_minimal(a) ? a : right_reduce(left_reduce(a)); }

Wfa difference(const Wfa& a, const Wfa& b) {
  if (a.alphabet() != b.alphabet()) throw PreconditionError("automata have different alphabets");
  std::vector<Matrix> ts;
  for (Letter x = 0; x < a.alphabet_size(); ++x) ts.push_back(direct_sum(a.transition(x), b.transition(x)));
  return Wfa(a.alphabet(), concat(a.initial(), -b.initial()), std::move(ts),
             concat(a.final_dist(), b.final_dist()));
}

bool equal_ap(const Wfa& a, const Wfa& b) {
  if (a.alphabet() != b.alphabet()) throw PreconditionError("equal_ap: alphabets differ");
  if (!is_ap(a) || !is_ap(b)) throw PreconditionError("equal_ap: both automata must be ap");
  return minimize(difference(a, b)).dim() == 0;
}

bool is_zero_ap(const Wfa& a) {
  if (!is_ap(a)) throw PreconditionError("is_zero_ap: automaton is not ap");
  return minimize(a).dim() == 0;
}

std::optional<Wfa> ap_redistribute(const Wfa& input, const UltimatelyPeriodicWord& anchor) {
  const Wfa a = is_left_minimal(input) ? input : minimize(input);
  const std::size_t n = a.dim();
  if (n == 0) return a;
  Vector g(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector c = row_through(a, Vector::unit(n, i), anchor.head);
    auto gi = functional_limit(a, c, anchor.period);
    if (!gi) return std::nullopt;
    g[i] = *gi;
  }
  Matrix average = Matrix::zero(n, n);
  for (const auto& t : a.transitions()) average += t;
  average *= Rational(1) / Rational(static_cast<long>(a.alphabet_size()));
  auto f = power_limit_vec(average, g);
  if (!f) return std::nullopt;
  Wfa out = a.with_final(std::move(*f));
  if (!is_ap(out)) return std::nullopt;
  return out;
}

Word dyadic_bits(const Rational& x) {
  if (x.sign() < 0 || x >= Rational(1)) throw PreconditionError("dyadic point must lie in [0,1)");
  const mpz_class den = x.denominator();
  const std::size_t bits = mpz_sizeinbase(den.get_mpz_t(), 2) - 1;
  if (mpz_scan1(den.get_mpz_t(), 0) != bits) throw PreconditionError(x.str() + " is not dyadic");
  const mpz_class num = x.numerator();
  Word w;
  for (std::size_t i = bits; i-- > 0;) w.push_back(mpz_tstbit(num.get_mpz_t(), i) ? 1 : 0);
  return w;
}

OmegaValue real_eval_dyadic(const Wfa& a, const Rational& x) {
  if (!a.is_binary()) throw PreconditionError("real functions need the binary alphabet (0, 1)");
  return omega_eval(a, UltimatelyPeriodicWord(dyadic_bits(x), Word{0}));
}

std::vector<Sample> sample(const Wfa& a, unsigned depth) {
  if (!a.is_binary()) throw PreconditionError("sampling needs the binary alphabet (0, 1)");
  if (depth > 24) throw PreconditionError("sample depth too large");
  const unsigned long count = 1UL << depth;
  std::vector<Sample> out;
  out.reserve(count);
  // f(v 0^omega) = I A_v G when G = lim A_0^k F exists as a vector
  const auto tail = a.dim() == 0 ? std::optional<Vector>(Vector()) : power_limit_vec(a.transition(0), a.final_dist());
  for (unsigned long i = 0; i < count; ++i) {
    Rational x{mpq_class(mpz_class(i), mpz_class(count))};
    if (tail) {
      const Word bits = dyadic_bits(x);
      out.push_back({x, dot(row_through(a, a.initial(), bits), *tail)});
    } else {
      OmegaValue v = real_eval_dyadic(a, x);
      out.push_back({std::move(x), std::move(v)});
    }
  }
  return out;
}

}  // namespace wfa
