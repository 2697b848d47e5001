#include "wfa/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "wfa/error.hpp"

namespace wfa {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::vector<std::string> alphabet_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("\"alphabet\" must be a nonempty array of strings");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& x : j) {
    if (!x.is_string()) throw ParseError("\"alphabet\" must be a nonempty array of strings");
    if (!seen.insert(x.get<std::string>()).second) throw ParseError("duplicate letter in \"alphabet\"");
    out.push_back(x.get<std::string>());
  }
  return out;
}

// One matrix per letter from an object keyed by the alphabet.
std::vector<Matrix> letter_matrices(const Json& j, const char* key,
                                    const std::vector<std::string>& alphabet, std::size_t n) {
  const Json& map = field(j, key);
  if (!map.is_object()) throw ParseError(std::string("\"") + key + "\" must be an object");
  if (map.size() != alphabet.size()) {
    throw ParseError(std::string("\"") + key + "\" must have exactly one entry per letter");
  }
  std::vector<Matrix> out;
  for (const auto& letter : alphabet) {
    const auto it = map.find(letter);
    if (it == map.end()) throw ParseError(std::string("\"") + key + "\" lacks letter \"" + letter + "\"");
    out.push_back(matrix_from_json(*it, n, n));
  }
  return out;
}

Json word_to_json(const Word& w, const std::vector<std::string>& alphabet) {
  Json out = Json::array();
  for (Letter a : w) out.push_back(alphabet.at(a));
  return out;
}

Json base(const char* tag, std::size_t budget) {
  Json j;
  j["verdict"] = tag;
  j["budget"] = budget;
  return j;
}

Json unknown_json(const verdict::Unknown& u, std::size_t budget) {
  Json j = base("Unknown", budget);
  j["explored_depth"] = u.explored_depth;
  return j;
}

Json not_continuous_json(const verdict::NotContinuous& nc, const std::vector<std::string>& alphabet,
                         std::size_t budget) {
  Json j = base("NotContinuous", budget);
  j["reason"] = to_string(nc.reason);
  if (nc.witness) j["witness"] = word_to_json(*nc.witness, alphabet);
  j["detail"] = nc.detail;
  return j;
}

}  // namespace

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rationals must be \"p/q\" strings or integers");
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(rational_to_json(v[i]));
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("vectors must be arrays");
  Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = rational_from_json(j[i]);
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) {
    throw ParseError("expected a matrix with " + std::to_string(rows) + " rows");
  }
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Vector row = vector_from_json(j[r]);
    if (row.size() != cols) throw ParseError("expected matrix rows of length " + std::to_string(cols));
    m.set_row(r, row);
  }
  return m;
}

Matrix square_matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("matrices must be arrays of rows");
  return matrix_from_json(j, j.size(), j.size());
}

Json to_json(const Wfa& a) {
  Json j;
  j["alphabet"] = a.alphabet();
  j["dim"] = a.dim();
  j["initial"] = vector_to_json(a.initial());
  j["final"] = vector_to_json(a.final_dist());
  Json ts = Json::object();
  for (Letter x = 0; x < a.alphabet_size(); ++x) ts[a.alphabet()[x]] = matrix_to_json(a.transition(x));
  j["transitions"] = std::move(ts);
  return j;
}

Wfa wfa_from_json(const Json& j) {
  auto alphabet = alphabet_from_json(field(j, "alphabet"));
  const Json& dim = field(j, "dim");
  if (!dim.is_number_unsigned() && !(dim.is_number_integer() && dim.get<long>() >= 0)) {
    throw ParseError("\"dim\" must be a non-negative integer");
  }
  const auto n = dim.get<std::size_t>();
  Vector initial = vector_from_json(field(j, "initial"));
  Vector final_dist = vector_from_json(field(j, "final"));
  if (initial.size() != n || final_dist.size() != n) {
    throw ParseError("\"initial\" and \"final\" must have length dim");
  }
  auto ts = letter_matrices(j, "transitions", alphabet, n);
  return Wfa(std::move(alphabet), std::move(initial), std::move(ts), std::move(final_dist));
}

Json to_json(const MatrixSet& s) {
  Json j;
  j["alphabet"] = s.alphabet();
  Json ms = Json::object();
  for (Letter x = 0; x < s.size(); ++x) ms[s.alphabet()[x]] = matrix_to_json(s[x]);
  j["matrices"] = std::move(ms);
  return j;
}

MatrixSet matrix_set_from_json(const Json& j) {
  auto alphabet = alphabet_from_json(field(j, "alphabet"));
  const Json& ms = field(j, "matrices");
  if (!ms.is_object() || ms.empty()) throw ParseError("\"matrices\" must be a nonempty object");
  const auto first = ms.find(alphabet.front());
  if (first == ms.end()) throw ParseError("\"matrices\" lacks letter \"" + alphabet.front() + "\"");
  const std::size_t n = first->size();
  return MatrixSet(alphabet, letter_matrices(j, "matrices", alphabet, n));
}

Json to_json(const CanonicalForm& c) {
  Json j = to_json(c.wfa);
  Json blocks = Json::object();
  Json columns = Json::object();
  for (Letter x = 0; x < c.wfa.alphabet_size(); ++x) {
    blocks[c.wfa.alphabet()[x]] = matrix_to_json(c.blocks[x]);
    columns[c.wfa.alphabet()[x]] = vector_to_json(c.columns[x]);
  }
  j["blocks"] = std::move(blocks);
  j["columns"] = std::move(columns);
  if (c.eigenspace_multiple) j["eigenspace_multiple"] = true;
  return j;
}

SynthesisInput synthesis_input_from_json(const Json& j) {
  SynthesisInput in{square_matrix_from_json(field(j, "B0")), square_matrix_from_json(field(j, "B1")),
                    vector_from_json(field(j, "k")), vector_from_json(field(j, "b0")), std::nullopt};
  if (j.contains("initial")) in.initial = vector_from_json(j["initial"]);
  return in;
}

Json to_json(const GadgetFamily& g) {
  Json j;
  j["provenance"] = g.provenance;
  Json members = Json::array();
  for (const auto& m : g.members) {
    Json e;
    e["i"] = m.i + 1;
    e["j"] = m.j + 1;
    e["wfa"] = to_json(m.wfa);
    members.push_back(std::move(e));
  }
  j["members"] = std::move(members);
  return j;
}

Json to_json(const StabilityVerdict& v, const MatrixSet& s, std::size_t budget) {
  if (const auto* st = std::get_if<verdict::Stable>(&v)) {
    Json j = base("Stable", budget);
    j["certificate_depth"] = st->certificate_depth;
    return j;
  }
  if (const auto* ns = std::get_if<verdict::NotStable>(&v)) {
    Json j = base("NotStable", budget);
    j["witness"] = word_to_json(ns->witness, s.alphabet());
    return j;
  }
  return unknown_json(std::get<verdict::Unknown>(v), budget);
}

Json to_json(const RcpVerdict& v, const MatrixSet& s, std::size_t budget) {
  if (const auto* c = std::get_if<verdict::ContinuousRcp>(&v)) {
    Json j = base("ContinuousRCP", budget);
    j["certificate_depth"] = c->certificate_depth;
    return j;
  }
  if (const auto* n = std::get_if<verdict::NotRcp>(&v)) {
    Json j = base("NotRCP", budget);
    if (n->witness) j["witness"] = word_to_json(*n->witness, s.alphabet());
    j["reason"] = n->reason;
    return j;
  }
  return unknown_json(std::get<verdict::Unknown>(v), budget);
}

Json to_json(const ContinuityVerdict& v, const Wfa& a, std::size_t budget) {
  if (const auto* c = std::get_if<verdict::ContinuousEverywhere>(&v)) {
    Json j = base("ContinuousEverywhere", budget);
    j["certificate_depth"] = c->certificate_depth;
    return j;
  }
  if (const auto* n = std::get_if<verdict::NotContinuous>(&v)) return not_continuous_json(*n, a.alphabet(), budget);
  return unknown_json(std::get<verdict::Unknown>(v), budget);
}

Json to_json(const UniformContinuityVerdict& v, const Wfa& a, std::size_t budget) {
  if (const auto* b = std::get_if<verdict::BothContinuous>(&v)) {
    Json j = base("BothContinuous", budget);
    j["certificate_depth"] = b->certificate_depth;
    return j;
  }
  if (const auto* o = std::get_if<verdict::OmegaOnlyContinuous>(&v)) {
    Json j = base("OmegaOnlyContinuous", budget);
    j["certificate_depth"] = o->certificate_depth;
    j["note"] = "the real function is discontinuous at some dyadic point";
    return j;
  }
  if (const auto* n = std::get_if<verdict::NotContinuous>(&v)) return not_continuous_json(*n, a.alphabet(), budget);
  return unknown_json(std::get<verdict::Unknown>(v), budget);
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
  if (!out.flush()) throw Error("cannot write " + path);
}

}  // namespace wfa
