#pragma once

#include <string>

#include "json.hpp"
#include "wfa/canonical.hpp"
#include "wfa/continuity.hpp"
#include "wfa/reductions.hpp"
#include "wfa/stability.hpp"
#include "wfa/synthesis.hpp"
#include "wfa/wfa.hpp"

namespace wfa {

/// Insertion-ordered JSON, so serialized key order is fixed.
using Json = nlohmann::ordered_json;

/// Rationals are "p/q" strings; integers are also accepted on input.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);
/// Throws ParseError unless j is a rows x cols array of arrays.
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);
/// Square matrix of any size.
Matrix square_matrix_from_json(const Json& j);

/// {"alphabet", "dim", "initial", "final", "transitions": {letter: matrix}}.
Json to_json(const Wfa& a);
Wfa wfa_from_json(const Json& j);

/// {"alphabet", "matrices": {letter: matrix}}.
Json to_json(const MatrixSet& s);
MatrixSet matrix_set_from_json(const Json& j);

/// Automaton fields followed by "blocks" and "columns" keyed by letter.
Json to_json(const CanonicalForm& c);

/// {"B0", "B1", "k", "b0"} with an optional "initial".
SynthesisInput synthesis_input_from_json(const Json& j);

/// {"provenance", "members": [{"i", "j", "wfa"}]} with 1-based indices.
Json to_json(const GadgetFamily& g);

/// Verdicts carry their tag under "verdict" and the search budget.
Json to_json(const StabilityVerdict& v, const MatrixSet& s, std::size_t budget);
Json to_json(const RcpVerdict& v, const MatrixSet& s, std::size_t budget);
Json to_json(const ContinuityVerdict& v, const Wfa& a, std::size_t budget);
Json to_json(const UniformContinuityVerdict& v, const Wfa& a, std::size_t budget);

/// Parses JSON text; throws ParseError with the parser's message.
Json parse_json(const std::string& text);
/// Whole file as a string; throws Error when it cannot be read.
std::string read_file(const std::string& path);
/// Throws Error when the file cannot be written.
void write_file(const std::string& path, const std::string& content);

}  // namespace wfa
