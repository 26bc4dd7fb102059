#pragma once

#include "wfa/automaton.hpp"
#include "wfa/matrix.hpp"

#include <optional>
#include <string>

namespace wfa {

/// Matrix file: a JSON object with fields semiring (id string), rows, cols,
/// entries (row-major array; each entry a string in the per-semiring
/// encoding, or a JSON integer). Emission always uses strings, so
/// parse(print(m)) == m bit-exactly.
Matrix parse_matrix_json(const std::string& text);
std::string matrix_to_json(const Matrix& m);
Matrix read_matrix_file(const std::string& path);
void write_matrix_file(const Matrix& m, const std::string& path);

/// Automaton file: a JSON object with fields semiring, alphabet (array of
/// single-character strings), dim, lambda (array of dim entries), gamma
/// (array of dim entries), mu (object mapping each letter to a dim x dim
/// nested array), and optionally epsilon (dim x dim nested array). A file
/// with an epsilon field denotes a silent-transition automaton.
struct AutomatonFile {
  LinearRepresentation representation;
  std::optional<Matrix> epsilon;

  bool has_epsilon() const { return epsilon.has_value(); }
  EpsilonAutomaton as_epsilon_automaton() const;
};

AutomatonFile parse_automaton_json(const std::string& text);
std::string automaton_to_json(const LinearRepresentation& a);
std::string automaton_to_json(const EpsilonAutomaton& a);
AutomatonFile read_automaton_file(const std::string& path);
void write_automaton_file(const LinearRepresentation& a, const std::string& path);
void write_automaton_file(const EpsilonAutomaton& a, const std::string& path);

}  // namespace wfa
