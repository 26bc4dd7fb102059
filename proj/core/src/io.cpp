#include "wfa/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wfa {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw usage_error(std::string(what) + ": malformed JSON");
  return j;
}

std::string load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void store_file(const std::string& text, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw usage_error("cannot write \"" + path + "\"");
  out << text;
}

SemiringId semiring_field(const json& j, const char* what) {
  if (!j.contains("semiring") || !j["semiring"].is_string()) {
    throw usage_error(std::string(what) + ": missing semiring id");
  }
  auto sid = semiring_from_name(j["semiring"].get<std::string>());
  if (!sid) {
    throw usage_error(std::string(what) + ": unknown semiring \"" +
                      j["semiring"].get<std::string>() + "\"");
  }
  return *sid;
}

std::size_t size_field(const json& j, const char* key, const char* what) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) {
    throw usage_error(std::string(what) + ": missing or invalid \"" + key + "\"");
  }
  return j[key].get<std::size_t>();
}

Value entry_value(const json& e, SemiringId sid, const char* what) {
  if (e.is_string()) return parse_value(sid, e.get<std::string>());
  if (e.is_number_integer()) return parse_value(sid, std::to_string(e.get<long long>()));
  throw usage_error(std::string(what) +
                    ": entries must be encoded as strings (or plain integers)");
}

Matrix matrix_from_nested(const json& rows, SemiringId sid, std::size_t dim,
                          const char* what) {
  if (!rows.is_array() || rows.size() != dim) {
    throw usage_error(std::string(what) + ": expected " + std::to_string(dim) + " rows");
  }
  Matrix out(dim, dim, sid);
  for (std::size_t i = 0; i < dim; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != dim) {
      throw usage_error(std::string(what) + ": expected " + std::to_string(dim) +
                        " entries per row");
    }
    for (std::size_t j = 0; j < dim; ++j) {
      out.set(i, j, entry_value(row[j], sid, what));
    }
  }
  return out;
}

json matrix_to_nested(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(to_string(m.at(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out.push_back(to_string(m.at(i, j)));
    }
  }
  return out;
}

json automaton_json_base(const LinearRepresentation& a) {
  json j;
  j["semiring"] = descriptor(a.semiring()).name;
  json alphabet = json::array();
  for (char c : a.alphabet().letters()) alphabet.push_back(std::string(1, c));
  j["alphabet"] = std::move(alphabet);
  j["dim"] = a.dim();
  j["lambda"] = vector_json(a.lambda());
  j["gamma"] = vector_json(a.gamma());
  json mu = json::object();
  for (const auto& [letter, m] : a.transitions()) {
    mu[std::string(1, letter)] = matrix_to_nested(m);
  }
  j["mu"] = std::move(mu);
  return j;
}

}  // namespace

Matrix parse_matrix_json(const std::string& text) {
  json j = parse_json(text, "matrix file");
  SemiringId sid = semiring_field(j, "matrix file");
  std::size_t rows = size_field(j, "rows", "matrix file");
  std::size_t cols = size_field(j, "cols", "matrix file");
  if (!j.contains("entries") || !j["entries"].is_array() ||
      j["entries"].size() != rows * cols) {
    throw usage_error("matrix file: entries must be an array of rows*cols values");
  }
  Matrix out(rows, cols, sid);
  for (std::size_t k = 0; k < rows * cols; ++k) {
    out.set(k / cols, k % cols, entry_value(j["entries"][k], sid, "matrix file"));
  }
  return out;
}

std::string matrix_to_json(const Matrix& m) {
  json j;
  j["semiring"] = descriptor(m.semiring()).name;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
      entries.push_back(to_string(m.at(i, k)));
    }
  }
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

Matrix read_matrix_file(const std::string& path) { return parse_matrix_json(load_file(path)); }

void write_matrix_file(const Matrix& m, const std::string& path) {
  store_file(matrix_to_json(m), path);
}

EpsilonAutomaton AutomatonFile::as_epsilon_automaton() const {
  if (!epsilon) throw usage_error("automaton file has no epsilon field");
  return EpsilonAutomaton(representation, *epsilon);
}

AutomatonFile parse_automaton_json(const std::string& text) {
  json j = parse_json(text, "automaton file");
  SemiringId sid = semiring_field(j, "automaton file");
  std::size_t dim = size_field(j, "dim", "automaton file");

  if (!j.contains("alphabet") || !j["alphabet"].is_array()) {
    throw usage_error("automaton file: missing alphabet array");
  }
  std::string letters;
  for (const json& entry : j["alphabet"]) {
    if (!entry.is_string() || entry.get<std::string>().size() != 1) {
      throw usage_error("automaton file: alphabet entries must be single-character strings");
    }
    letters += entry.get<std::string>();
  }
  Alphabet alphabet(letters);
  if (alphabet.size() != j["alphabet"].size()) {
    throw usage_error("automaton file: duplicate alphabet letters");
  }

  auto vector_field = [&](const char* key, std::size_t rows, std::size_t cols) {
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != dim) {
      throw usage_error(std::string("automaton file: \"") + key + "\" must be an array of " +
                        std::to_string(dim) + " entries");
    }
    Matrix out(rows, cols, sid);
    for (std::size_t k = 0; k < dim; ++k) {
      out.set(rows == 1 ? 0 : k, rows == 1 ? k : 0,
              entry_value(j[key][k], sid, "automaton file"));
    }
    return out;
  };
  Matrix lambda = vector_field("lambda", 1, dim);
  Matrix gamma = vector_field("gamma", dim, 1);

  if (!j.contains("mu") || !j["mu"].is_object()) {
    throw usage_error("automaton file: missing mu object");
  }
  std::map<char, Matrix> mu;
  for (const auto& [key, rows] : j["mu"].items()) {
    if (key.size() != 1 || !alphabet.contains(key[0])) {
      throw usage_error("automaton file: mu key \"" + key + "\" is not an alphabet letter");
    }
    mu.emplace(key[0], matrix_from_nested(rows, sid, dim, "automaton file"));
  }
  if (mu.size() != alphabet.size()) {
    throw usage_error("automaton file: mu must define exactly the alphabet's letters");
  }

  LinearRepresentation rep(std::move(alphabet), std::move(lambda), std::move(mu),
                           std::move(gamma));
  std::optional<Matrix> eps;
  if (j.contains("epsilon")) {
    eps = matrix_from_nested(j["epsilon"], sid, dim, "automaton file");
  }
  return AutomatonFile{std::move(rep), std::move(eps)};
}

std::string automaton_to_json(const LinearRepresentation& a) {
  return automaton_json_base(a).dump(2) + "\n";
}

std::string automaton_to_json(const EpsilonAutomaton& a) {
  json j = automaton_json_base(a.base());
  j["epsilon"] = matrix_to_nested(a.eps());
  return j.dump(2) + "\n";
}

AutomatonFile read_automaton_file(const std::string& path) {
  return parse_automaton_json(load_file(path));
}

void write_automaton_file(const LinearRepresentation& a, const std::string& path) {
  store_file(automaton_to_json(a), path);
}

void write_automaton_file(const EpsilonAutomaton& a, const std::string& path) {
  store_file(automaton_to_json(a), path);
}

}  // namespace wfa
