#include "mubkit/serialize.hpp"

#include <fstream>

#include "mubkit/error.hpp"

namespace mubkit {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::parse_error, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

Json table_json(const FiniteStructure& s, const std::vector<Label>& flat) {
  Json rows = Json::array();
  for (int a = 0; a < s.size(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < s.size(); ++b) row.push_back(flat[static_cast<std::size_t>(a * s.size() + b)]);
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexVector vector_from_json(const Json& j) {
  if (!j.is_array()) bad("state must be an array of complex numbers");
  ComplexVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = complex_from_json(j[i]);
  return v;
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (const Complex& z : v.entries()) out.push_back(to_json(z));
  return out;
}

Json to_json(const ComplexMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json structure_json(const FiniteStructure& s) {
  Json j;
  j["size"] = s.size();
  j["kind"] = std::string(to_string(s.kind()));
  j["p"] = s.characteristic();
  j["m"] = s.degree();
  j["modulus"] = s.modulus();
  j["add"] = table_json(s, s.add_table());
  j["mul"] = table_json(s, s.mul_table());
  return j;
}

Json basis_json(const Basis& b) {
  Json j;
  j["dim"] = b.dim;
  j["construction_index"] = b.construction_index;
  Json states = Json::array();
  for (const ComplexVector& v : b.states) states.push_back(to_json(v));
  j["states"] = std::move(states);
  return j;
}

Json family_json(const FiniteStructure& s, const std::vector<Basis>& family) {
  Json j;
  j["dim"] = s.size();
  j["construction"] = std::string(to_string(s.kind()));
  Json bases = Json::array();
  for (const Basis& b : family) bases.push_back(basis_json(b));
  j["bases"] = std::move(bases);
  return j;
}

Json density_json(const DensityMatrix& rho) {
  Json j;
  j["dim"] = rho.dim();
  j["matrix"] = to_json(rho.matrix());
  return j;
}

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    bad("complex numbers must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("matrix must be a non-empty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  ComplexMatrix m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) bad("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

Basis basis_from_json(const Json& j) {
  Basis b;
  b.dim = int_field(j, "dim");
  b.construction_index = int_field(j, "construction_index");
  const Json& states = field(j, "states");
  if (!states.is_array()) bad("'states' must be an array");
  for (const Json& s : states) {
    ComplexVector v = vector_from_json(s);
    if (static_cast<int>(v.dim()) != b.dim) bad("state length does not match 'dim'");
    b.states.push_back(std::move(v));
  }
  if (static_cast<int>(b.states.size()) != b.dim) bad("basis must hold 'dim' states");
  return b;
}

std::vector<Basis> bases_from_json(const Json& j) {
  std::vector<Basis> out;
  if (j.is_object() && j.contains("bases")) {
    const Json& list = j.at("bases");
    if (!list.is_array()) bad("'bases' must be an array");
    for (const Json& b : list) out.push_back(basis_from_json(b));
  } else {
    out.push_back(basis_from_json(j));
  }
  return out;
}

DensityMatrix density_from_json(const Json& j, double tol) {
  const int dim = int_field(j, "dim");
  ComplexMatrix m = matrix_from_json(field(j, "matrix"));
  if (static_cast<int>(m.rows()) != dim || static_cast<int>(m.cols()) != dim) bad("matrix shape does not match 'dim'");
  try {
    return DensityMatrix(std::move(m), tol);
  } catch (const Error& e) {
    bad(std::string("not a density matrix (") + e.what() + ")");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    bad(path + ": " + e.what());
  }
}

bool Report::all_pass() const {
  for (const Check& c : checks_)
    if (!c.pass) return false;
  return true;
}

std::vector<std::string> Report::failures() const {
  std::vector<std::string> names;
  for (const Check& c : checks_)
    if (!c.pass) names.push_back(c.name);
  return names;
}

Json Report::to_json() const {
  Json list = Json::array();
  for (const Check& c : checks_) {
    Json entry;
    entry["name"] = c.name;
    entry["max_residual"] = c.max_residual;
    entry["pass"] = c.pass;
    list.push_back(std::move(entry));
  }
  Json j;
  j["checks"] = std::move(list);
  return j;
}

}  // namespace mubkit
