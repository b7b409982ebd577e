#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mubkit/bases.hpp"
#include "mubkit/galois.hpp"
#include "mubkit/linalg.hpp"
#include "mubkit/tomography.hpp"

namespace mubkit {

using Json = nlohmann::ordered_json;

/// Complex numbers are written as [re, im].
Json to_json(Complex z);
Json to_json(const ComplexVector& v);
Json to_json(const ComplexMatrix& m);

/// { size, kind, p, m, modulus, add, mul }
Json structure_json(const FiniteStructure& s);

/// { dim, construction_index, states }
Json basis_json(const Basis& b);
/// { dim, construction, bases: [...] }
Json family_json(const FiniteStructure& s, const std::vector<Basis>& family);
/// { dim, matrix }
Json density_json(const DensityMatrix& rho);

/// Parsers throw parse-error on malformed input.
Complex complex_from_json(const Json& j);
ComplexMatrix matrix_from_json(const Json& j);
Basis basis_from_json(const Json& j);
/// Accepts a single basis file or a family file.
std::vector<Basis> bases_from_json(const Json& j);
DensityMatrix density_from_json(const Json& j, double tol = kDefaultTol);

Json read_json_file(const std::string& path);

struct Check {
  std::string name;
  double max_residual = 0.0;
  bool pass = false;
};

/// Accumulates named checks; serializes as { checks: [{name, max_residual, pass}] }.
class Report {
 public:
  void add(std::string name, double residual, double tol) { add(std::move(name), residual, residual < tol); }
  void add(std::string name, double residual, bool pass) { checks_.push_back({std::move(name), residual, pass}); }
  void merge(const Report& other) { checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end()); }

  const std::vector<Check>& checks() const noexcept { return checks_; }
  bool all_pass() const;
  std::vector<std::string> failures() const;
  Json to_json() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace mubkit
