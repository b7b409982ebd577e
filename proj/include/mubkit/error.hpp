#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mubkit {

enum class ErrorKind {
  invalid_dimension,
  invalid_characteristic,
  too_large,
  no_inverse,
  shape_error,
  domain_error,
  index_error,
  numerical_degeneracy,
  no_match,
  invariance_violation,
  degenerate_projection,
  inconsistent_data,
  incomplete_data,
  parse_error,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (and tests) can dispatch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_dimension: return "invalid-dimension";
    case ErrorKind::invalid_characteristic: return "invalid-characteristic";
    case ErrorKind::too_large: return "too-large";
    case ErrorKind::no_inverse: return "no-inverse";
    case ErrorKind::shape_error: return "shape-error";
    case ErrorKind::domain_error: return "domain-error";
    case ErrorKind::index_error: return "index-error";
    case ErrorKind::numerical_degeneracy: return "numerical-degeneracy";
    case ErrorKind::no_match: return "no-match";
    case ErrorKind::invariance_violation: return "invariance-violation";
    case ErrorKind::degenerate_projection: return "degenerate-projection";
    case ErrorKind::inconsistent_data: return "inconsistent-data";
    case ErrorKind::incomplete_data: return "incomplete-data";
    case ErrorKind::parse_error: return "parse-error";
  }
  return "unknown";
}

}  // namespace mubkit
