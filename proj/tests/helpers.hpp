#pragma once

#include <complex>
#include <vector>

#include "mubkit/bases.hpp"
#include "mubkit/galois.hpp"
#include "mubkit/linalg.hpp"
#include "mubkit/random.hpp"

namespace testing_helpers {

using mubkit::Complex;
using mubkit::ComplexMatrix;
using mubkit::ComplexVector;

inline const Complex I{0.0, 1.0};

inline ComplexMatrix pauli_x() { return {{0, 1}, {1, 0}}; }
inline ComplexMatrix pauli_y() { return {{0, -I}, {I, 0}}; }
inline ComplexMatrix pauli_z() { return {{1, 0}, {0, -1}}; }
inline ComplexMatrix id2() { return ComplexMatrix::identity(2); }

inline ComplexMatrix random_matrix(std::size_t n, mubkit::Rng& rng) {
  ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, mubkit::Rng& rng) {
  const ComplexMatrix a = random_matrix(n, rng);
  return 0.5 * (a + mubkit::adjoint(a));
}

/// The structures used for "all prime-power N" sweeps.
inline std::vector<mubkit::FiniteStructure> field_structures() {
  using mubkit::FiniteStructure;
  return {FiniteStructure::ring_mod_n(2),    FiniteStructure::ring_mod_n(3),    FiniteStructure::galois_field(2, 2),
          FiniteStructure::ring_mod_n(5),    FiniteStructure::ring_mod_n(7),    FiniteStructure::galois_field(2, 3),
          FiniteStructure::galois_field(3, 2)};
}

/// Every state of `a` equals some state of `b` up to a global phase.
inline bool same_states_up_to_phase(const mubkit::Basis& a, const mubkit::Basis& b, double tol = 1e-10) {
  for (const ComplexVector& u : a.states) {
    bool found = false;
    for (const ComplexVector& v : b.states) found = found || mubkit::phase_insensitive_distance(u, v) < tol;
    if (!found) return false;
  }
  return a.states.size() == b.states.size();
}

}  // namespace testing_helpers
