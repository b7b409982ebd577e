#include "mubkit/bell.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mubkit/error.hpp"
#include "mubkit/weyl.hpp"

namespace mubkit {

namespace {

void check_label(const FiniteStructure& s, Label x) {
  if (x < 0 || x >= s.size()) throw Error(ErrorKind::index_error, "Bell label " + std::to_string(x) + " out of range");
}

std::size_t idx(Label x) { return static_cast<std::size_t>(x); }

}  // namespace

BellState bell_state(const FiniteStructure& s, const Basis& basis, Label m, Label n) {
  check_label(s, m);
  check_label(s, n);
  const int dim = s.size();
  if (basis.dim != dim || static_cast<int>(basis.states.size()) != dim) {
    throw Error(ErrorKind::shape_error, "basis dimension does not match the structure");
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  ComplexVector v(idx(dim * dim));
  for (Label k = 0; k < dim; ++k) {
    ComplexVector term = tensor(basis.states[idx(k)].conj(), basis.states[idx(s.add(k, m))]);
    term *= scale * s.chi(s.mul(k, n));
    v += term;
  }
  return {m, n, basis.construction_index, std::move(v)};
}

BellState bell_state(const FiniteStructure& s, Label m, Label n) {
  return bell_state(s, computational_basis(s.size()), m, n);
}

double bell_duality_residual(const FiniteStructure& s, Label m, Label n) {
  const BellState dual = bell_state(s, dual_basis(s), m, n);
  const BellState direct = bell_state(s, s.neg(n), m);
  return phase_insensitive_distance(dual.vector, direct.vector);
}

bool bell_duality_check(const FiniteStructure& s, Label m, Label n, double tol) {
  return bell_duality_residual(s, m, n) < tol;
}

double bell_orthonormality_residual(const FiniteStructure& s, const Basis& basis) {
  std::vector<ComplexVector> states;
  for (Label m = 0; m < s.size(); ++m)
    for (Label n = 0; n < s.size(); ++n) states.push_back(bell_state(s, basis, m, n).vector);
  double worst = 0.0;
  for (std::size_t a = 0; a < states.size(); ++a)
    for (std::size_t b = a; b < states.size(); ++b) {
      const Complex expected = a == b ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(inner(states[a], states[b]) - expected));
    }
  return worst;
}

InvariancePhase permutation_invariance_check(const FiniteStructure& s, Label i, Label m, Label n, double tol) {
  return permutation_invariance_check(s, computational_basis(s.size()), i, m, n, tol);
}

InvariancePhase permutation_invariance_check(const FiniteStructure& s, const Basis& basis, Label i, Label m, Label n,
                                             double tol) {
  check_label(s, i);
  const BellState bell = bell_state(s, basis, m, n);
  const ComplexMatrix w = basis.matrix();
  const ComplexMatrix p = matmul(w, matmul(shift(s, i).matrix, adjoint(w)));
  ComplexMatrix p_conj(p.rows(), p.cols());
  for (std::size_t r = 0; r < p.rows(); ++r)
    for (std::size_t c = 0; c < p.cols(); ++c) p_conj(r, c) = std::conj(p(r, c));

  const ComplexVector moved = apply(tensor(p_conj, p), bell.vector);
  InvariancePhase out;
  out.phase = inner(bell.vector, moved);
  out.expected = s.character(s.mul(s.neg(i), n));
  out.residual = max_abs(moved - out.phase * bell.vector);
  if (out.residual > tol || std::abs(out.phase - out.expected.value()) > tol) {
    throw Error(ErrorKind::invariance_violation, "Bell state (" + std::to_string(m) + "," + std::to_string(n) +
                                                     ") is not invariant under P^" + std::to_string(i));
  }
  return out;
}

ComplexVector error_channel(const FiniteStructure& s, Label m, Label n, Label k) {
  check_label(s, k);
  const BellState bell = bell_state(s, m, n);
  const int dim = s.size();
  ComplexVector bob(idx(dim));
  for (Label b = 0; b < dim; ++b) bob[idx(b)] = bell.vector[idx(k * dim + b)];
  const double norm = bob.norm();
  if (norm < 1e-12) throw Error(ErrorKind::degenerate_projection, "projection onto outcome " + std::to_string(k) + " has zero probability");
  bob *= 1.0 / norm;
  return bob;
}

Complex repairing_overlap(const FiniteStructure& s, Label m, Label n, Label i, Label j) {
  check_label(s, i);
  check_label(s, j);
  const std::size_t dim = idx(s.size());
  const ComplexVector ab = bell_state(s, m, n).vector;
  const ComplexVector ee = bell_state(s, m, s.neg(n)).vector;
  const ComplexVector ae = bell_state(s, i, s.neg(j)).vector;
  const ComplexVector be = bell_state(s, i, j).vector;
  Complex sum{};
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      for (std::size_t e = 0; e < dim; ++e)
        for (std::size_t f = 0; f < dim; ++f) {
          const Complex first = ab[a * dim + b] * ee[e * dim + f];
          const Complex second = ae[a * dim + e] * be[b * dim + f];
          sum += std::conj(first) * second;
        }
  return sum;
}

Complex repairing_overlap_formula(const FiniteStructure& s, Label m, Label n, Label i, Label j) {
  check_label(s, m);
  check_label(s, n);
  check_label(s, i);
  check_label(s, j);
  return (s.character(s.mul(i, n)) * s.character(s.mul(m, j))).value() / static_cast<double>(s.size());
}

}  // namespace mubkit
