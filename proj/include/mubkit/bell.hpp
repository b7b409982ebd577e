#pragma once

#include "mubkit/bases.hpp"
#include "mubkit/galois.hpp"
#include "mubkit/linalg.hpp"
#include "mubkit/phase.hpp"

namespace mubkit {

/// (1/√N) Σ_k γ^{k⊙n} conj(b_k) ⊗ b_{k⊕m} on the N²-dimensional space,
/// index (a, b) ↦ a·N + b.
struct BellState {
  Label m = 0;  // shift label
  Label n = 0;  // phase label
  int basis_index = 0;
  ComplexVector vector;
};

/// Throws index-error for labels out of range and shape-error when the basis
/// dimension differs from s.
BellState bell_state(const FiniteStructure& s, const Basis& basis, Label m, Label n);
/// Over the computational basis.
BellState bell_state(const FiniteStructure& s, Label m, Label n);

/// Phase-insensitive distance between the dual-basis state (m, n) and the
/// computational state (⊖n, m).
double bell_duality_residual(const FiniteStructure& s, Label m, Label n);
bool bell_duality_check(const FiniteStructure& s, Label m, Label n, double tol = kDefaultTol);

/// Gram matrix deviation max|⟨B_a|B_b⟩ − δ_ab| over all N² states in `basis`.
double bell_orthonormality_residual(const FiniteStructure& s, const Basis& basis);

struct InvariancePhase {
  Complex phase;        // extracted eigen-phase
  Phase expected;       // γ^{(⊖i)⊙n}
  double residual = 0;  // max|(conj(P^i)⊗P^i)|B⟩ − phase·|B⟩|
};

/// Applies conj(P^i) ⊗ P^i to the Bell state (m, n) over `basis` expressed in
/// basis coordinates (P^i|b_k⟩ = |b_{k⊕i}⟩). Throws invariance-violation when
/// the state is not an eigenvector with the expected phase.
InvariancePhase permutation_invariance_check(const FiniteStructure& s, Label i, Label m, Label n,
                                             double tol = kDefaultTol);
InvariancePhase permutation_invariance_check(const FiniteStructure& s, const Basis& basis, Label i, Label m, Label n,
                                             double tol = kDefaultTol);

/// Bob's renormalized state after Alice's first factor is projected onto
/// conj(|k⟩). Equals V^n_m|k⟩ = γ^{..}|k⊕m⟩ up to phase; throws
/// degenerate-projection when the outcome has zero probability.
ComplexVector error_channel(const FiniteStructure& s, Label m, Label n, Label k);

/// ⟨B_{m,n}^{AB} ⊗ B_{m,⊖n}^{EE'} | B_{i,⊖j}^{AE} ⊗ B_{i,j}^{BE'}⟩ by brute force
/// over the N⁴ space, index (a,b,e,e') ↦ ((a·N+b)·N+e)·N+e'.
Complex repairing_overlap(const FiniteStructure& s, Label m, Label n, Label i, Label j);
/// (1/N)·γ^{i⊙n}·γ^{m⊙j}
Complex repairing_overlap_formula(const FiniteStructure& s, Label m, Label n, Label i, Label j);

}  // namespace mubkit
