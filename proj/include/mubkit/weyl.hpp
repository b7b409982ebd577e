#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "mubkit/bases.hpp"
#include "mubkit/galois.hpp"
#include "mubkit/linalg.hpp"
#include "mubkit/random.hpp"

namespace mubkit {

/// Labels (j, i) of V^j_i = clock^j · shift^i.
struct OpLabel {
  Label clock = 0;
  Label shift = 0;
  auto operator<=>(const OpLabel&) const = default;
};

struct ErrorOperator {
  OpLabel label;
  ComplexMatrix matrix;
};

/// V^j_i = Σ_k γ^{(k⊕i)⊙j} |k⊕i⟩⟨k|, built from exact phases.
ComplexMatrix v_matrix(const FiniteStructure& s, OpLabel label);

ErrorOperator v_op(const FiniteStructure& s, Label clock_power, Label shift_power);
/// P^i|j⟩ = |j⊕i⟩
ErrorOperator shift(const FiniteStructure& s, Label i);
/// P̃^j|k⟩ = γ^{k⊙j}|k⟩
ErrorOperator clock(const FiniteStructure& s, Label j);

struct Composition {
  Phase phase;
  OpLabel label;
};

/// V^{j_a}_{i_a} · V^{j_b}_{i_b} = γ^{⊖(i_a⊙j_b)} · V^{j_a⊕j_b}_{i_a⊕i_b}, exactly.
Composition compose(const FiniteStructure& s, OpLabel a, OpLabel b);
/// Same law on materialized operators; throws domain-error when their
/// dimensions differ from each other or from s.
Composition compose(const FiniteStructure& s, const ErrorOperator& a, const ErrorOperator& b);

/// max|V_a·V_b − phase·V_{label}| for the composition above.
double composition_residual(const FiniteStructure& s, OpLabel a, OpLabel b);
/// max|P^i·P̃^j − γ^{⊖(i⊙j)}·P̃^j·P^i|
double weyl_residual(const FiniteStructure& s, Label i, Label j);

/// V_a and V_b commute: γ^{(i_a⊙j_b) ⊖ (i_b⊙j_a)} = 1.
bool labels_commute(const FiniteStructure& s, OpLabel a, OpLabel b);

/// V scaled by an exact phase so that, for a fixed basis index, the cycle
/// labels compose without a cocycle: U_{l1}·U_{l2} = U_{l1⊕l2}.
struct PhasedOperator {
  int basis_index = 0;
  Label cycle = 0;
  OpLabel v_label;
  Phase phase;  // matrix = phase · V^{v_label}
  ComplexMatrix matrix;
};

/// U for family member `basis_index` (0..N) and cycle label l:
///   basis 0:  V^l_0
///   basis i:  conj(φ_{i−1}(l)) · V^{(i−1)⊙l}_l
/// It equals Σ_k γ^{k⊙l}|e^i_k⟩⟨e^i_k| over mub_basis(s, i).
PhasedOperator u_op(const FiniteStructure& s, int basis_index, Label l);

/// A commuting family of N operators: members[c] = c⊙generator.
struct Subgroup {
  OpLabel generator;
  std::vector<OpLabel> members;
  /// 0..N when it is the family member's subgroup, N+1.. for excess ones.
  int basis_index = 0;
};

struct SubgroupDecomposition {
  std::vector<Subgroup> subgroups;
  /// One per subgroup, same order; empty unless requested.
  std::vector<Basis> eigenbases;

  int count() const { return static_cast<int>(subgroups.size()); }
};

/// All distinct sets {c⊙g : c} of size N. The first N+1 are the family's
/// subgroups in basis order; excess subgroups (composite N) follow in
/// lexicographic order of their sorted labels.
SubgroupDecomposition enumerate_subgroups(const FiniteStructure& s, bool with_eigenbases = false,
                                          std::uint64_t seed = kDefaultSeed);

/// Union of all members equals the full N² label set.
bool covers_all_labels(const FiniteStructure& s, const SubgroupDecomposition& d);
/// Largest commutator entry between any two members' matrices.
double max_commutator(const FiniteStructure& s, const Subgroup& g);

/// Orthonormal basis diagonalizing every operator in `ops` (which must
/// commute). Diagonalizes a seeded random Hermitian combination and retries
/// on spectral degeneracy; throws numerical-degeneracy when retries run out.
Basis joint_eigenbasis(std::span<const ComplexMatrix> ops, std::uint64_t seed = kDefaultSeed,
                       double tol = kDefaultTol);

/// Largest off-diagonal entry of op expressed in `basis`.
double off_diagonal(const ComplexMatrix& op, const Basis& basis);

/// W^k = Σ_i |e^k_i⟩⟨e^0_i| for 1 <= k <= N.
ComplexMatrix basis_change(const FiniteStructure& s, int k);

struct Intertwining {
  OpLabel image;
  Complex phase;
  double residual = 0.0;
  bool matches_prediction = false;  // image == (n, (k−1)⊙n ⊖ m)
};

/// Conjugates V^m_n (clock m, shift n) by W^k and identifies the result as a
/// phased V. Throws no-match when it is proportional to no V.
Intertwining intertwine_check(const FiniteStructure& s, int k, OpLabel v, double tol = kDefaultTol);

OpLabel intertwine_prediction(const FiniteStructure& s, int k, OpLabel v);

/// A basis together with the phased operators diagonal in it:
/// ops[c].matrix = Σ_k γ^{k⊙c}|e_k⟩⟨e_k| for every cycle label c.
struct MeasurementFrame {
  Basis basis;
  std::vector<PhasedOperator> ops;
};

/// One frame per subgroup: the N+1 family bases with analytic phases, then
/// excess subgroups with phases fixed by cycle closure ((φV^g)^N = 1) and
/// joint eigenbases labelled by the eigenvalue of the cycle generator.
std::vector<MeasurementFrame> measurement_frames(const FiniteStructure& s, std::uint64_t seed = kDefaultSeed);

}  // namespace mubkit
