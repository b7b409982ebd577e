#pragma once

#include <span>
#include <vector>

#include "mubkit/galois.hpp"
#include "mubkit/linalg.hpp"

namespace mubkit {

/// An ordered orthonormal set of N states. `construction_index` is 0 for the
/// computational basis, 1 for the dual basis, 2..N for the remaining family
/// members, and N+1.. for joint eigenbases of excess subgroups.
struct Basis {
  int dim = 0;
  int construction_index = 0;
  std::vector<ComplexVector> states;

  /// Columns are the states; this is W = Σ_i |e_i><e^0_i|.
  ComplexMatrix matrix() const { return ComplexMatrix::from_columns(states); }
  /// max |<e_i|e_j> − δ_ij|
  double orthonormality_residual() const;
  bool is_orthonormal(double tol = kDefaultTol) const { return orthonormality_residual() <= tol; }
};

/// Rotates v so its first component with modulus above `tol` is real positive.
void normalize_phase(ComplexVector& v, double tol = 1e-8);

Basis computational_basis(int n);

/// State j has amplitude γ^{k⊙j}/√N on |k⟩.
Basis dual_basis(const FiniteStructure& s);

/// The computational basis with state q multiplied by φ_{k−1}(q), the
/// quadratic phase of FiniteStructure::quadratic_phase. Requires 1 <= k <= N.
Basis phased_computational(const FiniteStructure& s, int k);

/// Family member k (0..N). For k >= 1, state i has amplitude
/// γ^{⊖(q⊙i)}·φ_{k−1}(q)/√N on |q⟩: the dual transform of
/// phased_computational(s, k), with states labelled so that
/// Σ_i γ^{i⊙l}|e^k_i⟩⟨e^k_i| is the phased operator of cycle label l.
Basis mub_basis(const FiniteStructure& s, int k);

/// All N+1 members. Pairwise unbiased when s is a field; otherwise every
/// member is only guaranteed unbiased against the computational basis.
std::vector<Basis> mub_family(const FiniteStructure& s);

struct PairDeviation {
  int first = 0;   // index into the input list
  int second = 0;
  double deviation = 0.0;  // max_{i,j} | |<e^k_i|e^l_j>|² − 1/N |
};

struct UnbiasednessReport {
  std::vector<PairDeviation> pairs;
  double overall_max = 0.0;
  bool is_complete_mub = false;
};

/// Throws shape-error when the bases do not share a dimension.
UnbiasednessReport unbiasedness(std::span<const Basis> bases, double tol = kDefaultTol);

/// ⟨bra|ket⟩
Complex overlap(const ComplexVector& bra, const ComplexVector& ket);

/// Closed form of ⟨e^l_j|e^k_i⟩ for the mod-n family (k, l >= 1):
/// (1/N) Σ_p γ^{p(j−i)} · e^{iπ(k−l)p(p+N)/N}.
Complex fourier_overlap_closed_form(const FiniteStructure& s, int l, Label j, int k, Label i);

}  // namespace mubkit
