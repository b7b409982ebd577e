#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mubkit/bases.hpp"
#include "mubkit/galois.hpp"
#include "mubkit/linalg.hpp"
#include "mubkit/random.hpp"
#include "mubkit/weyl.hpp"

namespace mubkit {

/// Hermitian, trace-one, positive semidefinite N×N matrix.
class DensityMatrix {
 public:
  /// Throws shape-error for a non-square input and domain-error when the
  /// matrix is not Hermitian, trace one and PSD within tol.
  explicit DensityMatrix(ComplexMatrix m, double tol = kDefaultTol);

  static DensityMatrix maximally_mixed(int n);
  static DensityMatrix pure(const ComplexVector& v);

  int dim() const noexcept { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

/// GG†/Tr(GG†) with G a complex Gaussian matrix.
DensityMatrix random_density_matrix(int n, Rng& rng);

/// c[k][l] = Tr((V^k_l)† L), k the clock label and l the shift label.
using CoefficientTable = std::vector<std::vector<Complex>>;

/// Throws shape-error when L is not N×N.
CoefficientTable expand(const FiniteStructure& s, const ComplexMatrix& l);
/// (1/N) Σ_{k,l} c[k][l]·V^k_l
ComplexMatrix reconstruct_from_coefficients(const FiniteStructure& s, const CoefficientTable& c);

struct MeasurementRow {
  int basis_index = 0;
  std::vector<double> probabilities;  // p[j] = ⟨e_j|ρ|e_j⟩
};

struct MeasurementTable {
  std::vector<MeasurementRow> rows;
};

/// Born-rule probabilities in each basis. With `shots`, each row is replaced
/// by the empirical frequencies of that many draws.
MeasurementTable measure(const DensityMatrix& rho, std::span<const Basis> bases,
                         std::optional<int> shots = std::nullopt, Rng* rng = nullptr);
MeasurementTable measure(const DensityMatrix& rho, std::span<const MeasurementFrame> frames,
                         std::optional<int> shots = std::nullopt, Rng* rng = nullptr);

struct ReconstructOptions {
  double tol = kDefaultTol;
  /// Reject duplicate V coefficients that disagree beyond tol. Turn off for
  /// sampled data, where duplicates differ by statistical noise.
  bool check_consistency = true;
};

struct Reconstruction {
  ComplexMatrix matrix;
  /// Largest disagreement between two estimates of one V coefficient.
  double duplicate_spread = 0.0;
  double hermiticity_residual = 0.0;
  double trace_residual = 0.0;
  double min_eigenvalue = 0.0;
  bool psd = false;
};

/// Linear inversion through the phased operators of each frame:
///   Tr(U_c† ρ) = Σ_k conj(γ^{k⊙c}) p_k,   Tr(V† ρ) = phase·Tr(U_c† ρ).
/// Rows are matched to frames by basis index. Throws incomplete-data when a
/// frame has no row and inconsistent-data when duplicates disagree.
Reconstruction reconstruct(const FiniteStructure& s, const MeasurementTable& table,
                           std::span<const MeasurementFrame> frames, const ReconstructOptions& options = {});
/// Uses measurement_frames(s).
Reconstruction reconstruct(const FiniteStructure& s, const MeasurementTable& table,
                           const ReconstructOptions& options = {});

struct DegreesOfFreedom {
  int parameters = 0;  // N² − 1
  int bases = 0;       // N + 1 + i
  int measured = 0;    // (N − 1)(N + 1 + i)
  int excess = 0;      // measured − parameters
};

DegreesOfFreedom degrees_of_freedom_report(const FiniteStructure& s);

}  // namespace mubkit
