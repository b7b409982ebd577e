#include "mubkit/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "mubkit/error.hpp"

namespace mubkit {

namespace {

std::size_t idx(Label x) { return static_cast<std::size_t>(x); }

void check_square(const FiniteStructure& s, const ComplexMatrix& m) {
  const auto n = idx(s.size());
  if (m.rows() != n || m.cols() != n) {
    throw Error(ErrorKind::shape_error, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  }
}

double hermitian_residual(const ComplexMatrix& m) { return max_abs_diff(m, adjoint(m)); }

double min_eigenvalue(const ComplexMatrix& m) {
  const ComplexMatrix h = 0.5 * (m + adjoint(m));
  return eig_hermitian(h, INFINITY).values.front();
}

std::vector<double> born_row(const DensityMatrix& rho, const Basis& basis) {
  if (basis.dim != rho.dim()) throw Error(ErrorKind::shape_error, "basis and density matrix dimensions differ");
  std::vector<double> row;
  for (const ComplexVector& e : basis.states) row.push_back(std::real(inner(e, apply(rho.matrix(), e))));
  return row;
}

std::vector<double> sample_row(const std::vector<double>& p, int shots, Rng& rng) {
  std::vector<double> cumulative(p.size());
  double total = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    total += std::max(0.0, p[k]);
    cumulative[k] = total;
  }
  std::vector<long> counts(p.size(), 0);
  for (int shot = 0; shot < shots; ++shot) {
    const double u = rng.uniform() * total;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    ++counts[std::min(static_cast<std::size_t>(it - cumulative.begin()), p.size() - 1)];
  }
  std::vector<double> freq;
  for (long c : counts) freq.push_back(static_cast<double>(c) / shots);
  return freq;
}

MeasurementRow make_row(const DensityMatrix& rho, const Basis& basis, std::optional<int> shots, Rng* rng) {
  MeasurementRow row{basis.construction_index, born_row(rho, basis)};
  if (shots) {
    if (*shots < 1) throw Error(ErrorKind::domain_error, "shot count must be positive");
    if (rng == nullptr) throw Error(ErrorKind::domain_error, "sampling needs a random generator");
    row.probabilities = sample_row(row.probabilities, *shots, *rng);
  }
  return row;
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m, double tol) : matrix_(std::move(m)) {
  if (!matrix_.is_square() || matrix_.rows() == 0) throw Error(ErrorKind::shape_error, "density matrix must be square");
  if (hermitian_residual(matrix_) > tol) throw Error(ErrorKind::domain_error, "density matrix is not Hermitian");
  if (std::abs(trace(matrix_) - 1.0) > tol) throw Error(ErrorKind::domain_error, "density matrix trace is not 1");
  if (min_eigenvalue(matrix_) < -tol) throw Error(ErrorKind::domain_error, "density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::maximally_mixed(int n) {
  if (n < 1) throw Error(ErrorKind::invalid_dimension, "dimension must be positive");
  return DensityMatrix((1.0 / n) * ComplexMatrix::identity(idx(n)));
}

DensityMatrix DensityMatrix::pure(const ComplexVector& v) {
  ComplexVector u = v;
  u *= 1.0 / v.norm();
  return DensityMatrix(ComplexMatrix::outer(u, u));
}

DensityMatrix random_density_matrix(int n, Rng& rng) {
  if (n < 1) throw Error(ErrorKind::invalid_dimension, "dimension must be positive");
  ComplexMatrix g(idx(n), idx(n));
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) g(r, c) = {rng.normal(), rng.normal()};
  ComplexMatrix rho = matmul(g, adjoint(g));
  rho *= 1.0 / std::real(trace(rho));
  // Symmetrize away rounding so validation sees an exactly Hermitian matrix.
  rho = 0.5 * (rho + adjoint(rho));
  return DensityMatrix(std::move(rho));
}

CoefficientTable expand(const FiniteStructure& s, const ComplexMatrix& l) {
  check_square(s, l);
  CoefficientTable c(idx(s.size()), std::vector<Complex>(idx(s.size())));
  for (Label k = 0; k < s.size(); ++k)
    for (Label sh = 0; sh < s.size(); ++sh) c[idx(k)][idx(sh)] = hs_inner(v_matrix(s, {k, sh}), l);
  return c;
}

ComplexMatrix reconstruct_from_coefficients(const FiniteStructure& s, const CoefficientTable& c) {
  if (c.size() != idx(s.size())) throw Error(ErrorKind::shape_error, "coefficient table has the wrong size");
  ComplexMatrix out(idx(s.size()), idx(s.size()));
  for (Label k = 0; k < s.size(); ++k) {
    if (c[idx(k)].size() != idx(s.size())) throw Error(ErrorKind::shape_error, "coefficient table has the wrong size");
    for (Label sh = 0; sh < s.size(); ++sh) out += c[idx(k)][idx(sh)] * v_matrix(s, {k, sh});
  }
  out *= 1.0 / s.size();
  return out;
}

MeasurementTable measure(const DensityMatrix& rho, std::span<const Basis> bases, std::optional<int> shots, Rng* rng) {
  MeasurementTable table;
  for (const Basis& b : bases) table.rows.push_back(make_row(rho, b, shots, rng));
  return table;
}

MeasurementTable measure(const DensityMatrix& rho, std::span<const MeasurementFrame> frames, std::optional<int> shots,
                         Rng* rng) {
  MeasurementTable table;
  for (const MeasurementFrame& f : frames) table.rows.push_back(make_row(rho, f.basis, shots, rng));
  return table;
}

Reconstruction reconstruct(const FiniteStructure& s, const MeasurementTable& table,
                           std::span<const MeasurementFrame> frames, const ReconstructOptions& options) {
  const int n = s.size();
  std::map<int, const MeasurementRow*> rows;
  for (const MeasurementRow& r : table.rows) {
    if (static_cast<int>(r.probabilities.size()) != n) {
      throw Error(ErrorKind::shape_error, "row for basis " + std::to_string(r.basis_index) + " has the wrong length");
    }
    rows[r.basis_index] = &r;
  }

  std::map<OpLabel, std::vector<Complex>> estimates;
  for (const MeasurementFrame& frame : frames) {
    const auto it = rows.find(frame.basis.construction_index);
    if (it == rows.end()) {
      throw Error(ErrorKind::incomplete_data, "no measurement row for basis " + std::to_string(frame.basis.construction_index));
    }
    const std::vector<double>& p = it->second->probabilities;
    for (const PhasedOperator& u : frame.ops) {
      Complex coef_u{};
      for (Label k = 0; k < n; ++k) coef_u += std::conj(s.chi(s.mul(k, u.cycle))) * p[idx(k)];
      estimates[u.v_label].push_back(u.phase.value() * coef_u);
    }
  }
  if (static_cast<int>(estimates.size()) != n * n) {
    throw Error(ErrorKind::incomplete_data, "frames do not cover every operator label");
  }

  Reconstruction out;
  CoefficientTable c(idx(n), std::vector<Complex>(idx(n)));
  for (const auto& [label, values] : estimates) {
    Complex mean{};
    for (const Complex& v : values) mean += v;
    mean /= static_cast<double>(values.size());
    for (const Complex& v : values) out.duplicate_spread = std::max(out.duplicate_spread, std::abs(v - mean));
    c[idx(label.clock)][idx(label.shift)] = mean;
  }
  if (options.check_consistency && out.duplicate_spread > options.tol) {
    throw Error(ErrorKind::inconsistent_data, "duplicate coefficients disagree by " + std::to_string(out.duplicate_spread));
  }

  out.matrix = reconstruct_from_coefficients(s, c);
  out.hermiticity_residual = hermitian_residual(out.matrix);
  out.trace_residual = std::abs(trace(out.matrix) - 1.0);
  out.min_eigenvalue = min_eigenvalue(out.matrix);
  out.psd = out.min_eigenvalue >= -options.tol;
  return out;
}

Reconstruction reconstruct(const FiniteStructure& s, const MeasurementTable& table, const ReconstructOptions& options) {
  const std::vector<MeasurementFrame> frames = measurement_frames(s);
  return reconstruct(s, table, frames, options);
}

DegreesOfFreedom degrees_of_freedom_report(const FiniteStructure& s) {
  const int n = s.size();
  DegreesOfFreedom d;
  d.parameters = n * n - 1;
  d.bases = enumerate_subgroups(s).count();
  d.measured = (n - 1) * d.bases;
  d.excess = d.measured - d.parameters;
  return d;
}

}  // namespace mubkit
