#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace mubkit {

using Complex = std::complex<double>;

/// Default absolute tolerance used by checks throughout the library.
inline constexpr double kDefaultTol = 1e-10;

class ComplexVector {
 public:
  ComplexVector() = default;
  explicit ComplexVector(std::size_t dim) : data_(dim) {}
  ComplexVector(std::initializer_list<Complex> values) : data_(values) {}
  explicit ComplexVector(std::vector<Complex> values) : data_(std::move(values)) {}

  static ComplexVector unit(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return data_.size(); }
  Complex& operator[](std::size_t i) { return data_[i]; }
  const Complex& operator[](std::size_t i) const { return data_[i]; }
  std::span<const Complex> entries() const noexcept { return data_; }
  std::span<Complex> entries() noexcept { return data_; }

  double norm() const;
  ComplexVector conj() const;
  ComplexVector& operator*=(Complex c);
  ComplexVector& operator+=(const ComplexVector& o);
  ComplexVector operator-(const ComplexVector& o) const;
  friend ComplexVector operator*(Complex c, ComplexVector v) { return v *= c; }

  bool operator==(const ComplexVector&) const = default;

 private:
  std::vector<Complex> data_;
};

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> d);
  /// Matrix whose columns are the given vectors.
  static ComplexMatrix from_columns(std::span<const ComplexVector> columns);
  /// |u><v|
  static ComplexMatrix outer(const ComplexVector& u, const ComplexVector& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexVector column(std::size_t c) const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex c);
  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(Complex c, ComplexMatrix a) { return a *= c; }

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);
/// Kronecker product; index (a, b) maps to a·dim_B + b.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector tensor(const ComplexVector& a, const ComplexVector& b);
ComplexVector apply(const ComplexMatrix& a, const ComplexVector& v);
/// <u|v>, conjugate-linear in u.
Complex inner(const ComplexVector& u, const ComplexVector& v);
/// Tr(A† B)
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs(const ComplexMatrix& a);
double max_abs(const ComplexVector& v);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_unitary(const ComplexMatrix& a, double tol = kDefaultTol);
bool is_hermitian(const ComplexMatrix& a, double tol = kDefaultTol);

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // orthonormal columns, vectors.column(k) pairs with values[k]
};

/// Eigendecomposition of a Hermitian matrix. Throws domain-error when the
/// input is not Hermitian within `tol`.
HermitianEigen eig_hermitian(const ComplexMatrix& h, double tol = kDefaultTol);

/// c with a ≈ c·b, from the ratio at b's largest entry; returns the residual
/// max|a − c·b| alongside.
struct Proportionality {
  Complex factor;
  double residual;
};
Proportionality proportionality(const ComplexMatrix& a, const ComplexMatrix& b);

/// 1 − |<u|v>| for unit vectors: zero iff equal up to a global phase.
double phase_insensitive_distance(const ComplexVector& u, const ComplexVector& v);

}  // namespace mubkit
