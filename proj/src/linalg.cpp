#include "mubkit/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "mubkit/error.hpp"

namespace mubkit {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::shape_error, what);
}

std::string dims(const ComplexMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

ComplexVector ComplexVector::unit(std::size_t dim, std::size_t index) {
  ComplexVector v(dim);
  v[index] = 1.0;
  return v;
}

double ComplexVector::norm() const {
  double s = 0.0;
  for (const Complex& c : data_) s += std::norm(c);
  return std::sqrt(s);
}

ComplexVector ComplexVector::conj() const {
  ComplexVector r(*this);
  for (Complex& c : r.data_) c = std::conj(c);
  return r;
}

ComplexVector& ComplexVector::operator*=(Complex c) {
  for (Complex& x : data_) x *= c;
  return *this;
}

ComplexVector& ComplexVector::operator+=(const ComplexVector& o) {
  require(o.dim() == dim(), "vector dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ComplexVector ComplexVector::operator-(const ComplexVector& o) const {
  require(o.dim() == dim(), "vector dimension mismatch");
  ComplexVector r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    require(row.size() == cols_, "ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_columns(std::span<const ComplexVector> columns) {
  if (columns.empty()) return {};
  const std::size_t n = columns.front().dim();
  ComplexMatrix m(n, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    require(columns[c].dim() == n, "column dimension mismatch");
    for (std::size_t r = 0; r < n; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

ComplexMatrix ComplexMatrix::outer(const ComplexVector& u, const ComplexVector& v) {
  ComplexMatrix m(u.dim(), v.dim());
  for (std::size_t r = 0; r < u.dim(); ++r)
    for (std::size_t c = 0; c < v.dim(); ++c) m(r, c) = u[r] * std::conj(v[c]);
  return m;
}

ComplexVector ComplexMatrix::column(std::size_t c) const {
  ComplexVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "cannot add " + dims(*this) + " and " + dims(o));
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "cannot subtract " + dims(o) + " from " + dims(*this));
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex c) {
  for (Complex& x : data_) x *= c;
  return *this;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.cols() == b.rows(), "cannot multiply " + dims(a) + " by " + dims(b));
  ComplexMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
  return r;
}

Complex trace(const ComplexMatrix& a) {
  require(a.is_square(), "trace of non-square " + dims(a));
  Complex t{};
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex x = a(ar, ac);
      if (x == Complex{}) continue;
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc) r(ar * b.rows() + br, ac * b.cols() + bc) = x * b(br, bc);
    }
  return r;
}

ComplexVector tensor(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector r(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) r[i * b.dim() + j] = a[i] * b[j];
  return r;
}

ComplexVector apply(const ComplexMatrix& a, const ComplexVector& v) {
  require(a.cols() == v.dim(), "cannot apply " + dims(a) + " to vector of dim " + std::to_string(v.dim()));
  ComplexVector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex s{};
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

Complex inner(const ComplexVector& u, const ComplexVector& v) {
  require(u.dim() == v.dim(), "inner product of vectors with dims " + std::to_string(u.dim()) + " and " +
                                  std::to_string(v.dim()));
  Complex s{};
  for (std::size_t i = 0; i < u.dim(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "Hilbert-Schmidt product of " + dims(a) + " and " + dims(b));
  Complex s{};
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) s += std::conj(ea[i]) * eb[i];
  return s;
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const Complex& x : a.entries()) m = std::max(m, std::abs(x));
  return m;
}

double max_abs(const ComplexVector& v) {
  double m = 0.0;
  for (const Complex& x : v.entries()) m = std::max(m, std::abs(x));
  return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return max_abs(a - b); }

bool is_unitary(const ComplexMatrix& a, double tol) {
  if (!a.is_square()) return false;
  return max_abs_diff(matmul(adjoint(a), a), ComplexMatrix::identity(a.rows())) <= tol;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (!a.is_square()) return false;
  return max_abs_diff(a, adjoint(a)) <= tol;
}

HermitianEigen eig_hermitian(const ComplexMatrix& h, double tol) {
  if (!h.is_square()) throw Error(ErrorKind::shape_error, "eigendecomposition of non-square " + dims(h));
  if (!is_hermitian(h, tol * std::max(1.0, max_abs(h)))) {
    throw Error(ErrorKind::domain_error, "matrix is not Hermitian");
  }
  const auto n = static_cast<Eigen::Index>(h.rows());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = h(static_cast<std::size_t>(i), static_cast<std::size_t>(j));

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) throw Error(ErrorKind::numerical_degeneracy, "eigensolver did not converge");

  HermitianEigen out;
  out.vectors = ComplexMatrix(h.rows(), h.rows());
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values.push_back(solver.eigenvalues()(k));
    for (Eigen::Index i = 0; i < n; ++i) {
      out.vectors(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) = solver.eigenvectors()(i, k);
    }
  }
  return out;
}

Proportionality proportionality(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "proportionality of " + dims(a) + " and " + dims(b));
  const auto eb = b.entries();
  const auto pivot = static_cast<std::size_t>(
      std::max_element(eb.begin(), eb.end(), [](Complex x, Complex y) { return std::abs(x) < std::abs(y); }) -
      eb.begin());
  if (std::abs(eb[pivot]) == 0.0) return {Complex{}, max_abs(a)};
  const Complex factor = a.entries()[pivot] / eb[pivot];
  return {factor, max_abs_diff(a, factor * b)};
}

double phase_insensitive_distance(const ComplexVector& u, const ComplexVector& v) {
  return 1.0 - std::abs(inner(u, v));
}

}  // namespace mubkit
