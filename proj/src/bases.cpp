#include "mubkit/bases.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mubkit/error.hpp"

namespace mubkit {

double Basis::orthonormality_residual() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = 0; j < states.size(); ++j) {
      const Complex expected = i == j ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(inner(states[i], states[j]) - expected));
    }
  return worst;
}

void normalize_phase(ComplexVector& v, double tol) {
  for (const Complex& x : v.entries()) {
    if (std::abs(x) > tol) {
      v *= std::abs(x) / x;
      return;
    }
  }
}

Basis computational_basis(int n) {
  if (n < 2) throw Error(ErrorKind::invalid_dimension, "dimension must be >= 2");
  Basis b{n, 0, {}};
  for (int i = 0; i < n; ++i) b.states.push_back(ComplexVector::unit(static_cast<std::size_t>(n), static_cast<std::size_t>(i)));
  return b;
}

Basis dual_basis(const FiniteStructure& s) {
  const int n = s.size();
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  Basis b{n, 1, {}};
  for (Label j = 0; j < n; ++j) {
    ComplexVector v(static_cast<std::size_t>(n));
    for (Label k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = scale * s.chi(s.mul(k, j));
    normalize_phase(v);
    b.states.push_back(std::move(v));
  }
  return b;
}

namespace {

void check_family_index(const FiniteStructure& s, int k, int lo) {
  if (k < lo || k > s.size()) {
    throw Error(ErrorKind::index_error,
                "basis index " + std::to_string(k) + " outside " + std::to_string(lo) + ".." + std::to_string(s.size()));
  }
}

}  // namespace

Basis phased_computational(const FiniteStructure& s, int k) {
  check_family_index(s, k, 1);
  const int n = s.size();
  Basis b{n, 0, {}};
  for (Label q = 0; q < n; ++q) {
    ComplexVector v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(q)] = s.quadratic_phase(k - 1, q).value();
    b.states.push_back(std::move(v));
  }
  return b;
}

Basis mub_basis(const FiniteStructure& s, int k) {
  check_family_index(s, k, 0);
  if (k == 0) return computational_basis(s.size());
  const int n = s.size();
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  Basis b{n, k, {}};
  for (Label i = 0; i < n; ++i) {
    ComplexVector v(static_cast<std::size_t>(n));
    for (Label q = 0; q < n; ++q) {
      const Phase phase = s.character(s.neg(s.mul(q, i))) * s.quadratic_phase(k - 1, q);
      v[static_cast<std::size_t>(q)] = scale * phase.value();
    }
    normalize_phase(v);
    b.states.push_back(std::move(v));
  }
  return b;
}

std::vector<Basis> mub_family(const FiniteStructure& s) {
  std::vector<Basis> family;
  for (int k = 0; k <= s.size(); ++k) family.push_back(mub_basis(s, k));
  return family;
}

UnbiasednessReport unbiasedness(std::span<const Basis> bases, double tol) {
  UnbiasednessReport report;
  if (bases.empty()) return report;
  const int n = bases.front().dim;
  for (const Basis& b : bases) {
    if (b.dim != n || static_cast<int>(b.states.size()) != n) {
      throw Error(ErrorKind::shape_error, "bases of mixed dimension");
    }
  }
  const double target = 1.0 / n;
  for (std::size_t a = 0; a < bases.size(); ++a) {
    for (std::size_t b = a + 1; b < bases.size(); ++b) {
      double worst = 0.0;
      for (const ComplexVector& u : bases[a].states)
        for (const ComplexVector& v : bases[b].states) worst = std::max(worst, std::abs(std::norm(inner(u, v)) - target));
      report.pairs.push_back({static_cast<int>(a), static_cast<int>(b), worst});
      report.overall_max = std::max(report.overall_max, worst);
    }
  }
  report.is_complete_mub = report.overall_max < tol && static_cast<int>(bases.size()) == n + 1;
  return report;
}

Complex overlap(const ComplexVector& bra, const ComplexVector& ket) { return inner(bra, ket); }

Complex fourier_overlap_closed_form(const FiniteStructure& s, int l, Label j, int k, Label i) {
  if (s.kind() != Construction::mod_n) throw Error(ErrorKind::domain_error, "closed form applies to mod-n only");
  check_family_index(s, k, 1);
  check_family_index(s, l, 1);
  const std::int64_t n = s.size();
  Complex sum{};
  for (std::int64_t p = 0; p < n; ++p) {
    const Phase linear(p * (j - i), n);
    const Phase quadratic(static_cast<std::int64_t>(k - l) * p * (p + n), 2 * n);
    sum += (linear * quadratic).value();
  }
  return sum / static_cast<double>(n);
}

}  // namespace mubkit
