#include <gtest/gtest.h>

#include <cmath>

#include "helpers.hpp"
#include "mubkit/bases.hpp"
#include "mubkit/error.hpp"
#include "mubkit/weyl.hpp"

using namespace mubkit;
using namespace testing_helpers;

namespace {

template <typename F>
void expect_error(ErrorKind kind, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

double max_deviation(const Basis& a, const Basis& b) {
  const Basis pair[] = {a, b};
  return unbiasedness(pair).overall_max;
}

}  // namespace

TEST(Computational, Examples) {
  const Basis b2 = computational_basis(2);
  EXPECT_EQ(b2.states[0], (ComplexVector{1.0, 0.0}));
  EXPECT_EQ(b2.states[1], (ComplexVector{0.0, 1.0}));
  EXPECT_EQ(computational_basis(4).states[2], (ComplexVector{0.0, 0.0, 1.0, 0.0}));
  EXPECT_EQ(b2.construction_index, 0);
  EXPECT_EQ(computational_basis(5).orthonormality_residual(), 0.0);
  expect_error(ErrorKind::invalid_dimension, [] { computational_basis(1); });
}

TEST(Dual, TwoPointFourier) {
  const Basis d = dual_basis(FiniteStructure::ring_mod_n(2));
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_LT(max_abs(d.states[0] - ComplexVector{s, s}), 1e-15);
  EXPECT_LT(max_abs(d.states[1] - ComplexVector{s, -s}), 1e-15);
  EXPECT_EQ(d.construction_index, 1);
}

TEST(Dual, FourierTable) {
  const ComplexMatrix table{{1, 1, 1, 1}, {1, I, -1, -I}, {1, -1, 1, -1}, {1, -I, -1, I}};
  const ComplexMatrix w = dual_basis(FiniteStructure::ring_mod_n(4)).matrix();
  EXPECT_LT(max_abs_diff(w, 0.5 * table), 1e-12);
}

TEST(Dual, HadamardTable) {
  const ComplexMatrix table{{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
  const ComplexMatrix w = dual_basis(FiniteStructure::galois_field(2, 2)).matrix();
  EXPECT_LT(max_abs_diff(w, 0.5 * table), 1e-12);
}

TEST(Dual, ShiftEigenstates) {
  std::vector<FiniteStructure> all = field_structures();
  all.push_back(FiniteStructure::ring_mod_n(6));
  all.push_back(FiniteStructure::galois_field(2, 4));
  for (const auto& s : all) {
    const Basis d = dual_basis(s);
    const ComplexMatrix c = shift(s, 1).matrix;
    for (Label j = 0; j < s.size(); ++j) {
      ComplexVector expected = d.states[static_cast<std::size_t>(j)];
      expected *= s.chi(s.mul(s.neg(1), j));
      EXPECT_LT(max_abs(apply(c, d.states[static_cast<std::size_t>(j)]) - expected), 1e-12) << s.size();
    }
  }
}

TEST(Phased, Examples) {
  const auto f2 = FiniteStructure::ring_mod_n(2);
  EXPECT_EQ(phased_computational(f2, 1).states, computational_basis(2).states);
  EXPECT_EQ(phased_computational(f2, 2).states[1], (ComplexVector{0.0, -I}));
  const auto h4 = FiniteStructure::galois_field(2, 2);
  EXPECT_EQ(phased_computational(h4, 2).states[1], (ComplexVector{0.0, I, 0.0, 0.0}));
  expect_error(ErrorKind::index_error, [&] { phased_computational(f2, 0); });
  expect_error(ErrorKind::index_error, [&] { phased_computational(f2, 3); });
  expect_error(ErrorKind::index_error, [&] { mub_basis(f2, 3); });
  expect_error(ErrorKind::index_error, [&] { mub_basis(f2, -1); });
}

TEST(Family, QubitIsZXY) {
  const std::vector<Basis> f = mub_family(FiniteStructure::ring_mod_n(2));
  ASSERT_EQ(f.size(), 3u);
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_LT(max_abs(f[1].states[0] - ComplexVector{s, s}), 1e-15);
  EXPECT_LT(max_abs(f[1].states[1] - ComplexVector{s, -s}), 1e-15);
  EXPECT_LT(max_abs(f[2].states[0] - ComplexVector{s, -s * I}), 1e-15);
  EXPECT_LT(max_abs(f[2].states[1] - ComplexVector{s, s * I}), 1e-15);
  // Eigenbases of Z, X and Y.
  const ComplexMatrix paulis[] = {pauli_z(), pauli_x(), pauli_y()};
  for (int k = 0; k < 3; ++k)
    for (const ComplexVector& v : f[static_cast<std::size_t>(k)].states) {
      const Complex lambda = inner(v, apply(paulis[k], v));
      ComplexVector scaled = v;
      scaled *= lambda;
      EXPECT_LT(max_abs(apply(paulis[k], v) - scaled), 1e-14);
    }
}

TEST(Family, CompleteForPrimePowers) {
  std::vector<FiniteStructure> all = field_structures();
  all.push_back(FiniteStructure::galois_field(2, 4));
  all.push_back(FiniteStructure::galois_field(5, 2));
  all.push_back(FiniteStructure::galois_field(3, 3));
  all.push_back(FiniteStructure::ring_mod_n(11));
  for (const auto& s : all) {
    const std::vector<Basis> f = mub_family(s);
    const UnbiasednessReport r = unbiasedness(f);
    EXPECT_EQ(f.size(), static_cast<std::size_t>(s.size() + 1));
    EXPECT_LT(r.overall_max, 1e-10) << s.size();
    EXPECT_TRUE(r.is_complete_mub) << s.size();
    EXPECT_EQ(r.pairs.size(), f.size() * (f.size() - 1) / 2);
  }
}

TEST(Family, CompositeOnlyUnbiasedAgainstComputational) {
  for (int n : {4, 6, 8, 9, 10, 12}) {
    const std::vector<Basis> f = mub_family(FiniteStructure::ring_mod_n(n));
    const UnbiasednessReport r = unbiasedness(f);
    double worst_rest = 0.0;
    for (const PairDeviation& p : r.pairs) {
      if (p.first == 0) {
        EXPECT_LT(p.deviation, 1e-10) << n;
      } else {
        worst_rest = std::max(worst_rest, p.deviation);
      }
    }
    EXPECT_GT(worst_rest, 0.01) << n;
    EXPECT_FALSE(r.is_complete_mub);
  }
}

TEST(Family, OrthonormalAndGauged) {
  for (int n = 2; n <= 32; ++n) {
    std::vector<FiniteStructure> structures{FiniteStructure::ring_mod_n(n)};
    if (const auto pm = prime_power(n); pm && pm->second > 1) structures.push_back(FiniteStructure::galois_field(pm->first, pm->second));
    for (const auto& s : structures) {
      std::vector<Basis> f = mub_family(s);
      f.push_back(dual_basis(s));
      for (const Basis& b : f) {
        ASSERT_TRUE(b.is_orthonormal()) << n;
        for (const ComplexVector& v : b.states) {
          for (const Complex& x : v.entries()) {
            if (std::abs(x) > 1e-8) {
              ASSERT_GT(x.real(), 0.0);
              ASSERT_LT(std::abs(x.imag()), 1e-12);
              break;
            }
          }
        }
      }
    }
  }
}

TEST(Family, ModPAndGaloisPAgreeForOddPrimes) {
  for (int p : {3, 5, 7}) {
    const std::vector<Basis> fourier = mub_family(FiniteStructure::ring_mod_n(p));
    const std::vector<Basis> general = mub_family(FiniteStructure::galois_field(p, 1));
    for (const Basis& b : fourier) {
      bool matched = false;
      for (const Basis& g : general) matched = matched || same_states_up_to_phase(b, g);
      EXPECT_TRUE(matched) << p << " basis " << b.construction_index;
    }
  }
}

TEST(Unbiasedness, Errors) {
  const Basis mixed[] = {computational_basis(2), computational_basis(3)};
  expect_error(ErrorKind::shape_error, [&] { unbiasedness(mixed); });
  EXPECT_TRUE(unbiasedness(std::span<const Basis>{}).pairs.empty());
}

TEST(Unbiasedness, SelfOverlap) {
  for (int n : {2, 3, 5}) {
    const Basis b = mub_basis(FiniteStructure::ring_mod_n(n), 2);
    EXPECT_NEAR(max_deviation(b, b), 1.0 - 1.0 / n, 1e-12);
  }
}

TEST(Overlap, Examples) {
  const auto f5 = FiniteStructure::ring_mod_n(5);
  const Basis b2 = mub_basis(f5, 2), b3 = mub_basis(f5, 3);
  EXPECT_NEAR(std::abs(overlap(b2.states[1], b2.states[1]) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::norm(overlap(b3.states[0], b2.states[0])), 0.2, 1e-10);

  const auto f4 = FiniteStructure::ring_mod_n(4);
  const Basis c2 = mub_basis(f4, 2), c4 = mub_basis(f4, 4);
  bool off_pattern = false;
  for (const ComplexVector& u : c4.states)
    for (const ComplexVector& v : c2.states) {
      const double w = std::norm(overlap(u, v));
      off_pattern = off_pattern || (std::abs(w) > 1e-10 && std::abs(w - 0.25) > 1e-10);
    }
  EXPECT_TRUE(off_pattern);
}

TEST(Overlap, ClosedFormModN) {
  for (int n = 2; n <= 8; ++n) {
    const auto s = FiniteStructure::ring_mod_n(n);
    const std::vector<Basis> f = mub_family(s);
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l)
        for (Label i = 0; i < n; ++i)
          for (Label j = 0; j < n; ++j) {
            const Complex direct = overlap(f[static_cast<std::size_t>(l)].states[static_cast<std::size_t>(j)],
                                           f[static_cast<std::size_t>(k)].states[static_cast<std::size_t>(i)]);
            ASSERT_LT(std::abs(direct - fourier_overlap_closed_form(s, l, j, k, i)), 1e-12) << n;
          }
  }
  expect_error(ErrorKind::domain_error,
               [] { fourier_overlap_closed_form(FiniteStructure::galois_field(2, 2), 1, 0, 2, 0); });
}
