// Acceptance suite: one PASS/FAIL line per criterion.

#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mubkit/bases.hpp"
#include "mubkit/bell.hpp"
#include "mubkit/cli.hpp"
#include "mubkit/error.hpp"
#include "mubkit/galois.hpp"
#include "mubkit/tomography.hpp"
#include "mubkit/weyl.hpp"

using namespace mubkit;

namespace {

using Table = std::vector<std::vector<int>>;
const Complex I{0.0, 1.0};

bool tables_equal(const FiniteStructure& s, const Table& add, const Table& mul) {
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b)
      if (s.add(a, b) != add[a][b] || s.mul(a, b) != mul[a][b]) return false;
  return true;
}

bool ac1_gf4_tables() {
  const auto s = FiniteStructure::galois_field(2, 2);
  const Table add{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const Table mul{{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  const ComplexMatrix hadamard{{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
  const ComplexMatrix fourier{{1, 1, 1, 1}, {1, I, -1, -I}, {1, -1, 1, -1}, {1, -I, -1, I}};
  return tables_equal(s, add, mul) &&
         max_abs_diff(dual_basis(s).matrix(), 0.5 * hadamard) < 1e-12 &&
         max_abs_diff(dual_basis(FiniteStructure::ring_mod_n(4)).matrix(), 0.5 * fourier) < 1e-12;
}

bool ac2_mod4_tables() {
  const auto s = FiniteStructure::ring_mod_n(4);
  const Table add{{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}};
  const Table mul{{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 0, 2}, {0, 3, 2, 1}};
  const AxiomReport r = verify_axioms(s);
  return tables_equal(s, add, mul) && r.is_ring() && !r.is_field && !r.zero_divisor_free;
}

std::vector<FiniteStructure> prime_power_structures() {
  return {FiniteStructure::ring_mod_n(2), FiniteStructure::ring_mod_n(3), FiniteStructure::galois_field(2, 2),
          FiniteStructure::ring_mod_n(5), FiniteStructure::ring_mod_n(7), FiniteStructure::galois_field(2, 3),
          FiniteStructure::galois_field(3, 2)};
}

bool ac3_complete_mubs() {
  for (const auto& s : prime_power_structures()) {
    const std::vector<Basis> f = mub_family(s);
    const UnbiasednessReport r = unbiasedness(f);
    if (f.size() != static_cast<std::size_t>(s.size() + 1) || !r.is_complete_mub || r.overall_max >= 1e-10) return false;
    for (const Basis& b : f)
      if (!b.is_orthonormal()) return false;
  }
  return true;
}

bool ac4_composite_deviation() {
  for (int n : {6, 10}) {
    const UnbiasednessReport r = unbiasedness(mub_family(FiniteStructure::ring_mod_n(n)));
    double worst = 0.0;
    for (const PairDeviation& p : r.pairs) {
      if (p.first == 0 && p.deviation >= 1e-10) return false;
      if (p.first != 0) worst = std::max(worst, p.deviation);
    }
    if (worst <= 0.01) return false;
  }
  return true;
}

std::set<OpLabel> as_set(const std::vector<OpLabel>& v) { return {v.begin(), v.end()}; }

bool ac5_subgroup_census() {
  for (int p : {2, 3, 5, 7, 11}) {
    const auto s = FiniteStructure::ring_mod_n(p);
    const SubgroupDecomposition d = enumerate_subgroups(s);
    if (d.count() != p + 1 || !covers_all_labels(s, d)) return false;
  }
  const std::set<std::set<OpLabel>> mod4{
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}}, {{0, 0}, {0, 1}, {0, 2}, {0, 3}}, {{0, 0}, {1, 1}, {2, 2}, {3, 3}},
      {{0, 0}, {1, 2}, {2, 0}, {3, 2}}, {{0, 0}, {1, 3}, {2, 2}, {3, 1}}, {{0, 0}, {2, 1}, {0, 2}, {2, 3}}};
  std::set<std::set<OpLabel>> got;
  for (const Subgroup& g : enumerate_subgroups(FiniteStructure::ring_mod_n(4)).subgroups) got.insert(as_set(g.members));
  if (got != mod4) return false;

  // GF(4): each subgroup is one row of commuting two-qubit Paulis.
  const auto gf4 = FiniteStructure::galois_field(2, 2);
  const ComplexMatrix x{{0, 1}, {1, 0}}, y{{0, -I}, {I, 0}}, z{{1, 0}, {0, -1}}, e = ComplexMatrix::identity(2);
  const std::vector<std::vector<ComplexMatrix>> rows{
      {tensor(z, e), tensor(e, z), tensor(z, z)}, {tensor(e, x), tensor(x, e), tensor(x, x)},
      {tensor(y, e), tensor(e, y), tensor(y, y)}, {tensor(z, x), tensor(x, y), tensor(y, z)},
      {tensor(y, x), tensor(z, y), tensor(x, z)}};
  const SubgroupDecomposition d = enumerate_subgroups(gf4);
  if (d.count() != 5) return false;
  std::vector<bool> used(rows.size(), false);
  for (const Subgroup& g : d.subgroups) {
    bool matched = false;
    for (std::size_t r = 0; r < rows.size() && !matched; ++r) {
      if (used[r]) continue;
      bool all = true;
      for (const OpLabel& m : g.members) {
        if (m == OpLabel{0, 0}) continue;
        bool found = false;
        for (const ComplexMatrix& t : rows[r]) {
          const Proportionality p = proportionality(v_matrix(gf4, m), t);
          found = found || (p.residual < 1e-10 && std::abs(std::abs(p.factor) - 1.0) < 1e-10);
        }
        all = all && found;
      }
      if (all) matched = used[r] = true;
    }
    if (!matched) return false;
  }
  return true;
}

bool ac6_composition() {
  std::vector<FiniteStructure> all;
  for (int n = 2; n <= 8; ++n) {
    all.push_back(FiniteStructure::ring_mod_n(n));
    if (const auto pm = prime_power(n); pm && pm->second > 1) all.push_back(FiniteStructure::galois_field(pm->first, pm->second));
  }
  for (const auto& s : all) {
    const int n = s.size();
    for (Label a = 0; a < n; ++a)
      for (Label b = 0; b < n; ++b) {
        if (weyl_residual(s, a, b) >= 1e-10) return false;
        for (Label c = 0; c < n; ++c)
          for (Label d = 0; d < n; ++d)
            if (composition_residual(s, {a, b}, {c, d}) >= 1e-10) return false;
      }
    if (!s.is_field()) continue;
    // Each family's U operators close under multiplication up to phase.
    for (int k = 0; k <= n; ++k)
      for (Label l1 = 0; l1 < n; ++l1)
        for (Label l2 = 0; l2 < n; ++l2) {
          const ComplexMatrix prod = matmul(u_op(s, k, l1).matrix, u_op(s, k, l2).matrix);
          if (proportionality(prod, u_op(s, k, s.add(l1, l2)).matrix).residual >= 1e-10) return false;
        }
  }
  return true;
}

bool bell_suite(const FiniteStructure& s, bool exhaustive, Rng& rng) {
  const auto n = static_cast<std::uint64_t>(s.size());
  auto pick = [&] { return static_cast<Label>(rng.next() % n); };
  if (bell_orthonormality_residual(s, computational_basis(s.size())) >= 1e-10) return false;
  const int trials = exhaustive ? 1 : 100;
  for (int t = 0; t < trials; ++t) {
    std::vector<std::array<Label, 4>> tuples;
    if (exhaustive) {
      for (Label a = 0; a < s.size(); ++a)
        for (Label b = 0; b < s.size(); ++b)
          for (Label c = 0; c < s.size(); ++c)
            for (Label d = 0; d < s.size(); ++d) tuples.push_back({a, b, c, d});
    } else {
      tuples.push_back({pick(), pick(), pick(), pick()});
    }
    for (const auto& [m, k, i, j] : tuples) {
      if (!bell_duality_check(s, m, k)) return false;
      permutation_invariance_check(s, i, m, k);
      const ComplexVector expected = apply(v_matrix(s, {k, m}), ComplexVector::unit(static_cast<std::size_t>(n), static_cast<std::size_t>(i)));
      if (phase_insensitive_distance(error_channel(s, m, k, i), expected) >= 1e-10) return false;
      if (std::abs(repairing_overlap(s, m, k, i, j) - repairing_overlap_formula(s, m, k, i, j)) >= 1e-10) return false;
    }
  }
  return true;
}

bool ac7_bell() {
  Rng rng;
  if (!bell_suite(FiniteStructure::ring_mod_n(2), true, rng)) return false;
  const auto start = std::chrono::steady_clock::now();
  if (!bell_suite(FiniteStructure::ring_mod_n(3), true, rng)) return false;
  if (std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() >= 60.0) return false;
  return bell_suite(FiniteStructure::ring_mod_n(5), false, rng) &&
         bell_suite(FiniteStructure::galois_field(2, 2), false, rng);
}

bool ac8_tomography() {
  Rng rng;
  std::vector<FiniteStructure> all = prime_power_structures();
  all.push_back(FiniteStructure::ring_mod_n(4));
  all.push_back(FiniteStructure::ring_mod_n(6));
  for (const auto& s : all) {
    const std::vector<MeasurementFrame> frames = measurement_frames(s);
    for (int t = 0; t < 50; ++t) {
      const DensityMatrix rho = random_density_matrix(s.size(), rng);
      const Reconstruction r = reconstruct(s, measure(rho, frames), frames, {1e-9, true});
      if (max_abs_diff(r.matrix, rho.matrix()) >= 1e-9) return false;
    }
  }
  const DegreesOfFreedom five = degrees_of_freedom_report(FiniteStructure::ring_mod_n(5));
  const DegreesOfFreedom four = degrees_of_freedom_report(FiniteStructure::ring_mod_n(4));
  return five.parameters == 24 && five.measured == 24 && five.excess == 0 && four.parameters == 15 &&
         four.measured == 18 && four.excess == 3;
}

bool ac9_intertwining() {
  for (int p : {2, 3, 5, 7}) {
    const auto s = FiniteStructure::ring_mod_n(p);
    for (int k = 1; k <= p; ++k) {
      std::set<OpLabel> images;
      for (Label m = 0; m < p; ++m)
        for (Label n = 0; n < p; ++n) {
          const Intertwining it = intertwine_check(s, k, {m, n});
          if (!it.matches_prediction || it.residual >= 1e-10) return false;
          images.insert(it.image);
        }
      if (images.size() != static_cast<std::size_t>(p * p)) return false;
    }
  }
  return true;
}

bool ac10_determinism() {
  for (const std::vector<std::string>& args : {std::vector<std::string>{"all", "--dim", "5", "--json"},
                                               std::vector<std::string>{"all", "--dim", "4", "--json"},
                                               std::vector<std::string>{"all", "--dim", "4", "--construction", "galois", "--json"}}) {
    std::ostringstream a, b, err;
    const int ca = cli::run(args, a, err);
    const int cb = cli::run(args, b, err);
    if (ca != 0 || cb != 0 || a.str() != b.str() || a.str().empty()) return false;
  }
  return true;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<bool()>> criteria[] = {
      {"AC1 GF(4) tables and dual-basis matrices", ac1_gf4_tables},
      {"AC2 Z_4 tables and ring axioms", ac2_mod4_tables},
      {"AC3 complete MUB families for N in {2,3,4,5,7,8,9}", ac3_complete_mubs},
      {"AC4 composite N=6,10 unbiased only against computational", ac4_composite_deviation},
      {"AC5 commuting subgroup census", ac5_subgroup_census},
      {"AC6 composition law, Weyl rule and U closure for N<=8", ac6_composition},
      {"AC7 Bell duality, invariance, error channel and re-pairing", ac7_bell},
      {"AC8 tomography round trip and parameter count", ac8_tomography},
      {"AC9 intertwining is a label bijection for primes <= 7", ac9_intertwining},
      {"AC10 identical output across repeated runs", ac10_determinism},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    bool pass = false;
    std::string detail;
    try {
      pass = check();
    } catch (const std::exception& e) {
      detail = std::string(" (") + e.what() + ")";
    }
    std::cout << (pass ? "PASS " : "FAIL ") << name << detail << "\n";
    failed += pass ? 0 : 1;
  }
  std::cout << failed << " of " << std::size(criteria) << " criteria failed\n";
  return failed == 0 ? 0 : 1;
}
