#include "mubkit/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <string>

#include "mubkit/error.hpp"

namespace mubkit {

namespace {

void check_label(const FiniteStructure& s, Label x) {
  if (x < 0 || x >= s.size()) {
    throw Error(ErrorKind::index_error, "operator label " + std::to_string(x) + " outside 0.." + std::to_string(s.size() - 1));
  }
}

void check_dim(const FiniteStructure& s, const ComplexMatrix& m) {
  const auto n = static_cast<std::size_t>(s.size());
  if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::domain_error, "operator does not act on this structure");
}

OpLabel scale(const FiniteStructure& s, Label c, OpLabel g) { return {s.mul(c, g.clock), s.mul(c, g.shift)}; }

std::vector<OpLabel> sorted(std::vector<OpLabel> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string label_text(OpLabel l) { return "(" + std::to_string(l.clock) + "," + std::to_string(l.shift) + ")"; }

}  // namespace

ComplexMatrix v_matrix(const FiniteStructure& s, OpLabel label) {
  check_label(s, label.clock);
  check_label(s, label.shift);
  const auto n = static_cast<std::size_t>(s.size());
  ComplexMatrix m(n, n);
  for (Label k = 0; k < s.size(); ++k) {
    const Label target = s.add(k, label.shift);
    m(static_cast<std::size_t>(target), static_cast<std::size_t>(k)) = s.chi(s.mul(target, label.clock));
  }
  return m;
}

ErrorOperator v_op(const FiniteStructure& s, Label clock_power, Label shift_power) {
  const OpLabel label{clock_power, shift_power};
  return {label, v_matrix(s, label)};
}

ErrorOperator shift(const FiniteStructure& s, Label i) { return v_op(s, 0, i); }
ErrorOperator clock(const FiniteStructure& s, Label j) { return v_op(s, j, 0); }

Composition compose(const FiniteStructure& s, OpLabel a, OpLabel b) {
  check_label(s, a.clock);
  check_label(s, a.shift);
  check_label(s, b.clock);
  check_label(s, b.shift);
  return {s.character(s.neg(s.mul(a.shift, b.clock))), {s.add(a.clock, b.clock), s.add(a.shift, b.shift)}};
}

Composition compose(const FiniteStructure& s, const ErrorOperator& a, const ErrorOperator& b) {
  check_dim(s, a.matrix);
  check_dim(s, b.matrix);
  return compose(s, a.label, b.label);
}

double composition_residual(const FiniteStructure& s, OpLabel a, OpLabel b) {
  const Composition c = compose(s, a, b);
  const ComplexMatrix product = matmul(v_matrix(s, a), v_matrix(s, b));
  return max_abs_diff(product, c.phase.value() * v_matrix(s, c.label));
}

double weyl_residual(const FiniteStructure& s, Label i, Label j) {
  const ComplexMatrix p = shift(s, i).matrix;
  const ComplexMatrix q = clock(s, j).matrix;
  const Complex phase = s.chi(s.neg(s.mul(i, j)));
  return max_abs_diff(matmul(p, q), phase * matmul(q, p));
}

bool labels_commute(const FiniteStructure& s, OpLabel a, OpLabel b) {
  return s.character_exponent(s.sub(s.mul(a.shift, b.clock), s.mul(b.shift, a.clock))) == 0;
}

PhasedOperator u_op(const FiniteStructure& s, int basis_index, Label l) {
  if (basis_index < 0 || basis_index > s.size()) {
    throw Error(ErrorKind::index_error, "basis index " + std::to_string(basis_index) + " outside 0.." + std::to_string(s.size()));
  }
  check_label(s, l);
  PhasedOperator u;
  u.basis_index = basis_index;
  u.cycle = l;
  if (basis_index == 0) {
    u.v_label = {l, 0};
  } else {
    const Label x = basis_index - 1;
    u.v_label = {s.mul(x, l), l};
    u.phase = s.quadratic_phase(x, l).conj();
  }
  u.matrix = u.phase.value() * v_matrix(s, u.v_label);
  return u;
}

SubgroupDecomposition enumerate_subgroups(const FiniteStructure& s, bool with_eigenbases, std::uint64_t seed) {
  const int n = s.size();
  auto line = [&](OpLabel g) {
    std::vector<OpLabel> members;
    for (Label c = 0; c < n; ++c) members.push_back(scale(s, c, g));
    return members;
  };

  // Every full-size line keyed by its sorted label set; the generator kept is
  // the smallest label that spans it.
  std::map<std::vector<OpLabel>, OpLabel> lines;
  for (Label j = 0; j < n; ++j) {
    for (Label i = 0; i < n; ++i) {
      const OpLabel g{j, i};
      const std::vector<OpLabel> key = sorted(line(g));
      if (std::adjacent_find(key.begin(), key.end()) != key.end()) continue;
      lines.emplace(key, g);
    }
  }

  SubgroupDecomposition d;
  for (int k = 0; k <= n; ++k) {
    const OpLabel g = k == 0 ? OpLabel{1, 0} : OpLabel{k - 1, 1};
    const auto it = lines.find(sorted(line(g)));
    if (it == lines.end()) throw Error(ErrorKind::domain_error, "family subgroup missing for basis " + std::to_string(k));
    d.subgroups.push_back({g, line(g), k});
    lines.erase(it);
  }
  int next = n + 1;
  for (const auto& [key, g] : lines) d.subgroups.push_back({g, line(g), next++});

  if (with_eigenbases) {
    for (const Subgroup& g : d.subgroups) {
      std::vector<ComplexMatrix> ops;
      for (const OpLabel& m : g.members) ops.push_back(v_matrix(s, m));
      Basis b = joint_eigenbasis(ops, seed);
      b.construction_index = g.basis_index;
      d.eigenbases.push_back(std::move(b));
    }
  }
  return d;
}

bool covers_all_labels(const FiniteStructure& s, const SubgroupDecomposition& d) {
  std::set<OpLabel> seen;
  for (const Subgroup& g : d.subgroups) seen.insert(g.members.begin(), g.members.end());
  return static_cast<int>(seen.size()) == s.size() * s.size();
}

double max_commutator(const FiniteStructure& s, const Subgroup& g) {
  double worst = 0.0;
  for (std::size_t a = 0; a < g.members.size(); ++a) {
    const ComplexMatrix va = v_matrix(s, g.members[a]);
    for (std::size_t b = a + 1; b < g.members.size(); ++b) {
      const ComplexMatrix vb = v_matrix(s, g.members[b]);
      worst = std::max(worst, max_abs_diff(matmul(va, vb), matmul(vb, va)));
    }
  }
  return worst;
}

Basis joint_eigenbasis(std::span<const ComplexMatrix> ops, std::uint64_t seed, double tol) {
  if (ops.empty()) throw Error(ErrorKind::shape_error, "no operators to diagonalize");
  const std::size_t n = ops.front().rows();
  for (const ComplexMatrix& op : ops) {
    if (op.rows() != n || op.cols() != n) throw Error(ErrorKind::shape_error, "operators of mixed shape");
  }
  constexpr int kAttempts = 32;
  constexpr double kMinGap = 1e-6;

  Rng rng(seed);
  const Complex i_unit{0.0, 1.0};
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    ComplexMatrix h(n, n);
    for (const ComplexMatrix& op : ops) {
      const ComplexMatrix dag = adjoint(op);
      h += rng.uniform(-1.0, 1.0) * (op + dag);
      h += rng.uniform(-1.0, 1.0) * (i_unit * (op - dag));
    }
    const HermitianEigen eig = eig_hermitian(h, tol);
    double gap = INFINITY;
    for (std::size_t k = 1; k < eig.values.size(); ++k) gap = std::min(gap, eig.values[k] - eig.values[k - 1]);
    if (gap < kMinGap) continue;

    Basis b{static_cast<int>(n), 0, {}};
    for (std::size_t k = 0; k < n; ++k) {
      ComplexVector v = eig.vectors.column(k);
      normalize_phase(v);
      b.states.push_back(std::move(v));
    }
    return b;
  }
  throw Error(ErrorKind::numerical_degeneracy, "joint spectrum stayed degenerate after " + std::to_string(kAttempts) + " draws");
}

double off_diagonal(const ComplexMatrix& op, const Basis& basis) {
  const ComplexMatrix w = basis.matrix();
  const ComplexMatrix d = matmul(adjoint(w), matmul(op, w));
  double worst = 0.0;
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c)
      if (r != c) worst = std::max(worst, std::abs(d(r, c)));
  return worst;
}

ComplexMatrix basis_change(const FiniteStructure& s, int k) {
  if (k < 1 || k > s.size()) throw Error(ErrorKind::index_error, "basis change index must be in 1..N");
  return mub_basis(s, k).matrix();
}

OpLabel intertwine_prediction(const FiniteStructure& s, int k, OpLabel v) {
  return {v.shift, s.sub(s.mul(k - 1, v.shift), v.clock)};
}

Intertwining intertwine_check(const FiniteStructure& s, int k, OpLabel v, double tol) {
  const ComplexMatrix w = basis_change(s, k);
  const ComplexMatrix conjugated = matmul(adjoint(w), matmul(v_matrix(s, v), w));

  Intertwining out;
  const OpLabel predicted = intertwine_prediction(s, k, v);
  auto fit = proportionality(conjugated, v_matrix(s, predicted));
  if (fit.residual <= tol) {
    out.image = predicted;
    out.phase = fit.factor;
    out.residual = fit.residual;
    out.matches_prediction = true;
    return out;
  }
  for (Label j = 0; j < s.size(); ++j) {
    for (Label i = 0; i < s.size(); ++i) {
      fit = proportionality(conjugated, v_matrix(s, {j, i}));
      if (fit.residual <= tol) {
        out.image = {j, i};
        out.phase = fit.factor;
        out.residual = fit.residual;
        return out;
      }
    }
  }
  throw Error(ErrorKind::no_match, "W^" + std::to_string(k) + " conjugate of V" + label_text(v) + " is not a phased V");
}

namespace {

// Cycle-closure phases for a subgroup generated by g: U_c = φ^c·(V^g)^c with
// (φV^g)^N = 1. Needs c⊙g to be the c-fold composition of g, i.e. mod-n.
MeasurementFrame excess_frame(const FiniteStructure& s, const Subgroup& g, std::uint64_t seed) {
  if (s.kind() != Construction::mod_n) {
    throw Error(ErrorKind::domain_error, "excess subgroups are only phased for mod-n structures");
  }
  const int n = s.size();
  std::vector<Phase> accumulated{Phase::one()};
  OpLabel current{0, 0};
  for (int c = 0; c < n; ++c) {
    const Composition step = compose(s, current, g.generator);
    accumulated.push_back(accumulated.back() * step.phase);
    current = step.label;
  }
  const Phase closure = accumulated.back().conj().root(n);

  MeasurementFrame frame;
  std::vector<ComplexMatrix> matrices;
  for (Label c = 0; c < n; ++c) {
    PhasedOperator u;
    u.basis_index = g.basis_index;
    u.cycle = c;
    u.v_label = g.members[static_cast<std::size_t>(c)];
    u.phase = closure.pow(c) * accumulated[static_cast<std::size_t>(c)];
    u.matrix = u.phase.value() * v_matrix(s, u.v_label);
    matrices.push_back(u.matrix);
    frame.ops.push_back(std::move(u));
  }

  // Label eigenvector k by the eigenvalue γ^k of the cycle generator.
  const Basis raw = joint_eigenbasis(matrices, seed);
  frame.basis = Basis{n, g.basis_index, std::vector<ComplexVector>(static_cast<std::size_t>(n))};
  std::vector<bool> filled(static_cast<std::size_t>(n), false);
  for (const ComplexVector& v : raw.states) {
    const Complex lambda = inner(v, apply(frame.ops[1].matrix, v));
    const double turns = std::arg(lambda) / (2.0 * std::numbers::pi);
    const auto k = static_cast<std::size_t>(((static_cast<long>(std::lround(turns * n)) % n) + n) % n);
    if (filled[k]) throw Error(ErrorKind::numerical_degeneracy, "two eigenvectors share a cycle eigenvalue");
    filled[k] = true;
    frame.basis.states[k] = v;
  }
  return frame;
}

}  // namespace

std::vector<MeasurementFrame> measurement_frames(const FiniteStructure& s, std::uint64_t seed) {
  const SubgroupDecomposition d = enumerate_subgroups(s);
  std::vector<MeasurementFrame> frames;
  for (const Subgroup& g : d.subgroups) {
    if (g.basis_index <= s.size()) {
      MeasurementFrame frame{mub_basis(s, g.basis_index), {}};
      for (Label l = 0; l < s.size(); ++l) frame.ops.push_back(u_op(s, g.basis_index, l));
      frames.push_back(std::move(frame));
    } else {
      frames.push_back(excess_frame(s, g, seed));
    }
  }
  return frames;
}

}  // namespace mubkit
