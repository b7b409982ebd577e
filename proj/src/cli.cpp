#include "mubkit/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mubkit/bases.hpp"
#include "mubkit/bell.hpp"
#include "mubkit/error.hpp"
#include "mubkit/tomography.hpp"
#include "mubkit/weyl.hpp"

namespace mubkit::cli {

namespace {

constexpr int kExhaustiveBellDim = 3;
constexpr int kExhaustivePauliDim = 8;
constexpr int kSpotChecks = 100;

std::size_t idx(int x) { return static_cast<std::size_t>(x); }

// Runs fn, recording a failed check instead of propagating library errors.
void guarded(Report& r, const std::string& name, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    r.add(name, INFINITY, false);
  }
}

std::vector<std::array<Label, 4>> label_tuples(const FiniteStructure& s, int arity, bool exhaustive, Rng& rng) {
  std::vector<std::array<Label, 4>> out;
  const int n = s.size();
  if (exhaustive) {
    int total = 1;
    for (int a = 0; a < arity; ++a) total *= n;
    for (int code = 0; code < total; ++code) {
      std::array<Label, 4> t{};
      int rest = code;
      for (int a = arity - 1; a >= 0; --a) {
        t[idx(a)] = rest % n;
        rest /= n;
      }
      out.push_back(t);
    }
  } else {
    for (int c = 0; c < kSpotChecks; ++c) {
      std::array<Label, 4> t{};
      for (int a = 0; a < arity; ++a) t[idx(a)] = static_cast<Label>(rng.next() % static_cast<std::uint64_t>(n));
      out.push_back(t);
    }
  }
  return out;
}

}  // namespace

Report field_checks(const FiniteStructure& s) {
  Report r;
  const AxiomReport axioms = verify_axioms(s);
  r.add("ring-axioms", axioms.is_ring() ? 0.0 : 1.0, axioms.is_ring());
  const bool expect_field = s.kind() == Construction::galois || is_prime(s.size());
  r.add("field-iff-prime-power-construction", axioms.is_field == expect_field ? 0.0 : 1.0,
        axioms.is_field == expect_field && s.is_field() == expect_field);

  bool inverses_ok = true;
  for (Label a = 1; a < s.size(); ++a)
    if (s.has_inverse(a) && s.mul(a, s.inv(a)) != 1) inverses_ok = false;
  r.add("inverses", inverses_ok ? 0.0 : 1.0, inverses_ok);

  // Σ_x γ^{x⊙q} = N·δ_{q,0}
  double worst = 0.0;
  for (Label q = 0; q < s.size(); ++q) {
    Complex sum{};
    for (Label x = 0; x < s.size(); ++x) sum += s.chi(s.mul(x, q));
    const double expected = q == 0 ? s.size() : 0.0;
    worst = std::max(worst, std::abs(sum - expected));
  }
  // Over a ring with zero divisors the sum vanishes only for q outside every
  // proper ideal, so the identity is only checked on fields.
  if (s.is_field()) r.add("character-orthogonality", worst, 1e-9);

  double hom = 0.0;
  for (Label a = 0; a < s.size(); ++a)
    for (Label b = 0; b < s.size(); ++b) hom = std::max(hom, std::abs(s.chi(s.add(a, b)) - s.chi(a) * s.chi(b)));
  r.add("character-homomorphism", hom, 1e-12);
  return r;
}

Report mub_checks(const FiniteStructure& s, double tol) {
  Report r;
  const std::vector<Basis> family = mub_family(s);
  double ortho = 0.0;
  for (const Basis& b : family) ortho = std::max(ortho, b.orthonormality_residual());
  r.add("orthonormality", ortho, tol);

  const UnbiasednessReport u = unbiasedness(family, tol);
  double vs_computational = 0.0;
  double among_rest = 0.0;
  for (const PairDeviation& p : u.pairs) {
    if (p.first == 0) {
      vs_computational = std::max(vs_computational, p.deviation);
    } else {
      among_rest = std::max(among_rest, p.deviation);
    }
  }
  r.add("unbiased-vs-computational", vs_computational, tol);
  if (s.is_field()) {
    r.add("pairwise-unbiasedness", u.overall_max, tol);
    r.add("family-size", std::abs(static_cast<double>(family.size()) - (s.size() + 1)), u.is_complete_mub);
  } else {
    r.add("composite-deviation-present", among_rest, among_rest > 0.01);
  }

  const Basis dual = dual_basis(s);
  const ComplexMatrix w = dual.matrix();
  r.add("dual-basis-unitary", max_abs_diff(matmul(adjoint(w), w), ComplexMatrix::identity(idx(s.size()))), tol);

  if (s.kind() == Construction::mod_n) {
    double worst = 0.0;
    for (int k = 1; k <= s.size(); ++k)
      for (int l = 1; l <= s.size(); ++l)
        for (Label i = 0; i < s.size(); ++i)
          for (Label j = 0; j < s.size(); ++j) {
            const Complex direct = overlap(family[idx(l)].states[idx(j)], family[idx(k)].states[idx(i)]);
            worst = std::max(worst, std::abs(direct - fourier_overlap_closed_form(s, l, j, k, i)));
          }
    r.add("overlap-closed-form", worst, tol);
  }
  return r;
}

Report pauli_checks(const FiniteStructure& s, double tol, std::uint64_t seed) {
  Report r;
  const int n = s.size();
  Rng rng(seed);

  const bool exhaustive = n <= kExhaustivePauliDim;
  double composition = 0.0;
  bool exact_ok = true;
  for (const auto& t : label_tuples(s, 4, exhaustive, rng)) {
    const OpLabel a{t[0], t[1]};
    const OpLabel b{t[2], t[3]};
    composition = std::max(composition, composition_residual(s, a, b));
    if (labels_commute(s, a, b) != (compose(s, a, b).phase == compose(s, b, a).phase)) exact_ok = false;
  }
  r.add("composition-law", composition, tol);
  r.add("commutation-criterion", exact_ok ? 0.0 : 1.0, exact_ok);

  double weyl = 0.0;
  for (Label i = 0; i < n; ++i)
    for (Label j = 0; j < n; ++j) weyl = std::max(weyl, weyl_residual(s, i, j));
  r.add("weyl-commutation", weyl, tol);

  double closure = 0.0;
  double diagonal = 0.0;
  for (int b = 0; b <= n; ++b) {
    std::vector<ComplexMatrix> u;
    for (Label l = 0; l < n; ++l) u.push_back(u_op(s, b, l).matrix);
    const Basis basis = mub_basis(s, b);
    for (Label l = 0; l < n; ++l) {
      ComplexMatrix expected(idx(n), idx(n));
      for (Label k = 0; k < n; ++k) expected += s.chi(s.mul(k, l)) * ComplexMatrix::outer(basis.states[idx(k)], basis.states[idx(k)]);
      diagonal = std::max(diagonal, max_abs_diff(u[idx(l)], expected));
      for (Label l2 = 0; l2 < n; ++l2)
        closure = std::max(closure, max_abs_diff(matmul(u[idx(l)], u[idx(l2)]), u[idx(s.add(l, l2))]));
    }
  }
  r.add("u-group-closure", closure, tol);
  r.add("u-spectral-form", diagonal, tol);

  const SubgroupDecomposition d = enumerate_subgroups(s);
  double commutator = 0.0;
  for (const Subgroup& g : d.subgroups) commutator = std::max(commutator, max_commutator(s, g));
  r.add("subgroups-commute", commutator, tol);
  r.add("subgroups-cover-labels", covers_all_labels(s, d) ? 0.0 : 1.0, covers_all_labels(s, d));
  if (s.is_field()) r.add("subgroup-count", std::abs(d.count() - (n + 1.0)), d.count() == n + 1);

  guarded(r, "excess-frames-diagonal", [&] {
    double worst = 0.0;
    for (const MeasurementFrame& f : measurement_frames(s, seed))
      for (const PhasedOperator& op : f.ops) {
        worst = std::max(worst, f.basis.orthonormality_residual());
        ComplexMatrix expected(idx(n), idx(n));
        for (Label k = 0; k < n; ++k)
          expected += s.chi(s.mul(k, op.cycle)) * ComplexMatrix::outer(f.basis.states[idx(k)], f.basis.states[idx(k)]);
        worst = std::max(worst, max_abs_diff(op.matrix, expected));
      }
    r.add("frames-diagonal", worst, 1e3 * tol);
  });

  guarded(r, "intertwining", [&] {
    double worst = 0.0;
    bool predicted = true;
    for (int k = 1; k <= n; ++k)
      for (Label m = 0; m < n; ++m)
        for (Label sh = 0; sh < n; ++sh) {
          const Intertwining it = intertwine_check(s, k, {m, sh}, tol);
          worst = std::max(worst, it.residual);
          predicted = predicted && it.matches_prediction;
        }
    r.add("intertwining", worst, predicted && worst < tol);
  });
  return r;
}

Report bell_checks(const FiniteStructure& s, double tol, std::uint64_t seed) {
  Report r;
  const int n = s.size();
  Rng rng(seed);
  const bool exhaustive = n <= kExhaustiveBellDim;

  double duality = 0.0;
  for (Label m = 0; m < n; ++m)
    for (Label k = 0; k < n; ++k) duality = std::max(duality, bell_duality_residual(s, m, k));
  r.add("duality", duality, tol);

  const Basis computational = computational_basis(n);
  r.add("orthonormality", std::max(bell_orthonormality_residual(s, computational), bell_orthonormality_residual(s, dual_basis(s))),
        tol);

  guarded(r, "permutation-invariance", [&] {
    double worst = 0.0;
    for (const auto& t : label_tuples(s, 3, n <= 5, rng)) {
      const InvariancePhase p = permutation_invariance_check(s, t[0], t[1], t[2], tol);
      worst = std::max(worst, std::max(p.residual, std::abs(p.phase - p.expected.value())));
    }
    r.add("permutation-invariance", worst, tol);
  });

  double channel = 0.0;
  for (const auto& t : label_tuples(s, 3, n <= 5, rng)) {
    const ComplexVector bob = error_channel(s, t[0], t[1], t[2]);
    const ComplexVector expected = apply(v_matrix(s, {t[1], t[0]}), ComplexVector::unit(idx(n), idx(t[2])));
    channel = std::max(channel, phase_insensitive_distance(bob, expected));
  }
  r.add("error-channel", channel, tol);

  double repairing = 0.0;
  for (const auto& t : label_tuples(s, 4, exhaustive, rng)) {
    repairing = std::max(repairing, std::abs(repairing_overlap(s, t[0], t[1], t[2], t[3]) -
                                             repairing_overlap_formula(s, t[0], t[1], t[2], t[3])));
  }
  r.add("repairing-overlap", repairing, tol);
  return r;
}

Report tomo_checks(const FiniteStructure& s, double tol, std::uint64_t seed) {
  Report r;
  const int n = s.size();
  Rng rng(seed);
  const std::vector<MeasurementFrame> frames = measurement_frames(s, seed);

  guarded(r, "round-trip", [&] {
    const DensityMatrix rho = random_density_matrix(n, rng);
    const Reconstruction rec = reconstruct(s, measure(rho, frames), frames, {1e-9, true});
    r.add("round-trip", max_abs_diff(rec.matrix, rho.matrix()), 1e-9);
    r.add("reconstruction-hermitian", std::max(rec.hermiticity_residual, rec.trace_residual), tol);
  });
  guarded(r, "maximally-mixed", [&] {
    const DensityMatrix rho = DensityMatrix::maximally_mixed(n);
    const Reconstruction rec = reconstruct(s, measure(rho, frames), frames, {1e-9, true});
    r.add("maximally-mixed", max_abs_diff(rec.matrix, rho.matrix()), tol);
  });

  const ComplexMatrix l = random_density_matrix(n, rng).matrix();
  r.add("expansion", max_abs_diff(reconstruct_from_coefficients(s, expand(s, l)), l), tol);

  const DegreesOfFreedom dof = degrees_of_freedom_report(s);
  const bool dof_ok = dof.parameters == n * n - 1 && dof.measured == (n - 1) * dof.bases && dof.excess >= 0 &&
                      (dof.excess == 0) == (dof.bases == n + 1);
  r.add("degrees-of-freedom", static_cast<double>(dof.excess), dof_ok);
  return r;
}

namespace {

struct Context {
  RunConfig cfg;
  std::ostream& out;
  std::ostream& err;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FiniteStructure structure(const RunConfig& cfg) {
  if (cfg.dim == 0) throw UsageError("--dim is required");
  return FiniteStructure::make(cfg.construction, cfg.dim);
}

void emit_text(std::ostream& os, const std::string& text) { os << text; }

void emit(Context& ctx, const Json& j, const std::string& text) {
  const std::string payload = ctx.cfg.json ? j.dump(2) + "\n" : text;
  if (ctx.cfg.output) {
    std::ofstream file(*ctx.cfg.output);
    if (!file) throw UsageError("cannot write " + *ctx.cfg.output);
    file << payload;
  } else {
    emit_text(ctx.out, payload);
  }
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  os << std::setprecision(3);
  for (const Check& c : r.checks()) {
    os << (c.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(36) << c.name << " " << c.max_residual << "\n";
  }
  os << r.checks().size() << " checks, " << r.failures().size() << " failed\n";
  return os.str();
}

Json header(const RunConfig& cfg, const std::string& command) {
  Json j;
  j["command"] = command;
  j["dim"] = cfg.dim;
  j["construction"] = std::string(to_string(cfg.construction));
  j["seed"] = cfg.seed;
  j["tol"] = cfg.tol;
  return j;
}

int finish(Context& ctx, const std::string& command, const Report& r) {
  Json j = header(ctx.cfg, command);
  j["checks"] = r.to_json()["checks"];
  j["pass"] = r.all_pass();
  emit(ctx, j, report_text(r));
  if (!r.all_pass()) {
    ctx.err << "failed checks:";
    for (const std::string& name : r.failures()) ctx.err << " " << name;
    ctx.err << "\n";
    return kCheckFailed;
  }
  return kPass;
}

int cmd_field_show(Context& ctx) {
  const FiniteStructure s = structure(ctx.cfg);
  std::ostringstream os;
  os << to_string(s.kind()) << " structure of size " << s.size();
  if (s.kind() == Construction::galois) {
    os << " = GF(" << s.characteristic() << "^" << s.degree() << "), modulus";
    for (int c : s.modulus()) os << " " << c;
  }
  os << (s.is_field() ? " (field)" : " (ring)") << "\n";
  const int width = s.size() > 9 ? 4 : 2;
  for (const auto& [name, table] : {std::pair{"add", &s.add_table()}, std::pair{"mul", &s.mul_table()}}) {
    os << name << "\n";
    for (int a = 0; a < s.size(); ++a) {
      for (int b = 0; b < s.size(); ++b) os << std::setw(width) << (*table)[idx(a * s.size() + b)];
      os << "\n";
    }
  }
  emit(ctx, structure_json(s), os.str());
  return kPass;
}

int cmd_mub_generate(Context& ctx) {
  const FiniteStructure s = structure(ctx.cfg);
  const Json j = family_json(s, mub_family(s));
  const std::string payload = j.dump(2) + "\n";
  if (ctx.cfg.output) {
    std::ofstream file(*ctx.cfg.output);
    if (!file) throw UsageError("cannot write " + *ctx.cfg.output);
    file << payload;
  } else {
    ctx.out << payload;
  }
  return kPass;
}

Report verify_loaded(const std::vector<Basis>& bases, const std::optional<FiniteStructure>& s, double tol) {
  Report r;
  double ortho = 0.0;
  for (const Basis& b : bases) ortho = std::max(ortho, b.orthonormality_residual());
  r.add("orthonormality", ortho, tol);
  if (bases.size() < 2) return r;

  const UnbiasednessReport u = unbiasedness(bases, tol);
  if (!s || s->is_field()) {
    r.add("pairwise-unbiasedness", u.overall_max, tol);
    return r;
  }
  double vs_first = 0.0;
  for (const PairDeviation& p : u.pairs)
    if (p.first == 0) vs_first = std::max(vs_first, p.deviation);
  r.add("unbiased-vs-computational", vs_first, tol);
  return r;
}

int cmd_mub_verify(Context& ctx) {
  if (!ctx.cfg.input) return finish(ctx, "mub verify", mub_checks(structure(ctx.cfg), ctx.cfg.tol));

  const Json j = read_json_file(*ctx.cfg.input);
  const std::vector<Basis> bases = bases_from_json(j);
  std::optional<FiniteStructure> s;
  if (j.contains("construction") && j["construction"].is_string()) {
    const auto kind = parse_construction(j["construction"].get<std::string>());
    if (!kind) throw Error(ErrorKind::parse_error, "unknown construction in " + *ctx.cfg.input);
    s = FiniteStructure::make(*kind, bases.front().dim);
    ctx.cfg.construction = *kind;
  }
  ctx.cfg.dim = bases.front().dim;
  return finish(ctx, "mub verify", verify_loaded(bases, s, ctx.cfg.tol));
}

int cmd_pauli_subgroups(Context& ctx) {
  const FiniteStructure s = structure(ctx.cfg);
  const SubgroupDecomposition d = enumerate_subgroups(s, true, ctx.cfg.seed);
  Json j = header(ctx.cfg, "pauli subgroups");
  j["count"] = d.count();
  Json groups = Json::array();
  std::ostringstream os;
  os << d.count() << " subgroups\n";
  for (const Subgroup& g : d.subgroups) {
    Json members = Json::array();
    os << (g.basis_index <= s.size() ? "basis " : "excess ") << std::setw(2) << g.basis_index << ":";
    for (const OpLabel& m : g.members) {
      members.push_back(Json::array({m.clock, m.shift}));
      os << " (" << m.clock << "," << m.shift << ")";
    }
    os << "\n";
    groups.push_back(std::move(members));
  }
  j["subgroups"] = std::move(groups);
  Json bases = Json::array();
  for (const Basis& b : d.eigenbases) bases.push_back(basis_json(b));
  j["eigenbases"] = std::move(bases);
  emit(ctx, j, os.str());
  return kPass;
}

int cmd_tomo_demo(Context& ctx) {
  const FiniteStructure s = structure(ctx.cfg);
  Rng rng(ctx.cfg.seed);
  const int n = s.size();
  std::optional<DensityMatrix> rho;
  if (ctx.cfg.state == "random") {
    rho = random_density_matrix(n, rng);
  } else if (ctx.cfg.state == "mixed") {
    rho = DensityMatrix::maximally_mixed(n);
  } else {
    rho = density_from_json(read_json_file(ctx.cfg.state), 1e-8);
    if (rho->dim() != n) throw UsageError("state file dimension does not match --dim");
  }

  const std::vector<MeasurementFrame> frames = measurement_frames(s, ctx.cfg.seed);
  const MeasurementTable table = measure(*rho, frames, ctx.cfg.shots, &rng);
  const bool sampled = ctx.cfg.shots.has_value();
  const Reconstruction rec = reconstruct(s, table, frames, {sampled ? ctx.cfg.tol : 1e-9, !sampled});
  const double residual = max_abs_diff(rec.matrix, rho->matrix());
  // Sampled estimates are judged against the shot-noise scale.
  const double limit = sampled ? 10.0 / std::sqrt(static_cast<double>(*ctx.cfg.shots)) : 1e-9;
  const DegreesOfFreedom dof = degrees_of_freedom_report(s);

  Report r;
  r.add("reconstruction", residual, limit);

  Json j = header(ctx.cfg, "tomo demo");
  j["state"] = ctx.cfg.state;
  j["shots"] = sampled ? Json(*ctx.cfg.shots) : Json(nullptr);
  j["residual"] = residual;
  j["dof"] = {{"parameters", dof.parameters}, {"bases", dof.bases}, {"measured", dof.measured}, {"excess", dof.excess}};
  Json rows = Json::array();
  for (const MeasurementRow& row : table.rows) rows.push_back({{"basis_index", row.basis_index}, {"probabilities", row.probabilities}});
  j["rows"] = std::move(rows);
  j["duplicate_spread"] = rec.duplicate_spread;
  j["psd"] = rec.psd;
  j["min_eigenvalue"] = rec.min_eigenvalue;
  j["checks"] = r.to_json()["checks"];
  j["pass"] = r.all_pass();

  std::ostringstream os;
  os << "reconstruction residual " << residual << (sampled ? " (" + std::to_string(*ctx.cfg.shots) + " shots)" : "")
     << "\nparameters " << dof.parameters << ", bases " << dof.bases << ", measured " << dof.measured << ", excess "
     << dof.excess << "\nduplicate spread " << rec.duplicate_spread << ", psd " << (rec.psd ? "yes" : "no") << "\n"
     << report_text(r);
  emit(ctx, j, os.str());
  return r.all_pass() ? kPass : kCheckFailed;
}

int cmd_all(Context& ctx) {
  const FiniteStructure s = structure(ctx.cfg);
  Report all;
  const std::pair<const char*, std::function<Report()>> suites[] = {
      {"galois", [&] { return field_checks(s); }},
      {"bases", [&] { return mub_checks(s, ctx.cfg.tol); }},
      {"weylgroup", [&] { return pauli_checks(s, ctx.cfg.tol, ctx.cfg.seed); }},
      {"bell", [&] { return bell_checks(s, ctx.cfg.tol, ctx.cfg.seed); }},
      {"tomography", [&] { return tomo_checks(s, ctx.cfg.tol, ctx.cfg.seed); }},
  };
  for (const auto& [prefix, suite] : suites) {
    const Report r = suite();
    for (const Check& c : r.checks()) all.add(std::string(prefix) + "/" + c.name, c.max_residual, c.pass);
  }
  return finish(ctx, "all", all);
}

double default_tolerance() {
  if (const char* env = std::getenv("MUBKIT_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultTol;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite fields, mutually unbiased bases, generalized Pauli groups, Bell states and tomography", "mubkit"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  cfg.tol = default_tolerance();
  std::string construction = "mod-n";
  int shots = 0;
  std::string output;
  std::string input;

  app.add_option("--dim", cfg.dim, "dimension N");
  app.add_option("--construction", construction, "mod-n or galois")->check(CLI::IsMember({"mod-n", "galois"}));
  app.add_option("--tol", cfg.tol, "tolerance (default 1e-10, or MUBKIT_TOL)");
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_flag("--json", cfg.json, "JSON output");
  app.add_option("--output", output, "write the report to FILE");
  app.add_option("--shots", shots, "multinomial shots per basis (tomography)")->check(CLI::PositiveNumber);
  app.add_option("--input", input, "basis or family JSON file (mub verify)");
  app.add_option("--state", cfg.state, "random, mixed or a density-matrix JSON file (tomo demo)");

  std::function<int(Context&)> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<int(Context&)> fn) {
    parent->add_subcommand(name, help)->fallthrough()->callback([&action, fn] { action = fn; });
  };

  CLI::App* field = app.add_subcommand("field", "finite structure tables")->require_subcommand(1)->fallthrough();
  leaf(field, "show", "print addition and multiplication tables", cmd_field_show);
  CLI::App* mub = app.add_subcommand("mub", "mutually unbiased bases")->require_subcommand(1)->fallthrough();
  leaf(mub, "generate", "emit the N+1 family as JSON", cmd_mub_generate);
  leaf(mub, "verify", "check orthonormality and unbiasedness", cmd_mub_verify);
  CLI::App* pauli = app.add_subcommand("pauli", "generalized Pauli group")->require_subcommand(1)->fallthrough();
  leaf(pauli, "subgroups", "enumerate commuting subgroups", cmd_pauli_subgroups);
  leaf(pauli, "check", "composition, Weyl, closure and intertwining suite",
       [](Context& c) { return finish(c, "pauli check", pauli_checks(structure(c.cfg), c.cfg.tol, c.cfg.seed)); });
  CLI::App* bell = app.add_subcommand("bell", "generalized Bell states")->require_subcommand(1)->fallthrough();
  leaf(bell, "verify", "duality, invariance, orthonormality and re-pairing suite",
       [](Context& c) { return finish(c, "bell verify", bell_checks(structure(c.cfg), c.cfg.tol, c.cfg.seed)); });
  CLI::App* tomo = app.add_subcommand("tomo", "state tomography")->require_subcommand(1)->fallthrough();
  leaf(tomo, "demo", "measure and reconstruct a density matrix", cmd_tomo_demo);
  leaf(&app, "all", "run every verification suite", cmd_all);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  cfg.construction = *parse_construction(construction);
  if (shots > 0) cfg.shots = shots;
  if (!output.empty()) cfg.output = output;
  if (!input.empty()) cfg.input = input;

  Context ctx{cfg, out, err};
  try {
    return action(ctx);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::invalid_dimension:
      case ErrorKind::invalid_characteristic:
      case ErrorKind::too_large:
      case ErrorKind::parse_error:
        return kUsage;
      default:
        return kCheckFailed;
    }
  }
}

}  // namespace mubkit::cli
