#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mubkit/phase.hpp"

namespace mubkit {

/// Elements of a finite structure are labelled 0..N-1.
using Label = int;

enum class Construction { mod_n, galois };

std::string_view to_string(Construction c) noexcept;
std::optional<Construction> parse_construction(std::string_view text) noexcept;

/// Largest structure the library materializes tables for.
inline constexpr int kMaxStructureSize = 256;

/// A commutative addition group with a distributive commutative
/// multiplication on the labels {0..N-1}, plus its additive character.
///
/// Two kinds are supported:
///  - mod-n:  integers modulo N, character x ↦ e^{2πi·x/N};
///  - galois: GF(p^m), labels are base-p digit vectors of polynomial
///            coefficients (least significant digit = constant term),
///            character x ↦ e^{2πi·digit_0(x)/p}.
///
/// Addition and multiplication tables are materialized at construction.
/// Instances are immutable.
class FiniteStructure {
 public:
  /// Integers modulo n. Throws invalid-dimension for n < 2, too-large above
  /// kMaxStructureSize.
  static FiniteStructure ring_mod_n(int n);

  /// GF(p^m) over the smallest monic irreducible of degree m, comparing
  /// coefficients from x^{m-1} down to the constant term. Throws
  /// invalid-characteristic when p is not prime.
  static FiniteStructure galois_field(int p, int m);

  /// Builds the requested construction for dimension n. For galois, n must
  /// be a prime power.
  static FiniteStructure make(Construction kind, int n);

  int size() const noexcept { return size_; }
  Construction kind() const noexcept { return kind_; }
  /// p for galois; N for mod-n.
  int characteristic() const noexcept { return p_; }
  /// m for galois; 1 for mod-n.
  int degree() const noexcept { return m_; }
  /// Coefficients c_0..c_m of the modulus (galois only; empty for mod-n).
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  Label add(Label a, Label b) const { return add_[index(a, b)]; }
  Label mul(Label a, Label b) const { return mul_[index(a, b)]; }
  Label neg(Label a) const { return neg_.at(check(a)); }
  Label sub(Label a, Label b) const { return add(a, neg(b)); }
  /// Throws no-inverse when a has no multiplicative inverse.
  Label inv(Label a) const;
  bool has_inverse(Label a) const { return inv_.at(check(a)) >= 0; }

  const std::vector<Label>& add_table() const noexcept { return add_; }
  const std::vector<Label>& mul_table() const noexcept { return mul_; }

  /// Base-p digit t of a label (galois); for mod-n only t = 0 is meaningful.
  int digit(Label a, int t) const;

  /// γ^x as an exact root of unity.
  Phase character(Label x) const;
  std::complex<double> chi(Label x) const { return character(x).value(); }
  /// Order of the character's image: N for mod-n, p for galois.
  int character_order() const noexcept { return kind_ == Construction::mod_n ? size_ : p_; }
  /// The integer r with γ^x = e^{2πi·r/character_order()}.
  int character_exponent(Label x) const;

  /// The phase φ_c(q) attached to state q of the c-th phased computational
  /// basis: a square root of γ^{c⊙q⊙q} whose branch is fixed so that
  /// q ↦ φ_c(q) is a quadratic form with polarization γ^{c⊙q⊙t}:
  ///
  ///   mod-n:       e^{iπ·c·q·(q+N)/N}                (c, q as integers)
  ///   galois p>2:  γ^{c⊙q⊙q⊙2⁻¹}
  ///   galois p=2:  i^{Q_c(q)},  Q_c(q) = Σ_t q_t·d0(c·e_t²)
  ///                                   + 2·Σ_{s<t} q_s q_t·d0(c·e_s·e_t)  (mod 4)
  ///
  /// The polarization property is what makes the bases built from it
  /// mutually unbiased over a field.
  Phase quadratic_phase(Label c, Label q) const;

  bool is_field() const noexcept { return is_field_; }

  bool operator==(const FiniteStructure& o) const {
    return size_ == o.size_ && kind_ == o.kind_ && p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
  }

 private:
  FiniteStructure() = default;
  void finish();

  std::size_t index(Label a, Label b) const {
    return static_cast<std::size_t>(check(a)) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(check(b));
  }
  Label check(Label a) const;

  int size_ = 0;
  Construction kind_ = Construction::mod_n;
  int p_ = 0;
  int m_ = 1;
  std::vector<int> modulus_;
  std::vector<Label> add_;
  std::vector<Label> mul_;
  std::vector<Label> neg_;
  std::vector<Label> inv_;  // -1 where no inverse exists
  bool is_field_ = false;
};

/// The additive character tabulated over all labels.
struct Character {
  int order = 1;                             // values are order-th roots of unity
  std::vector<int> exponents;                // value[x] = e^{2πi·exponents[x]/order}
  std::vector<std::complex<double>> values;
};

Character character(const FiniteStructure& s);

struct AxiomReport {
  bool additive_group = false;
  bool commutative_addition = false;
  bool commutative_multiplication = false;
  bool associative_multiplication = false;
  bool multiplicative_identity = false;
  bool distributive = false;
  bool zero_divisor_free = false;
  bool multiplicative_inverses = false;
  /// First zero divisor pair found, when zero_divisor_free is false.
  std::optional<std::pair<Label, Label>> zero_divisor;
  bool is_field = false;
  bool is_ring() const {
    return additive_group && commutative_addition && commutative_multiplication && associative_multiplication &&
           multiplicative_identity && distributive;
  }
};

/// Brute-force table scan; never throws.
AxiomReport verify_axioms(const FiniteStructure& s);

bool is_prime(int n) noexcept;
/// (p, m) with n = p^m, or nullopt when n is not a prime power.
std::optional<std::pair<int, int>> prime_power(int n) noexcept;

}  // namespace mubkit
