#include "mubkit/galois.hpp"

#include <algorithm>
#include <numeric>

#include "mubkit/error.hpp"

namespace mubkit {

std::string_view to_string(Construction c) noexcept {
  return c == Construction::mod_n ? "mod-n" : "galois";
}

std::optional<Construction> parse_construction(std::string_view text) noexcept {
  if (text == "mod-n") return Construction::mod_n;
  if (text == "galois") return Construction::galois;
  return std::nullopt;
}

bool is_prime(int n) noexcept {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<int, int>> prime_power(int n) noexcept {
  if (n < 2) return std::nullopt;
  int p = 2;
  while (n % p != 0) ++p;
  int m = 0;
  while (n % p == 0) {
    n /= p;
    ++m;
  }
  if (n != 1) return std::nullopt;
  return std::pair{p, m};
}

namespace {

using Poly = std::vector<int>;  // coefficients, index = power of x

// Remainder of a modulo the monic b, coefficients mod p.
Poly poly_mod(Poly a, const Poly& b, int p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const int lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t t = 0; t <= db; ++t) {
        a[shift + t] = ((a[shift + t] - lead * b[t]) % p + p) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

bool divides(const Poly& divisor, const Poly& a, int p) {
  const Poly r = poly_mod(a, divisor, p);
  return std::all_of(r.begin(), r.end(), [](int c) { return c == 0; });
}

// Monic polynomial of the given degree whose lower coefficients are the
// base-p digits of `code`.
Poly monic_from_code(int code, int degree, int p) {
  Poly poly(static_cast<std::size_t>(degree) + 1, 0);
  for (int t = 0; t < degree; ++t) {
    poly[static_cast<std::size_t>(t)] = code % p;
    code /= p;
  }
  poly.back() = 1;
  return poly;
}

int ipow(int base, int e) {
  int r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// Lexicographic order over (c_{m-1}, ..., c_0) after the leading 1, which is
// the order of the code with the constant term as least significant digit.
Poly smallest_irreducible(int p, int m) {
  const int count = ipow(p, m);
  for (int code = 0; code < count; ++code) {
    Poly candidate = monic_from_code(code, m, p);
    bool irreducible = true;
    for (int d = 1; d <= m / 2 && irreducible; ++d) {
      for (int c = 0; c < ipow(p, d); ++c) {
        if (divides(monic_from_code(c, d, p), candidate, p)) {
          irreducible = false;
          break;
        }
      }
    }
    if (irreducible) return candidate;
  }
  throw Error(ErrorKind::domain_error, "no irreducible polynomial found");
}

}  // namespace

Label FiniteStructure::check(Label a) const {
  if (a < 0 || a >= size_) {
    throw Error(ErrorKind::index_error, "label " + std::to_string(a) + " outside 0.." + std::to_string(size_ - 1));
  }
  return a;
}

void FiniteStructure::finish() {
  const auto n = static_cast<std::size_t>(size_);
  neg_.assign(n, -1);
  inv_.assign(n, -1);
  for (Label a = 0; a < size_; ++a) {
    for (Label b = 0; b < size_; ++b) {
      if (add(a, b) == 0) neg_[static_cast<std::size_t>(a)] = b;
      if (mul(a, b) == 1) inv_[static_cast<std::size_t>(a)] = b;
    }
  }
  is_field_ = std::all_of(inv_.begin() + 1, inv_.end(), [](Label x) { return x >= 0; });
}

FiniteStructure FiniteStructure::ring_mod_n(int n) {
  if (n < 2) throw Error(ErrorKind::invalid_dimension, "dimension must be >= 2, got " + std::to_string(n));
  if (n > kMaxStructureSize) {
    throw Error(ErrorKind::too_large, "dimension " + std::to_string(n) + " exceeds " + std::to_string(kMaxStructureSize));
  }
  FiniteStructure s;
  s.size_ = n;
  s.kind_ = Construction::mod_n;
  s.p_ = n;
  s.m_ = 1;
  const auto nn = static_cast<std::size_t>(n);
  s.add_.resize(nn * nn);
  s.mul_.resize(nn * nn);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      s.add_[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
      s.mul_[static_cast<std::size_t>(a * n + b)] = (a * b) % n;
    }
  }
  s.finish();
  return s;
}

FiniteStructure FiniteStructure::galois_field(int p, int m) {
  if (!is_prime(p)) throw Error(ErrorKind::invalid_characteristic, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorKind::invalid_dimension, "extension degree must be >= 1");
  long long n = 1;
  for (int t = 0; t < m; ++t) {
    n *= p;
    if (n > kMaxStructureSize) {
      throw Error(ErrorKind::too_large, std::to_string(p) + "^" + std::to_string(m) + " exceeds " +
                                            std::to_string(kMaxStructureSize));
    }
  }

  FiniteStructure s;
  s.size_ = static_cast<int>(n);
  s.kind_ = Construction::galois;
  s.p_ = p;
  s.m_ = m;
  s.modulus_ = smallest_irreducible(p, m);

  const auto nn = static_cast<std::size_t>(n);
  s.add_.resize(nn * nn);
  s.mul_.resize(nn * nn);
  auto digits = [&](int x) { return monic_from_code(x, m, p); };  // trailing 1 ignored below
  auto encode = [&](const Poly& poly) {
    int x = 0;
    for (int t = m - 1; t >= 0; --t) x = x * p + (t < static_cast<int>(poly.size()) ? poly[static_cast<std::size_t>(t)] : 0);
    return x;
  };
  for (int a = 0; a < s.size_; ++a) {
    const Poly da = digits(a);
    for (int b = 0; b < s.size_; ++b) {
      const Poly db = digits(b);
      Poly sum(static_cast<std::size_t>(m), 0);
      for (int t = 0; t < m; ++t) {
        sum[static_cast<std::size_t>(t)] = (da[static_cast<std::size_t>(t)] + db[static_cast<std::size_t>(t)]) % p;
      }
      Poly prod(static_cast<std::size_t>(2 * m - 1), 0);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          prod[static_cast<std::size_t>(i + j)] =
              (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p;
      const auto idx = static_cast<std::size_t>(a * s.size_ + b);
      s.add_[idx] = encode(sum);
      s.mul_[idx] = encode(poly_mod(prod, s.modulus_, p));
    }
  }
  s.finish();
  return s;
}

FiniteStructure FiniteStructure::make(Construction kind, int n) {
  if (kind == Construction::mod_n) return ring_mod_n(n);
  if (n < 2) throw Error(ErrorKind::invalid_dimension, "dimension must be >= 2, got " + std::to_string(n));
  const auto pm = prime_power(n);
  if (!pm) throw Error(ErrorKind::invalid_dimension, std::to_string(n) + " is not a prime power");
  return galois_field(pm->first, pm->second);
}

Label FiniteStructure::inv(Label a) const {
  const Label r = inv_.at(static_cast<std::size_t>(check(a)));
  if (r < 0) throw Error(ErrorKind::no_inverse, std::to_string(a) + " has no multiplicative inverse");
  return r;
}

int FiniteStructure::digit(Label a, int t) const {
  check(a);
  if (kind_ == Construction::mod_n) return t == 0 ? a : 0;
  for (int k = 0; k < t; ++k) a /= p_;
  return a % p_;
}

int FiniteStructure::character_exponent(Label x) const {
  check(x);
  return kind_ == Construction::mod_n ? x : x % p_;
}

Phase FiniteStructure::character(Label x) const {
  return {character_exponent(x), character_order()};
}

Phase FiniteStructure::quadratic_phase(Label c, Label q) const {
  check(c);
  check(q);
  if (kind_ == Construction::mod_n) {
    const std::int64_t n = size_;
    return {static_cast<std::int64_t>(c) * q * (q + n), 2 * n};
  }
  if (p_ != 2) {
    const Label half = inv(2 % p_);
    return character(mul(mul(c, mul(q, q)), half));
  }
  // Characteristic 2: Z_4-valued quadratic form over the digit basis e_t = x^t.
  int form = 0;
  for (int t = 0; t < m_; ++t) {
    if (digit(q, t) == 0) continue;
    const Label et = 1 << t;
    form += digit(mul(c, mul(et, et)), 0);
    for (int r = 0; r < t; ++r) {
      if (digit(q, r) == 0) continue;
      form += 2 * digit(mul(c, mul(1 << r, et)), 0);
    }
  }
  return {form, 4};
}

Character character(const FiniteStructure& s) {
  Character c;
  c.order = s.character_order();
  for (Label x = 0; x < s.size(); ++x) {
    c.exponents.push_back(s.character_exponent(x));
    c.values.push_back(s.chi(x));
  }
  return c;
}

AxiomReport verify_axioms(const FiniteStructure& s) {
  AxiomReport r;
  const int n = s.size();

  r.additive_group = true;
  r.commutative_addition = true;
  r.commutative_multiplication = true;
  r.associative_multiplication = true;
  r.distributive = true;
  r.multiplicative_identity = true;
  for (Label a = 0; a < n; ++a) {
    if (s.add(a, 0) != a) r.additive_group = false;
    if (s.mul(a, 1) != a) r.multiplicative_identity = false;
    bool has_neg = false;
    for (Label b = 0; b < n; ++b) {
      if (s.add(a, b) == 0) has_neg = true;
      if (s.add(a, b) != s.add(b, a)) r.commutative_addition = false;
      if (s.mul(a, b) != s.mul(b, a)) r.commutative_multiplication = false;
      for (Label c = 0; c < n; ++c) {
        if (s.add(s.add(a, b), c) != s.add(a, s.add(b, c))) r.additive_group = false;
        if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c))) r.associative_multiplication = false;
        if (s.mul(a, s.add(b, c)) != s.add(s.mul(a, b), s.mul(a, c))) r.distributive = false;
      }
    }
    if (!has_neg) r.additive_group = false;
  }

  r.zero_divisor_free = true;
  r.multiplicative_inverses = true;
  for (Label a = 1; a < n; ++a) {
    bool has_inv = false;
    for (Label b = 1; b < n; ++b) {
      if (s.mul(a, b) == 1) has_inv = true;
      if (s.mul(a, b) == 0 && r.zero_divisor_free) {
        r.zero_divisor_free = false;
        r.zero_divisor = std::pair{a, b};
      }
    }
    if (!has_inv) r.multiplicative_inverses = false;
  }
  r.is_field = r.is_ring() && r.zero_divisor_free && r.multiplicative_inverses;
  return r;
}

}  // namespace mubkit
