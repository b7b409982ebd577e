#pragma once

#include <complex>
#include <cstdint>
#include <numeric>

namespace mubkit {

/// An exact root of unity e^{2πi·num/den}, kept in lowest terms with
/// 0 <= num < den.
class Phase {
 public:
  constexpr Phase() = default;
  constexpr Phase(std::int64_t num, std::int64_t den) : num_(num), den_(den) { reduce(); }

  static constexpr Phase one() { return {}; }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  constexpr Phase operator*(const Phase& o) const {
    const std::int64_t l = std::lcm(den_, o.den_);
    return {num_ * (l / den_) + o.num_ * (l / o.den_), l};
  }
  constexpr Phase& operator*=(const Phase& o) { return *this = *this * o; }

  constexpr Phase conj() const { return {-num_, den_}; }

  constexpr Phase pow(std::int64_t e) const { return {num_ * e, den_}; }

  /// The principal n-th root: e^{2πi·num/(den·n)}.
  constexpr Phase root(std::int64_t n) const { return {num_, den_ * n}; }

  constexpr bool operator==(const Phase&) const = default;

  /// Quarter turns are returned exactly so that ±1, ±i carry no rounding.
  std::complex<double> value() const {
    if ((4 * num_) % den_ == 0) {
      switch ((4 * num_) / den_) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
      }
    }
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::polar(1.0, two_pi * static_cast<double>(num_) / static_cast<double>(den_));
  }

 private:
  constexpr void reduce() {
    num_ %= den_;
    if (num_ < 0) num_ += den_;
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace mubkit
