#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace coxbound {

/// Exact non-negative dyadic rational num / 2^exp, kept in lowest terms.
/// Exponents are capped at 62 so that sums of the proxy-metric terms stay exact.
class Dyadic {
 public:
  static constexpr unsigned kMaxExponent = 62;

  constexpr Dyadic() = default;
  /// The integer n.
  static Dyadic integer(std::uint64_t n) { return Dyadic(n, 0); }
  /// 2^-k.
  static Dyadic inverse_power_of_two(unsigned k);
  /// num / 2^exp.
  static Dyadic of(std::uint64_t num, unsigned exp) { return Dyadic(num, exp); }

  std::uint64_t numerator() const noexcept { return num_; }
  unsigned exponent() const noexcept { return exp_; }
  bool is_zero() const noexcept { return num_ == 0; }

  Dyadic& operator+=(const Dyadic& other);
  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  /// Decimal rendering with exactly `digits` fractional digits, rounded half up.
  std::string to_decimal(unsigned digits = 12) const;
  double to_double() const;

 private:
  Dyadic(std::uint64_t num, unsigned exp);
  void normalize();

  std::uint64_t num_ = 0;
  unsigned exp_ = 0;
};

}  // namespace coxbound
