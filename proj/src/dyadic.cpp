#include "coxbound/dyadic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "coxbound/error.hpp"

namespace coxbound {

namespace {

__extension__ using u128 = unsigned __int128;

// num * 2^shift, throwing if it leaves 64 bits.
std::uint64_t shifted(std::uint64_t num, unsigned shift) {
  if (num == 0) return 0;
  if (shift >= 64 || std::countl_zero(num) < static_cast<int>(shift)) {
    throw Error(ErrorKind::DepthTooLarge, "dyadic value does not fit in 64 bits");
  }
  return num << shift;
}

}  // namespace

Dyadic::Dyadic(std::uint64_t num, unsigned exp) : num_(num), exp_(exp) {
  normalize();
  if (exp_ > kMaxExponent) throw Error(ErrorKind::DepthTooLarge, "exponent " + std::to_string(exp) + " exceeds 62");
}

void Dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  const auto tz = static_cast<unsigned>(std::countr_zero(num_));
  const unsigned drop = tz < exp_ ? tz : exp_;
  num_ >>= drop;
  exp_ -= drop;
}

Dyadic Dyadic::inverse_power_of_two(unsigned k) { return Dyadic(1, k); }

Dyadic& Dyadic::operator+=(const Dyadic& other) {
  const unsigned exp = exp_ > other.exp_ ? exp_ : other.exp_;
  const std::uint64_t a = shifted(num_, exp - exp_);
  const std::uint64_t b = shifted(other.num_, exp - other.exp_);
  if (a > ~b) throw Error(ErrorKind::DepthTooLarge, "dyadic sum overflows");
  num_ = a + b;
  exp_ = exp;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const unsigned exp = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
  const u128 lhs = static_cast<u128>(a.num_) << (exp - a.exp_);
  const u128 rhs = static_cast<u128>(b.num_) << (exp - b.exp_);
  return lhs <=> rhs;
}

std::string Dyadic::to_decimal(unsigned digits) const {
  const std::uint64_t whole = exp_ == 0 ? num_ : num_ >> exp_;
  const std::uint64_t frac = exp_ == 0 ? 0 : num_ & ((std::uint64_t{1} << exp_) - 1);
  // Scaled fraction: round(frac * 10^digits / 2^exp), half up.
  digits = std::min(digits, 18u);
  u128 scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  u128 scaled = static_cast<u128>(frac) * scale;
  std::uint64_t int_part = whole;
  u128 q = scaled;
  if (exp_ > 0) {
    q = scaled >> exp_;
    const u128 rem = scaled - (q << exp_);
    if (rem >= (u128{1} << (exp_ - 1))) ++q;
  }
  if (q >= scale) {
    ++int_part;
    q -= scale;
  }
  std::string out = std::to_string(int_part);
  if (digits == 0) return out;
  std::string tail(digits, '0');
  for (unsigned i = digits; i-- > 0;) {
    tail[i] = static_cast<char>('0' + static_cast<int>(q % 10));
    q /= 10;
  }
  return out + "." + tail;
}

double Dyadic::to_double() const { return std::ldexp(static_cast<double>(num_), -static_cast<int>(exp_)); }

}  // namespace coxbound
