#include <gtest/gtest.h>

#include <random>

#include "coxbound/dyadic.hpp"
#include "coxbound/error.hpp"

using coxbound::Dyadic;

namespace {

__extension__ using u128 = unsigned __int128;

// Oracle: the value scaled by 2^62 as a 128-bit integer.
u128 scaled(const Dyadic& d) { return static_cast<u128>(d.numerator()) << (62 - d.exponent()); }

}  // namespace

TEST(Dyadic, NormalizesToLowestTerms) {
  const Dyadic d = Dyadic::of(12, 4);
  EXPECT_EQ(d.numerator(), 3u);
  EXPECT_EQ(d.exponent(), 2u);
  EXPECT_EQ(Dyadic::of(0, 9), Dyadic{});
  EXPECT_EQ(Dyadic::of(8, 3), Dyadic::integer(1));
}

TEST(Dyadic, GeometricSum) {
  Dyadic total;
  for (unsigned i = 1; i <= 16; ++i) total += Dyadic::inverse_power_of_two(i);
  EXPECT_EQ(total, Dyadic::of(65535, 16));
  EXPECT_EQ(total.to_decimal(), "0.999984741211");
}

TEST(Dyadic, DecimalRounding) {
  EXPECT_EQ(Dyadic::integer(3).to_decimal(), "3.000000000000");
  EXPECT_EQ(Dyadic::of(1, 1).to_decimal(2), "0.50");
  EXPECT_EQ(Dyadic::of(1, 3).to_decimal(2), "0.13");  // 0.125 rounds half up
  EXPECT_EQ(Dyadic::of(1, 40).to_decimal(), "0.000000000001");  // 9.09e-13
  EXPECT_EQ(Dyadic::of(1, 41).to_decimal(), "0.000000000000");  // 4.5e-13
  EXPECT_EQ(Dyadic::of(1, 1).to_decimal(0), "1");
  EXPECT_EQ(Dyadic::of((std::uint64_t{1} << 62) - 1, 62).to_decimal(), "1.000000000000");
}

TEST(Dyadic, DepthLimit) {
  EXPECT_THROW(Dyadic::inverse_power_of_two(63), coxbound::Error);
  EXPECT_NO_THROW(Dyadic::inverse_power_of_two(62));
}

TEST(Dyadic, SumAndOrderMatchOracle) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<unsigned> exp(0, 62);
  // Values below 1, so that sums stay representable at exponent 62.
  const auto draw = [&] {
    const unsigned e = exp(rng);
    return Dyadic::of(e == 0 ? 0 : rng() >> (64 - e), e);
  };
  for (int trial = 0; trial < 2000; ++trial) {
    const Dyadic a = draw();
    const Dyadic b = draw();
    EXPECT_EQ(scaled(a + b), scaled(a) + scaled(b));
    EXPECT_EQ(a < b, scaled(a) < scaled(b));
    EXPECT_EQ(a == b, scaled(a) == scaled(b));
  }
}
