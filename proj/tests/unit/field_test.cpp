#include <gtest/gtest.h>

#include "syzygy/field.hpp"
#include "syzygy/random.hpp"

namespace syzygy {
namespace {

TEST(PrimeField, RejectsNonPrimes) {
  EXPECT_THROW(PrimeField(1), std::invalid_argument);
  EXPECT_THROW(PrimeField(32001), std::invalid_argument);
  EXPECT_NO_THROW(PrimeField(2));
  EXPECT_NO_THROW(PrimeField(2147483647u));
}

TEST(PrimeField, InverseAgreesWithBruteForce) {
  PrimeField f(101);
  for (std::uint32_t a = 1; a < 101; ++a) {
    std::uint32_t expect = 0;
    for (std::uint32_t b = 1; b < 101; ++b)
      if (a * b % 101 == 1) expect = b;
    EXPECT_EQ(f.inv(a), expect);
  }
  EXPECT_THROW(f.inv(0), DivisionByZero);
  EXPECT_FALSE(f.try_inv(0).has_value());
}

TEST(PrimeField, ArithmeticNearTheTopOfTheRange) {
  PrimeField f(2147483647u);
  const std::uint32_t m = 2147483646u;
  EXPECT_EQ(f.add(m, m), m - 1);
  EXPECT_EQ(f.mul(m, m), 1u);
  EXPECT_EQ(f.neg(1), m);
  EXPECT_EQ(f.sub(0, 1), m);
}

TEST(PrimeField, FromRatio) {
  PrimeField f;
  EXPECT_EQ(f.mul(f.from_ratio(1, 2), 2), 1u);
  EXPECT_EQ(f.from_ratio(-3, 1), 32000u);
  EXPECT_EQ(f.from_int(-1), 32002u);
  EXPECT_THROW(f.from_ratio(1, 32003), DivisionByZero);
  EXPECT_EQ(f.format(32002), "-1");
  EXPECT_EQ(f.symmetric(16002), -16001);
}

TEST(RationalField, Arithmetic) {
  RationalField q;
  auto h = q.from_ratio(1, 2);
  EXPECT_EQ(q.add(h, h), q.one());
  EXPECT_EQ(q.from_ratio(2, -4), mpq_class(-1, 2));
  EXPECT_EQ(q.inv(mpq_class(-2, 3)), mpq_class(-3, 2));
  EXPECT_THROW(q.inv(0), DivisionByZero);
  EXPECT_EQ(q.format(mpq_class(5, 7)), "5/7");
}

TEST(RandomElements, DeterministicPerSeed) {
  PrimeField f;
  Rng a(42), b(42);
  for (int i = 0; i < 20; ++i) {
    auto x = f.random_nonzero(a);
    EXPECT_EQ(x, f.random_nonzero(b));
    EXPECT_NE(x, 0u);
  }
  RationalField q;
  Rng c(7);
  for (int i = 0; i < 50; ++i) EXPECT_LE(abs(q.random(c)), RationalField::kRandomBound);
}

TEST(FieldSpec, Text) {
  EXPECT_EQ(FieldSpec::rationals().to_string(), "Q");
  EXPECT_EQ(FieldSpec::prime_field(7).to_string(), "7");
  EXPECT_TRUE(is_prime_number(32003));
  EXPECT_FALSE(is_prime_number(32005));
}

}  // namespace
}  // namespace syzygy
