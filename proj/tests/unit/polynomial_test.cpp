#include <gtest/gtest.h>

#include "syzygy/polynomial.hpp"
#include "syzygy/random.hpp"
#include "test_util.hpp"

namespace syzygy {
namespace {

using test::fp_ring;
using test::poly;
using test::q_ring;

TEST(Polynomial, TermsSortedAndMerged) {
  auto r = q_ring(3);
  auto f = poly(r, "z2^2 + z0*z1 + z0^2 - z0*z1");
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f.to_string(), "z0^2+z2^2");
  EXPECT_EQ(f.degree(), 2u);
  EXPECT_TRUE(f.is_homogeneous());
  EXPECT_FALSE(poly(r, "z0^2+z1").is_homogeneous());
}

TEST(Polynomial, RingAxiomsOnRandomForms) {
  auto r = fp_ring(4);
  Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    auto a = random_form(r, 2, rng), b = random_form(r, 1, rng), c = random_form(r, 3, rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Polynomial, ExactQuotient) {
  auto r = q_ring(3);
  auto f = poly(r, "z0^2-z1^2"), g = poly(r, "z0+z1");
  EXPECT_EQ(exact_quotient(f, g), poly(r, "z0-z1"));
  EXPECT_THROW(exact_quotient(f, poly(r, "z2")), std::domain_error);
}

TEST(Polynomial, EvaluateAndSubstitute) {
  auto r = q_ring(2);
  auto f = poly(r, "z0^3-2*z0*z1^2+1/2*z1^3");
  std::vector<mpq_class> pt{mpq_class(1), mpq_class(2)};
  EXPECT_EQ(f.evaluate(pt), mpq_class(1 - 8 + 4));
  auto t = q_ring(2);
  std::vector<Polynomial<RationalField>> images{poly(t, "z0^2"), poly(t, "z0*z1")};
  EXPECT_EQ(poly(r, "z0*z1").substitute(images, t), poly(t, "z0^3*z1"));
}

TEST(Polynomial, RenameIntoLargerRing) {
  auto r = fp_ring(2), s = fp_ring(4);
  std::vector<int> map{3, 1};
  EXPECT_EQ(poly(r, "z0*z1+z0^2").rename(s, map), poly(s, "z3*z1+z3^2"));
  std::vector<int> drop{-1, 0};
  EXPECT_THROW(poly(r, "z0").rename(s, drop), std::exception);
}

TEST(Polynomial, RingMismatchRejected) {
  auto a = poly(fp_ring(2), "z0"), b = poly(fp_ring(3), "z0");
  EXPECT_THROW(a + b, RingMismatch);
}

TEST(Polynomial, MonicAndScale) {
  auto r = fp_ring(2);
  auto f = poly(r, "3*z0+6*z1").monic();
  EXPECT_EQ(f, poly(r, "z0+2*z1"));
  EXPECT_TRUE(f.scale(0).is_zero());
}

TEST(Monomials, CountOfDegree) {
  // C(n+d-1, d)
  EXPECT_EQ(monomials_of_degree(4, 3).size(), 20u);
  EXPECT_EQ(monomials_of_degree(3, 0).size(), 1u);
  auto ms = monomials_of_degree(2, 2);
  ASSERT_EQ(ms.size(), 3u);
  EXPECT_EQ(ms[0][0], 2u);
  EXPECT_EQ(ms[2][1], 2u);
}

}  // namespace
}  // namespace syzygy
