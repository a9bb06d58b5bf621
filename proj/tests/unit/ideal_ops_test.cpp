#include <gtest/gtest.h>

#include "syzygy/ideal_ops.hpp"
#include "test_util.hpp"

namespace syzygy {
namespace {

using test::fp_ring;
using test::ideal;
using test::poly;
using test::q_ring;

TEST(IdealOps, IntersectCoordinateHyperplanes) {
  auto R = q_ring(2);
  auto I = ideal_intersect(ideal(R, {"z0"}), ideal(R, {"z1"}));
  EXPECT_TRUE(ideals_equal(I, ideal(R, {"z0*z1"})));
}

TEST(IdealOps, IntersectWithItself) {
  auto R = fp_ring(4);
  auto I = ideal(R, {"z0*z2-z1^2", "z1*z3-z2^2", "z0*z3-z1*z2"});
  EXPECT_TRUE(ideals_equal(ideal_intersect(I, I), I));
}

TEST(IdealOps, QuotientByVariable) {
  auto R = q_ring(2);
  auto Q = ideal_quotient(ideal(R, {"z0*z1"}), poly(R, "z0"));
  EXPECT_TRUE(ideals_equal(Q, ideal(R, {"z1"})));
}

TEST(IdealOps, SaturateRemovesEmbeddedFactor) {
  auto R = q_ring(2);
  auto S = saturate(ideal(R, {"z0^2*z1"}), ideal(R, {"z0"}));
  EXPECT_TRUE(ideals_equal(S, ideal(R, {"z1"})));
}

TEST(IdealOps, SaturatedPrimeUnchangedByIrrelevant) {
  auto R = fp_ring(4);
  auto I = ideal(R, {"z0*z2-z1^2", "z1*z3-z2^2", "z0*z3-z1*z2"});
  EXPECT_TRUE(ideals_equal(saturate(I, irrelevant_ideal(R)), I));
}

TEST(IdealOps, SaturationIsIdempotentAndContainsInput) {
  auto R = fp_ring(3);
  auto I = ideal(R, {"z0^2*z1-z0*z2^2", "z0^3"});
  auto J = irrelevant_ideal(R);
  auto S = saturate(I, J);
  EXPECT_TRUE(ideal_subset(I, S));
  EXPECT_TRUE(ideals_equal(saturate(S, J), S));
}

TEST(IdealOps, EliminateTrivial) {
  auto R = q_ring(2);
  auto E = eliminate(ideal(R, {"z0-z1"}), 1);
  EXPECT_TRUE(E.is_zero());
  EXPECT_THROW(eliminate(ideal(R, {"z0-z1"}), 2), std::out_of_range);
}

TEST(IdealOps, EliminationLandsInOriginalIdeal) {
  auto R = fp_ring(5);
  auto I = ideal(R, {"z0*z2-z1^2", "z0*z3-z1*z4", "z2*z4-z3^2+z1*z4"});
  auto E = eliminate(I, 1);
  auto G = buchberger(I);
  std::vector<int> map = {1, 2, 3, 4};
  for (const auto& g : E.generators()) EXPECT_TRUE(G.contains(g.rename(R, map)));
}

TEST(IdealOps, ImplicitizeConic) {
  auto src = make_ring(RationalField(), 2, MonomialOrder::grevlex(), {"s", "t"});
  Parameterization<RationalField> p{src, {{1}, {1}}, {{0, 1}},
                                    {poly(src, "s^2"), poly(src, "s*t"), poly(src, "t^2")}, {}};
  auto R = q_ring(3);
  auto I = implicitize(p, R);
  EXPECT_TRUE(ideals_equal(I, ideal(R, {"z0*z2-z1^2"})));
}

TEST(IdealOps, ImplicitizeTwistedCubic) {
  auto src = make_ring(PrimeField(), 2, MonomialOrder::grevlex(), {"s", "t"});
  Parameterization<PrimeField> p{src, {{1}, {1}}, {{0, 1}},
                                 {poly(src, "s^3"), poly(src, "s^2*t"), poly(src, "s*t^2"), poly(src, "t^3")},
                                 {}};
  auto R = fp_ring(4);
  EXPECT_TRUE(ideals_equal(implicitize(p, R), ideal(R, {"z0*z2-z1^2", "z1*z3-z2^2", "z0*z3-z1*z2"})));
  EXPECT_TRUE(ideals_equal(implicitize(p, R, false), implicitize(p, R, true)));
}

TEST(IdealOps, ImplicitizeRejectsMixedDegrees) {
  auto src = make_ring(PrimeField(), 2, MonomialOrder::grevlex(), {"s", "t"});
  Parameterization<PrimeField> p{src, {{1}, {1}}, {{0, 1}}, {poly(src, "s^2"), poly(src, "t")}, {}};
  EXPECT_THROW(implicitize(p, fp_ring(2)), InconsistentMultidegree);
}

}  // namespace
}  // namespace syzygy
