#include <gtest/gtest.h>

#include "syzygy/constructions.hpp"
#include "syzygy/invariants.hpp"
#include "test_util.hpp"

namespace syzygy {
namespace {

const PrimeField kF;

DerivedInvariants invariants_of(const Construction<PrimeField>& c) {
  auto g = buchberger(c.ideal);
  return derived_invariants(betti_table(g), hilbert_data(g));
}

TEST(Invariants, TwistedCubicIsAcm) {
  auto d = invariants_of(rational_normal_curve(kF, 3));
  EXPECT_EQ(d.pd, 2);
  EXPECT_EQ(d.depth, 2);
  EXPECT_EQ(d.reg_module, 1);
  EXPECT_FALSE(d.gl_index.has_value());
  EXPECT_TRUE(d.acm);
}

TEST(Invariants, ProjectedCurveHasDepthOne) {
  auto d = invariants_of(almost_minimal_curve(kF, 3));
  EXPECT_EQ(d.depth, 1);
  EXPECT_FALSE(d.acm);
  EXPECT_EQ(d.gl_index, 0);
  EXPECT_EQ(d.reg_module, 2);
}

TEST(Invariants, IncompleteTableRejected) {
  auto g = buchberger(rational_normal_curve(kF, 3).ideal);
  BettiTable partial(4, {{{0, 0}, 1}, {{1, 1}, 3}});
  EXPECT_THROW(derived_invariants(partial, hilbert_data(g)), IncompleteTable);
}

TEST(SectionalGenus, KnownCurvesAndSurfaces) {
  EXPECT_EQ(sectional_genus(buchberger(rational_normal_curve(kF, 4).ideal), 1), 0);
  EXPECT_EQ(sectional_genus(buchberger(elliptic_normal_curve(kF, 4).ideal), 1), 1);
  EXPECT_EQ(sectional_genus(buchberger(curve_on_scroll(kF, 1, 2, 2, 0, 1).ideal), 1), 2);
  // surfaces: scrolls have rational sections, the plane cubic cone has elliptic ones
  EXPECT_EQ(sectional_genus(buchberger(scroll(kF, ScrollSpec({1, 2})).ideal), 1), 0);
  auto r = test::fp_ring(4);
  EXPECT_EQ(sectional_genus(buchberger(test::ideal(r, {"z0^3+z1^3+z2^3"})), 1), 1);
}

TEST(SectionalGenus, PointsRejected) {
  EXPECT_THROW(sectional_genus(buchberger(general_points(kF, 3, 5, 1).ideal), 1), std::invalid_argument);
}

}  // namespace
}  // namespace syzygy
