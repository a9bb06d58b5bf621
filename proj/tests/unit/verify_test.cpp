#include <gtest/gtest.h>

#include "syzygy/verify.hpp"

namespace syzygy {
namespace {

const PrimeField kF;

TEST(Verify, ExtremalStrandValues) {
  EXPECT_EQ(extremal_strand(4, 1), 8);
  EXPECT_EQ(extremal_strand(4, 2), 12);
  EXPECT_EQ(extremal_strand(4, 3), 3);
  EXPECT_EQ(extremal_strand(3, 1), 4);
  EXPECT_EQ(extremal_strand(3, 2), 2);
  EXPECT_EQ(binomial(5, 7), 0);
  EXPECT_EQ(binomial(6, 3), 20);
}

TEST(Verify, Classification) {
  EXPECT_EQ(classify(3, 4, 1, 2, true, std::nullopt), Classification::VMD);
  EXPECT_EQ(classify(4, 6, 1, 2, true, 1), Classification::DelPezzo);
  EXPECT_EQ(classify(3, 5, 1, 1, false, 0), Classification::VamdDepthNA0);
  EXPECT_EQ(classify(3, 6, 1, 2, true, 1), Classification::AcmDegreeE3);
  EXPECT_EQ(classify(3, 6, 1, 1, false, 1), Classification::Other);
}

TEST(Verify, AnalyzeMonomialCurve) {
  auto r = analyze(almost_minimal_curve(kF, 3), 1);
  EXPECT_EQ(r.n, 1);
  EXPECT_EQ(r.e, 3);
  EXPECT_EQ(r.degree, 5);
  EXPECT_EQ(r.depth, 1);
  EXPECT_EQ(r.classification, Classification::VamdDepthNA0);
  EXPECT_EQ(r.sectional_genus, 0);
  for (auto check : {bound_A(r), classify_extremal_B(r), alternating_sum_check(r), linear_strand_check(r),
                     table_shape_check(r), quadric_count_check(r)})
    EXPECT_TRUE(check.pass) << check.check << ": " << check.actual;
}

TEST(Verify, StrictBoundOnBalancedScroll) {
  auto r = analyze(curve_on_scroll(kF, 2, 2, 1, 2, 1), 1);
  EXPECT_EQ(r.betti.at(2, 1), 11);
  auto a = bound_A(r);
  EXPECT_TRUE(a.pass);
  EXPECT_TRUE(classify_extremal_B(r).pass);
}

TEST(Verify, TopStrandWitnesses) {
  auto general = analyze(general_points(kF, 4, 8, 1), 1, false);
  auto on_rnc = analyze(points_on_rnc(kF, 4, 8, 1), 1, false);
  EXPECT_EQ(general.betti.at(3, 1), 0);
  EXPECT_EQ(on_rnc.betti.at(3, 1), 3);
  EXPECT_TRUE(dichotomy_beta_e_minus_1(general).pass);
  EXPECT_TRUE(dichotomy_beta_e_minus_1(on_rnc).pass);
}

TEST(Verify, DivisorClasses) {
  EXPECT_EQ(infer_divisor_class(almost_minimal_curve(kF, 3).ideal, ScrollSpec({1, 2}), 1), DivisorClass::hf(1, 2));
  EXPECT_EQ(infer_divisor_class(curve_on_scroll(kF, 1, 2, 2, 0, 1).ideal, ScrollSpec({1, 2}), 1),
            DivisorClass::hf(2, 0));
  EXPECT_EQ(infer_divisor_class(curve_on_scroll(kF, 2, 2, 2, -1, 1).ideal, ScrollSpec({2, 2}), 1),
            DivisorClass::hf(2, -1));
  // general points do not lie on the quadric
  EXPECT_THROW(infer_divisor_class(general_points(kF, 3, 5, 1).ideal, ScrollSpec({1, 1}), 1), PreconditionFailed);
}

TEST(Verify, ProjectionAndSection) {
  auto c = almost_minimal_curve(kF, 3);
  auto r = analyze(c, 1);
  EXPECT_TRUE(inner_projection_inequality(c, r, 1).pass);
  auto s = scroll(kF, ScrollSpec({1, 3}));
  auto rs = analyze(s, 1);
  EXPECT_TRUE(lefschetz_check(s, rs, 1).pass);
}

TEST(Verify, BrokenDivisorAndPoints) {
  EXPECT_TRUE(broken_divisor_check(3, 1).pass);
  EXPECT_TRUE(points_n2p_check(4, 2, 1).pass);
}

TEST(Verify, SelectionFlag) {
  EXPECT_EQ(checks_for("A"), (std::set<std::string>{"quadratic-strand-bound"}));
  EXPECT_EQ(checks_for("all").size(), all_checks().size());
  EXPECT_THROW(checks_for("Z"), std::invalid_argument);
}

TEST(Verify, SuiteIsSortedAndDeterministic) {
  SuiteConfig config;
  config.e_min = 3;
  config.e_max = 3;
  config.checks = checks_for("A");
  config.threads = 1;
  auto a = run_suite(config);
  ASSERT_FALSE(a.empty());
  for (std::size_t i = 1; i < a.size(); ++i)
    EXPECT_LE(std::tie(a[i - 1].check, a[i - 1].instance), std::tie(a[i].check, a[i].instance));
  config.threads = 2;
  auto b = run_suite(config);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].instance, b[i].instance);
    EXPECT_EQ(a[i].actual, b[i].actual);
    EXPECT_TRUE(a[i].pass) << a[i].instance << ": " << a[i].actual;
  }
}

TEST(Verify, TooSmallCodimensionIsAnError) {
  SuiteConfig config;
  config.e_min = 2;
  config.e_max = 2;
  config.checks = checks_for("B");
  auto r = run_suite(config);
  ASSERT_FALSE(r.empty());
  EXPECT_TRUE(r[0].error.has_value());
}

}  // namespace
}  // namespace syzygy
