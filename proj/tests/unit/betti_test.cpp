#include <gtest/gtest.h>

#include "syzygy/betti.hpp"
#include "test_util.hpp"

namespace syzygy {
namespace {

using test::fp_ring;
using test::ideal;
using test::q_ring;

const std::vector<std::string> kTwistedCubic = {"z0*z2-z1^2", "z1*z3-z2^2", "z0*z3-z1*z2"};

TEST(Betti, TwistedCubicEntries) {
  auto G = buchberger(ideal(fp_ring(4), kTwistedCubic));
  EXPECT_EQ(koszul_betti(G, 0, 0), 1);
  EXPECT_EQ(koszul_betti(G, 1, 1), 3);
  EXPECT_EQ(koszul_betti(G, 2, 1), 2);
  EXPECT_EQ(koszul_betti(G, 1, 2), 0);
}

TEST(Betti, TwistedCubicTableWithAndWithoutReduction) {
  auto G = buchberger(ideal(fp_ring(4), kTwistedCubic));
  BettiOptions plain;
  plain.reduce = false;
  auto a = betti_table(G, plain);
  auto b = betti_table(G);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.entries().size(), 3u);
  EXPECT_EQ(a.pd(), 2);
  EXPECT_EQ(a.depth(), 2);
  EXPECT_EQ(a.reg(), 1);
  EXPECT_FALSE(a.gl_index().has_value());
  EXPECT_EQ(a.alternating_sum(), hilbert_data(G).numerator);
}

TEST(Betti, RationalFieldAgrees) {
  auto Gq = buchberger(ideal(q_ring(4), kTwistedCubic));
  auto Gp = buchberger(ideal(fp_ring(4), kTwistedCubic));
  EXPECT_EQ(betti_table(Gq), betti_table(Gp));
}

TEST(Betti, ConeHasSameTable) {
  auto G = buchberger(ideal(fp_ring(4), kTwistedCubic));
  auto C = buchberger(ideal(fp_ring(5), kTwistedCubic));
  auto a = betti_table(G), b = betti_table(C);
  EXPECT_EQ(a.entries(), b.entries());
  EXPECT_EQ(b.depth(), a.depth() + 1);
}

TEST(Betti, NonCohenMacaulayRationalQuartic) {
  // smooth rational quartic in P^3: table 1; 1 ; 3 4 1 (rows 1 and 2)
  auto R = fp_ring(4);
  auto G = buchberger(ideal(R, {"z1*z2-z0*z3", "z2^3-z1*z3^2", "z0*z2^2-z1^2*z3", "z1^3-z0^2*z2"}));
  auto t = betti_table(G);
  EXPECT_EQ(t.at(1, 1), 1);
  EXPECT_EQ(t.at(1, 2), 3);
  EXPECT_EQ(t.at(2, 2), 4);
  EXPECT_EQ(t.at(3, 2), 1);
  EXPECT_EQ(t.depth(), 1);
  EXPECT_EQ(t.gl_index(), 0);
  EXPECT_EQ(t.alternating_sum(), hilbert_data(G).numerator);
}

TEST(Betti, DiagramLayout) {
  BettiTable t(4, {{{0, 0}, 1}, {{1, 1}, 3}, {{2, 1}, 2}});
  EXPECT_EQ(render_betti_diagram(t), "   0 1 2\n0: 1 . .\n1: . 3 2\n");
}

}  // namespace
}  // namespace syzygy
