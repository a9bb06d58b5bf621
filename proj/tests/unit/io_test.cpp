#include <gtest/gtest.h>

#include "syzygy/io.hpp"
#include "test_util.hpp"

namespace syzygy {
namespace {

TEST(IdealFile, TwistedCubic) {
  auto f = parse_ideal_file("ring 4 over 32003\nz0*z2-z1^2\nz1*z3-z2^2\nz0*z3-z1*z2\n");
  EXPECT_EQ(f.nvars(), 4u);
  EXPECT_EQ(f.field, FieldSpec::prime_field(32003));
  auto R = ring_of(f, PrimeField(32003));
  auto I = ideal_of(f, R);
  EXPECT_EQ(I.generators().size(), 3u);
}

TEST(IdealFile, NonHomogeneousNamesGenerator) {
  EXPECT_THROW(parse_ideal_file("ring 3 over Q\nx0+1"), ParseError);
  try {
    parse_ideal_file("ring 3 over Q\nz0+1");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("z0+1"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("homogeneous"), std::string::npos);
  }
}

TEST(IdealFile, XNamesAliasDefaultNames) {
  auto f = parse_ideal_file("ring 3 over Q\nx0*x2-z1^2");
  auto R = ring_of(f, RationalField());
  EXPECT_EQ(ideal_of(f, R).generators()[0], test::poly(R, "z0*z2-z1^2"));
}

TEST(IdealFile, UnknownVariableHasColumn) {
  try {
    parse_ideal_file("ring 2 over 7\nz0*z1 + w");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 9u);
  }
}

TEST(IdealFile, FractionOverPrimeField) {
  auto f = parse_ideal_file("ring 2 over 7\n1/2*z0");
  auto R = ring_of(f, PrimeField(7));
  auto I = ideal_of(f, R);
  EXPECT_EQ(I.generators()[0].leading_coeff(), 4u);  // 2 * 4 = 8 = 1 mod 7
}

TEST(IdealFile, DeclaredNamesOrderAndMetadata) {
  auto f = parse_ideal_file("# label: conic\nring 3 over Q\norder lex\nvars x,y,w\n# degree: 2\nx*w - (y)^2\n");
  EXPECT_EQ(f.names, (std::vector<std::string>{"x", "y", "w"}));
  EXPECT_EQ(f.order, MonomialOrder::lex());
  EXPECT_EQ(f.meta("label").value(), "conic");
  EXPECT_EQ(f.meta("degree").value(), "2");
  auto R = ring_of(f, RationalField());
  auto I = ideal_of(f, R);
  auto text = render_ideal_file(I, f.metadata);
  auto g = parse_ideal_file(text);
  EXPECT_TRUE(ideals_equal(ideal_of(g, ring_of(g, RationalField())), I));
}

TEST(IdealFile, HeaderErrors) {
  EXPECT_THROW(parse_ideal_file("ring 0 over Q\n"), ParseError);
  EXPECT_THROW(parse_ideal_file("ring 3 over 8\n"), ParseError);
  EXPECT_THROW(parse_ideal_file("z0\n"), ParseError);
  EXPECT_THROW(parse_ideal_file("ring 2 over Q\nvars a,a\n"), ParseError);
  EXPECT_THROW(parse_ideal_file("ring 2 over Q\nz0*(z1"), ParseError);
  EXPECT_THROW(parse_ideal_file("ring 2 over 5\n1/5*z0"), ParseError);
}

TEST(IdealFile, RoundTripRationalCoefficients) {
  auto R = test::q_ring(3);
  auto I = test::ideal(R, {"1/2*z0^2-3/7*z1*z2", "-z2^2+z0*z1"});
  auto f = parse_ideal_file(render_ideal_file(I));
  EXPECT_TRUE(ideals_equal(ideal_of(f, ring_of(f, RationalField())), I));
}

}  // namespace
}  // namespace syzygy
