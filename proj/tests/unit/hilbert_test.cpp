#include <gtest/gtest.h>

#include "syzygy/hilbert.hpp"
#include "test_util.hpp"

namespace syzygy {
namespace {

using test::fp_ring;
using test::ideal;

TEST(Hilbert, TwistedCubic) {
  auto R = fp_ring(4);
  auto G = buchberger(ideal(R, {"z0*z2-z1^2", "z1*z3-z2^2", "z0*z3-z1*z2"}));
  auto h = hilbert_data(G);
  EXPECT_EQ(h.dimension, 2u);
  EXPECT_EQ(h.degree, 3);
  EXPECT_EQ(h.codimension(), 2u);
  // 3m + 1
  ASSERT_EQ(h.hilbert_polynomial.size(), 2u);
  EXPECT_EQ(h.hilbert_polynomial[0], 1);
  EXPECT_EQ(h.hilbert_polynomial[1], 3);
  EXPECT_EQ(graded_piece_basis(G, 0).size(), 1u);
  EXPECT_EQ(graded_piece_basis(G, 1).size(), 4u);
  EXPECT_EQ(graded_piece_basis(G, 2).size(), 7u);
  for (int m = 0; m < 6; ++m)
    EXPECT_EQ(h.hilbert_function(m), static_cast<std::int64_t>(graded_piece_basis(G, m).size()));
}

TEST(Hilbert, ZeroIdealIsProjectiveSpace) {
  auto R = fp_ring(3);
  auto h = hilbert_data(buchberger(Ideal<PrimeField>(R, {})));
  EXPECT_EQ(h.dimension, 3u);
  EXPECT_EQ(h.degree, 1);
  EXPECT_EQ(h.numerator, (std::vector<std::int64_t>{1}));
}

TEST(Hilbert, UnitIdealIsEmpty) {
  auto R = fp_ring(2);
  auto G = buchberger(Ideal<PrimeField>(R, {Polynomial<PrimeField>::constant(R, 1)}));
  EXPECT_THROW(hilbert_data(G), EmptyScheme);
}

TEST(Hilbert, CompleteIntersectionNumerator) {
  // (x^2, y^3) in 3 variables: (1 - z^2)(1 - z^3)
  auto n = monomial_ideal_numerator({Monomial::variable(0, 2), Monomial::variable(1, 3)}, 3);
  EXPECT_EQ(n, (std::vector<std::int64_t>{1, 0, -1, -1, 0, 1}));
}

TEST(Hilbert, NumeratorMatchesBruteForceCount) {
  // independent oracle: count standard monomials degree by degree
  std::vector<Monomial> gens;
  std::vector<std::vector<int>> raw = {{2, 1, 0, 0}, {0, 2, 1, 0}, {1, 0, 0, 2}, {0, 0, 3, 0}, {1, 1, 1, 1}};
  for (const auto& e : raw) gens.emplace_back(std::span<const int>(e));
  auto num = monomial_ideal_numerator(gens, 4);
  HilbertData h;
  h.nvars = 4;
  h.numerator = num;
  for (unsigned m = 0; m < 12; ++m) {
    std::int64_t count = 0;
    for (const auto& mono : monomials_of_degree(4, m)) {
      bool standard = true;
      for (const auto& g : gens) standard = standard && !g.divides(mono);
      count += standard;
    }
    EXPECT_EQ(h.hilbert_function(m), count) << "degree " << m;
  }
}

TEST(Hilbert, PointsHaveConstantPolynomial) {
  auto R = fp_ring(3);
  // three coordinate points of P^2
  auto G = buchberger(ideal(R, {"z0*z1", "z0*z2", "z1*z2"}));
  auto h = hilbert_data(G);
  EXPECT_EQ(h.dimension, 1u);
  EXPECT_EQ(h.degree, 3);
  EXPECT_EQ(h.hilbert_polynomial_at(0), 3);
}

}  // namespace
}  // namespace syzygy
