#include <gtest/gtest.h>

#include "resolution_oracle.hpp"

namespace syzygy {
namespace {

using oracle::Poly;

TEST(ResolutionOracle, Conic) {
  oracle::Resolver r(3, 32003, 6);
  Poly q{{{0, 2, 0}, 1}, {{1, 0, 1}, 32002}};
  auto b = r.betti({q});
  EXPECT_EQ(b, (std::map<std::pair<int, int>, std::int64_t>{{{0, 0}, 1}, {{1, 1}, 1}}));
}

TEST(ResolutionOracle, TwistedCubic) {
  oracle::Resolver r(4, 32003, 6);
  const std::uint64_t m1 = 32002;
  std::vector<Poly> gens{{{{1, 0, 1, 0}, 1}, {{0, 2, 0, 0}, m1}},
                         {{{0, 1, 0, 1}, 1}, {{0, 0, 2, 0}, m1}},
                         {{{1, 0, 0, 1}, 1}, {{0, 1, 1, 0}, m1}}};
  auto b = r.betti(gens);
  EXPECT_EQ(b, (std::map<std::pair<int, int>, std::int64_t>{{{0, 0}, 1}, {{1, 1}, 3}, {{2, 1}, 2}}));
}

TEST(ResolutionOracle, CompleteIntersectionOfTwoQuadrics) {
  oracle::Resolver r(3, 32003, 6);
  std::vector<Poly> gens{{{{2, 0, 0}, 1}}, {{{0, 2, 0}, 1}}};
  auto b = r.betti(gens);
  EXPECT_EQ(b, (std::map<std::pair<int, int>, std::int64_t>{{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}}));
}

}  // namespace
}  // namespace syzygy
