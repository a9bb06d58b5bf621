#include <gtest/gtest.h>

#include "syzygy/matrix.hpp"
#include "syzygy/random.hpp"

namespace syzygy {
namespace {

// Textbook row reduction over Q, kept separate from the library code.
std::size_t naive_rank(std::vector<std::vector<mpq_class>> a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class m = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= m * a[r][j];
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<long>> random_ints(Rng& rng, std::size_t rows, std::size_t cols, int rank_bound) {
  // product of rows x k and k x cols keeps the rank at most k
  std::vector<std::vector<long>> l(rows, std::vector<long>(rank_bound)), r(rank_bound, std::vector<long>(cols));
  for (auto& row : l)
    for (auto& x : row) x = rng.uniform(-3, 3);
  for (auto& row : r)
    for (auto& x : row) x = rng.uniform(-3, 3);
  std::vector<std::vector<long>> m(rows, std::vector<long>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (int k = 0; k < rank_bound; ++k) m[i][j] += l[i][k] * r[k][j];
  return m;
}

TEST(Matrix, RankMatchesNaiveOracleOverQ) {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t rows = rng.uniform(1, 7), cols = rng.uniform(1, 7);
    auto ints = random_ints(rng, rows, cols, static_cast<int>(rng.uniform(1, 5)));
    std::vector<std::vector<mpq_class>> q;
    for (auto& row : ints) q.emplace_back(row.begin(), row.end());
    auto m = Matrix<RationalField>::from_ints(RationalField(), ints);
    EXPECT_EQ(rank(m), naive_rank(q));
  }
}

TEST(Matrix, PrimeRankNeverExceedsRationalRank) {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t rows = rng.uniform(1, 6), cols = rng.uniform(1, 6);
    auto ints = random_ints(rng, rows, cols, 4);
    auto rq = rank(Matrix<RationalField>::from_ints(RationalField(), ints));
    EXPECT_LE(rank(Matrix<PrimeField>::from_ints(PrimeField(3), ints)), rq);
    EXPECT_LE(rank(Matrix<PrimeField>::from_ints(PrimeField(), ints)), rq);
  }
  // rank drops mod 3 only
  std::vector<std::vector<long>> m{{1, 2}, {2, 1}};
  EXPECT_EQ(rank(Matrix<RationalField>::from_ints(RationalField(), m)), 2u);
  EXPECT_EQ(rank(Matrix<PrimeField>::from_ints(PrimeField(3), m)), 1u);
}

template <class F>
void check_kernel(const Matrix<F>& m) {
  auto rk = rank_and_kernel(m);
  EXPECT_EQ(rk.rank + rk.kernel.size(), m.cols());
  for (const auto& v : rk.kernel) {
    auto w = m.apply(v);
    for (const auto& x : w) EXPECT_TRUE(m.field().is_zero(x));
  }
}

TEST(Matrix, KernelVectorsAreAnnihilated) {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    auto ints = random_ints(rng, rng.uniform(1, 6), rng.uniform(1, 8), 3);
    check_kernel(Matrix<RationalField>::from_ints(RationalField(), ints));
    check_kernel(Matrix<PrimeField>::from_ints(PrimeField(), ints));
  }
}

TEST(SparseMatrix, RankAgreesWithDense) {
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    auto ints = random_ints(rng, rng.uniform(1, 8), rng.uniform(1, 8), 4);
    PrimeField f;
    SparseMatrix<PrimeField> s(f, ints.size(), ints[0].size());
    SparseMatrix<RationalField> sq(RationalField(), ints.size(), ints[0].size());
    for (std::size_t i = 0; i < ints.size(); ++i)
      for (std::size_t j = 0; j < ints[i].size(); ++j)
        if (ints[i][j] != 0) {
          s.add(i, j, f.from_int(ints[i][j]));
          sq.add(i, j, mpq_class(ints[i][j]));
        }
    EXPECT_EQ(s.rank(), rank(Matrix<PrimeField>::from_ints(f, ints)));
    EXPECT_EQ(sq.rank(), rank(Matrix<RationalField>::from_ints(RationalField(), ints)));
  }
}

TEST(Matrix, Transpose) {
  auto m = Matrix<PrimeField>::from_ints(PrimeField(), {{1, 2, 3}, {4, 5, 6}});
  auto t = m.transpose();
  EXPECT_EQ(t.rows(), 3u);
  EXPECT_EQ(t.at(2, 1), 6u);
}

}  // namespace
}  // namespace syzygy
