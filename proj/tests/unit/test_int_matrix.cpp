#include <gtest/gtest.h>

#include <random>

#include "linetrees/crit_group.hpp"
#include "linetrees/int_matrix.hpp"
#include "oracles.hpp"

using namespace linetrees;

namespace {

std::vector<std::int64_t> as_int64(const std::vector<BigInt>& xs) {
  std::vector<std::int64_t> out;
  for (const auto& x : xs) out.push_back(x.get_si());
  return out;
}

std::vector<std::vector<std::int64_t>> rows_of(const IntMatrix& m) {
  std::vector<std::vector<std::int64_t>> out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_si();
  }
  return out;
}

IntMatrix diagonal_matrix(const std::vector<BigInt>& d, std::size_t rows, std::size_t cols) {
  IntMatrix out(rows, cols);
  for (std::size_t i = 0; i < d.size(); ++i) out(i, i) = d[i];
  return out;
}

void expect_valid_smith(const IntMatrix& m, bool compare_with_oracle = true) {
  SmithForm s = smith_normal_form(m, true);
  ASSERT_TRUE(s.left && s.right);
  EXPECT_EQ(*s.left * m * *s.right, diagonal_matrix(s.diagonal, m.rows(), m.cols()));
  EXPECT_EQ(abs(determinant(*s.left)), 1);
  EXPECT_EQ(abs(determinant(*s.right)), 1);
  for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
    EXPECT_GE(s.diagonal[i], 0);
    if (s.diagonal[i] != 0) {
      EXPECT_TRUE(mpz_divisible_p(s.diagonal[i + 1].get_mpz_t(), s.diagonal[i].get_mpz_t()));
    } else {
      EXPECT_EQ(s.diagonal[i + 1], 0);
    }
  }
  if (compare_with_oracle) EXPECT_EQ(as_int64(smith_normal_form(m).diagonal), oracle::smith_diagonal(rows_of(m)));
}

}  // namespace

TEST(Determinant, SmallMatrices) {
  EXPECT_EQ(determinant(IntMatrix()), 1);
  EXPECT_EQ(determinant(IntMatrix{{2, 1}, {7, 4}}), 1);
  EXPECT_EQ(determinant(IntMatrix{{0, 1, 2}, {1, 0, 3}, {4, -3, 8}}), -2);
  EXPECT_EQ(determinant(IntMatrix{{1, 2}, {2, 4}}), 0);
}

TEST(Determinant, MatchesLaplaceExpansion) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 1 + trial % 5;
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    }
    // The 1x1 determinant of the oracle is the matrix entry; gcd of n x n minors is |det|.
    auto d = oracle::smith_diagonal(rows_of(m));
    std::int64_t product = 1;
    for (auto x : d) product *= x;
    EXPECT_EQ(abs(determinant(m)), product);
  }
}

TEST(SmithNormalForm, Examples) {
  EXPECT_EQ(as_int64(smith_normal_form(IntMatrix::identity(3)).diagonal), (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_EQ(as_int64(smith_normal_form(IntMatrix{{2, 0, 0}, {0, 0, 0}, {0, 0, 3}}).diagonal),
            (std::vector<std::int64_t>{1, 6, 0}));
  EXPECT_EQ(as_int64(smith_normal_form(laplacian(kautz(2, 2))).diagonal),
            (std::vector<std::int64_t>{1, 1, 1, 2, 6, 0}));
  EXPECT_EQ(as_int64(smith_normal_form(IntMatrix{{-4}}).diagonal), (std::vector<std::int64_t>{4}));
}

TEST(SmithNormalForm, TransformsAndOracleOnRandomMatrices) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> entry(-6, 6);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = trial % 3 == 0 ? entry(rng) * 2 : entry(rng);
    }
    SCOPED_TRACE(trial);
    expect_valid_smith(m);
  }
}

TEST(SmithNormalForm, LaplaciansOfFamilies) {
  for (const DiGraph& g : {debruijn(2, 2), debruijn(3, 1), kautz(2, 2), kautz(3, 1)}) {
    expect_valid_smith(laplacian(g));
  }
  expect_valid_smith(laplacian(debruijn(2, 4)), false);
}
