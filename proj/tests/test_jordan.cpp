#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "nilcomplete/nilcomplete.hpp"
#include "support/oracle.hpp"

using nilc::IntMatrix;
using nilc::Partition;

namespace {

IntMatrix permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, p[i]) = 1;
  return m;
}

}  // namespace

TEST(Rank, Examples) {
  EXPECT_EQ(nilc::exact_rank(IntMatrix::identity(5)), 5u);
  EXPECT_EQ(nilc::exact_rank(nilc::make_nr(10, 3)), 7u);
  EXPECT_EQ(nilc::exact_rank(IntMatrix(4)), 0u);
}

TEST(Rank, AgreesWithRationalElimination) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 9;
    std::uniform_int_distribution<int> d(-4, 4);
    std::uniform_int_distribution<int> zero(0, 2);
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = zero(rng) ? 0 : d(rng);
    if (trial % 3 == 0 && n > 1) {
      // force a dependent row
      for (int j = 0; j < n; ++j) m(n - 1, j) = m(0, j) * 3 - m(1 % n, j);
    }
    ASSERT_EQ(nilc::exact_rank(m), oracle::rank(m));
  }
}

// Entries large enough to overflow 128-bit intermediates in elimination.
TEST(Rank, LargeEntriesStayExact) {
  const int n = 6;
  IntMatrix m(n);
  nilc::Integer big("123456789012345678901234567890");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = big * (i + 1) + j * j * (i + 2);
  EXPECT_EQ(nilc::exact_rank(m), oracle::rank(m));
}

TEST(Nilpotent, Examples) {
  for (int n = 2; n <= 12; ++n)
    for (int r = 1; r < n; ++r) EXPECT_TRUE(nilc::is_nilpotent(nilc::make_nr(n, r)));
  EXPECT_FALSE(nilc::is_nilpotent(IntMatrix::identity(4)));
  EXPECT_TRUE(nilc::is_nilpotent(nilc::make_nr(10, 3) + nilc::unit_matrix(10, 2, 6)));
  // nilpotent but not triangular: [[1,1],[-1,-1]]
  IntMatrix m(2);
  m(0, 0) = 1, m(0, 1) = 1, m(1, 0) = -1, m(1, 1) = -1;
  EXPECT_TRUE(nilc::is_nilpotent(m));
  EXPECT_EQ(nilc::jordan_type(m).partition, (Partition{2}));
}

TEST(JordanType, Examples) {
  EXPECT_EQ(nilc::jordan_type(nilc::make_nr(10, 3)).partition, (Partition{4, 3, 3}));
  EXPECT_EQ(nilc::jordan_type(nilc::make_nr(10, 3) + nilc::unit_matrix(10, 2, 6)).partition,
            (Partition{5, 4, 1}));
  const auto ranks = nilc::rank_sequence(nilc::make_nr(10, 3) + nilc::unit_matrix(10, 2, 6));
  // rank(A^k) = sum of max(lambda_i - k, 0) over the blocks of {5,4,1}
  EXPECT_EQ(ranks, (std::vector<std::size_t>{10, 7, 5, 3, 1, 0}));
  EXPECT_EQ(oracle::power_ranks(nilc::make_nr(10, 3) + nilc::unit_matrix(10, 2, 6)),
            (std::vector<std::size_t>{10, 7, 5, 3, 1, 0, 0, 0, 0, 0, 0}));
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(nilc::jordan_type(nilc::make_nr(n + 1, 1)).partition, (Partition{n + 1}));
  EXPECT_THROW(nilc::jordan_type(IntMatrix::identity(3)), nilc::Error);
}

TEST(JordanType, NrHasItsType) {
  for (int n = 2; n <= 20; ++n)
    for (int r = 1; r < n; ++r)
      ASSERT_EQ(nilc::jordan_type(nilc::make_nr(n, r)).partition, nilc::nr_type(n, r));
}

TEST(JordanType, BlockMatricesRoundTrip) {
  for (int n = 1; n <= 10; ++n)
    for (const auto& lam : nilc::partitions_of(n))
      ASSERT_EQ(nilc::jordan_type(nilc::jordan_block_matrix(lam)).partition, lam);
}

TEST(JordanType, ConjugationInvariant) {
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 14;
    std::uniform_int_distribution<int> pick_r(1, n - 1);
    const int r = pick_r(rng);
    const Partition lam = oracle::random_partition(rng, n, r);
    const IntMatrix a = nilc::make_nr(n, r) + nilc::run(n, r, lam).dense_x();
    const IntMatrix p = permutation(rng, n);
    const IntMatrix conj = p * a * p.transpose();
    ASSERT_EQ(nilc::jordan_type(conj).partition, lam);
  }
}

TEST(JordanType, RankSequenceIsWeyr) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 15;
    const Partition lam = oracle::random_partition(rng, n, 0);
    // conjugate a Jordan matrix by a random unit upper triangular matrix
    IntMatrix u = IntMatrix::identity(n);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) u(i, j) = d(rng);
    IntMatrix u_inv = IntMatrix::identity(n);
    // inverse of unit upper triangular by back substitution
    for (int j = 0; j < n; ++j)
      for (int i = j - 1; i >= 0; --i) {
        nilc::Integer s = 0;
        for (int k = i + 1; k <= j; ++k) s += u(i, k) * u_inv(k, j);
        u_inv(i, j) = -s;
      }
    ASSERT_EQ(u * u_inv, IntMatrix::identity(n));
    const IntMatrix a = u * nilc::jordan_block_matrix(lam) * u_inv;
    const auto r = nilc::rank_sequence(a);
    for (std::size_t k = 1; k < r.size(); ++k) {
      ASSERT_LE(r[k], r[k - 1]);
      if (k + 1 < r.size()) ASSERT_LE(r[k] - r[k + 1], r[k - 1] - r[k]);
    }
    ASSERT_EQ(nilc::jordan_type(a).partition, lam);
  }
}

// Part(final graph) equals the Jordan type of its matrix.
TEST(JordanType, FinalGraphHeightsMatchType) {
  for (int n = 2; n <= 12; ++n)
    for (int r = 1; r < n; ++r)
      for (const auto& lam : nilc::partitions_of(n, r)) {
        const auto c = nilc::run(n, r, lam);
        ASSERT_EQ(nilc::heights(c.graph), nilc::jordan_type(nilc::matrix_of_graph(c.graph)).partition);
      }
}
