#include <gtest/gtest.h>

#include <random>

#include "monoideal/linalg.hpp"
#include "oracles.hpp"

using namespace monoideal;

TEST(Linalg, SmallRanks) {
  const FieldSpec q = FieldSpec::rationals();
  Matrix m(3, 3);
  const int v[3][3] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) m.at(r, c) = q.from_int(v[r][c]);
  }
  EXPECT_EQ(rank(m, q), 2U);
  // Over ZZ/3 the rows (1,2,0), (1,2,0), (1,2,0) collapse to rank 1.
  const FieldSpec f3 = FieldSpec::prime(3);
  Matrix m3(3, 3);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) m3.at(r, c) = f3.from_int(v[r][c]);
  }
  EXPECT_EQ(rank(m3, f3), 1U);
  EXPECT_EQ(rank(Matrix(0, 4), q), 0U);
}

TEST(Linalg, ColumnSpan) {
  const FieldSpec q = FieldSpec::rationals();
  Matrix a(2, 1);
  a.at(0, 0) = q.one();
  a.at(1, 0) = q.from_int(-1);
  const std::vector<Scalar> in{q.from_int(3), q.from_int(-3)};
  const std::vector<Scalar> out{q.one(), q.zero()};
  EXPECT_TRUE(in_column_span(a, in, q));
  EXPECT_FALSE(in_column_span(a, out, q));
}

TEST(Linalg, RationalRankMatchesTextbookElimination) {
  std::mt19937_64 rng(41);
  const FieldSpec q = FieldSpec::rationals();
  for (int k = 0; k < 200; ++k) {
    const std::size_t rows = 1 + rng() % 6;
    const std::size_t cols = 1 + rng() % 6;
    Matrix m(rows, cols);
    std::vector<std::vector<mpq_class>> ref(rows, std::vector<mpq_class>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        // Sparse entries keep low ranks common; fractions exercise the clearing step.
        if (rng() % 2) continue;
        mpq_class x(static_cast<long>(rng() % 7) - 3, static_cast<unsigned long>(1 + rng() % 3));
        x.canonicalize();
        ref[r][c] = x;
        m.at(r, c) = q.from_ratio(x.get_num(), x.get_den());
      }
    }
    ASSERT_EQ(rank(m, q), oracle::rank_q(ref));
  }
}
