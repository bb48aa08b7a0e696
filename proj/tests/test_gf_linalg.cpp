#include <nilorb/gf_linalg.hpp>

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace nilorb;

namespace {

Mat random_mat(const Field& f, int r, int c, std::mt19937& rng)
{
  std::uniform_int_distribution<unsigned> d(0, f.order() - 1);
  Mat m(f, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      m(i, j) = static_cast<Scalar>(d(rng));
  return m;
}

Mat jordan_block(const Field& f, int n, const std::vector<int>& sizes)
{
  Mat m(f, n, n);
  int at = 0;
  for (int s : sizes) {
    for (int i = 0; i + 1 < s; ++i)
      m(at + i + 1, at + i) = 1;
    at += s;
  }
  return m;
}

}  // namespace

TEST(GfLinalg, BasicIdentities)
{
  const Field& f = Field::standard(2);
  std::mt19937 rng(1);
  const Mat a = random_mat(f, 4, 5, rng);
  EXPECT_EQ(Mat::identity(f, 4) * a, a);
  EXPECT_EQ(transpose(transpose(a)), a);
  EXPECT_TRUE((a + a).is_zero());
  EXPECT_THROW(a * a, std::invalid_argument);
}

TEST(GfLinalg, SymplecticGramSquaresToIdentity)
{
  const Field& f = Field::standard(1);
  for (int n = 1; n <= 4; ++n) {
    Mat s(f, 2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
      s(i, n + i) = s(n + i, i) = 1;
    EXPECT_EQ(s * s, Mat::identity(f, 2 * n));
  }
}

TEST(GfLinalg, OddGramHasRank2n)
{
  const Field& f = Field::standard(1);
  for (int n = 1; n <= 4; ++n) {
    Mat s(f, 2 * n + 1, 2 * n + 1);
    for (int i = 0; i < n; ++i)
      s(i, n + i) = s(n + i, i) = 1;
    EXPECT_EQ(rank(s), 2 * n);
  }
}

TEST(GfLinalg, KernelSolveTrivia)
{
  const Field& f = Field::standard(2);
  EXPECT_EQ(kernel_basis(Mat(f, 3, 3)).size(), 3u);
  const Vec b{1, 2, 3};
  EXPECT_EQ(*solve(Mat::identity(f, 3), b), b);
  Mat z(f, 2, 2);
  EXPECT_FALSE(solve(z, Vec{1, 0}).has_value());
}

TEST(GfLinalg, RankNullity)
{
  std::mt19937 rng(7);
  for (int e : {1, 2, 3}) {
    const Field& f = Field::standard(e);
    for (int t = 0; t < 200; ++t) {
      const int r = 1 + static_cast<int>(rng() % 8), c = 1 + static_cast<int>(rng() % 8);
      Mat a = random_mat(f, r, c, rng);
      if (t % 3 == 0 && r > 1)
        for (int j = 0; j < c; ++j)
          a(r - 1, j) = a(0, j);  // force dependency
      const auto k = kernel_basis(a);
      EXPECT_EQ(rank(a) + static_cast<int>(k.size()), c);
      for (const auto& v : k)
        EXPECT_TRUE(vec_is_zero(mat_vec(a, v)));
    }
  }
}

TEST(GfLinalg, PackedMatchesGeneric)
{
  const Field& f = Field::standard(1);
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    const int r = 1 + static_cast<int>(rng() % 20), c = 1 + static_cast<int>(rng() % 20);
    const Mat a = random_mat(f, r, c, rng);
    const Mat b = random_mat(f, c, 1 + static_cast<int>(rng() % 20), rng);
    EXPECT_EQ((BitMatrix(a) * BitMatrix(b)).to_mat(), mat_mul_generic(a, b));
    EXPECT_EQ(rank(a), rank_generic(a));
    EXPECT_EQ(kernel_basis(a), kernel_basis_generic(a));
    EXPECT_EQ(row_echelon(a).pivots, row_echelon_generic(a).pivots);
    EXPECT_EQ(row_echelon(a).rref, row_echelon_generic(a).rref);
  }
}

TEST(GfLinalg, InverseAndSpan)
{
  const Field& f = Field::standard(2);
  std::mt19937 rng(3);
  int inverted = 0;
  for (int t = 0; t < 100; ++t) {
    const Mat a = random_mat(f, 4, 4, rng);
    const auto inv = inverse(a);
    EXPECT_EQ(inv.has_value(), rank(a) == 4);
    if (inv) {
      ++inverted;
      EXPECT_EQ(a * *inv, Mat::identity(f, 4));
    }
  }
  EXPECT_GT(inverted, 0);
  Span s(f, 3);
  EXPECT_TRUE(s.insert({1, 2, 0}));
  EXPECT_FALSE(s.insert({2, 3, 0}));  // ω·(1,ω,0)
  EXPECT_TRUE(s.contains({3, 1, 0}));
  EXPECT_FALSE(s.contains({0, 0, 1}));
}

TEST(GfLinalg, Nilpotency)
{
  const Field& f = Field::standard(1);
  EXPECT_TRUE(is_nilpotent(Mat(f, 4, 4)));
  EXPECT_FALSE(is_nilpotent(Mat::identity(f, 4)));
  EXPECT_TRUE(is_nilpotent(jordan_block(f, 5, {5})));
  EXPECT_EQ(jordan_partition(Mat(f, 4, 4)), (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ(jordan_partition(jordan_block(f, 4, {3, 1})), (std::vector<int>{3, 1}));
  EXPECT_THROW(jordan_partition(Mat::identity(f, 2)), std::invalid_argument);
}

TEST(GfLinalg, JordanPartitionOfConjugates)
{
  std::mt19937 rng(5);
  for (int e : {1, 2}) {
    const Field& f = Field::standard(e);
    for (int t = 0; t < 50; ++t) {
      std::vector<int> sizes;
      int n = 0;
      while (n < 6) {
        const int s = 1 + static_cast<int>(rng() % 3);
        sizes.push_back(s);
        n += s;
      }
      std::sort(sizes.rbegin(), sizes.rend());
      Mat p = random_mat(f, n, n, rng);
      while (!inverse(p))
        p = random_mat(f, n, n, rng);
      const Mat t2 = p * jordan_block(f, n, sizes) * *inverse(p);
      EXPECT_EQ(jordan_partition(t2), sizes);
      const auto parts = jordan_partition(t2);
      EXPECT_EQ(std::accumulate(parts.begin(), parts.end(), 0), n);
      const auto chains = jordan_chains(t2);
      std::vector<int> lens;
      for (const auto& c : chains)
        lens.push_back(c.length);
      EXPECT_EQ(lens, sizes);
    }
  }
}

TEST(GfLinalg, TextRoundTrip)
{
  const Field& f = Field::standard(2);
  std::mt19937 rng(9);
  const Mat a = random_mat(f, 3, 4, rng);
  EXPECT_EQ(matrix_from_text(matrix_to_text(a)), a);
  EXPECT_THROW(matrix_from_text("2 2 GF(2^1)\n1 0\n0"), std::invalid_argument);
  EXPECT_THROW(matrix_from_text("1 1 GF(2^1)\n1 1"), std::invalid_argument);
  EXPECT_THROW(matrix_from_text("1 1 GF(2^1)\n2"), std::invalid_argument);
}
