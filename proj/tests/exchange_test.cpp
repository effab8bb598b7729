#include <gtest/gtest.h>

#include <random>

#include "greenseq/bigint.hpp"
#include "greenseq/exchange_matrix.hpp"
#include "greenseq/pattern.hpp"
#include "greenseq/sequence.hpp"

using namespace greenseq;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  IntMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& r : rows) {
    Index j = 0;
    for (auto v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

// Textbook FZ rule, written out case by case.
IntMatrix naive_mutate(const IntMatrix& b, Index k) {
  IntMatrix out = b;
  for (Index i = 0; i < b.rows(); ++i)
    for (Index j = 0; j < b.cols(); ++j) {
      if (i == k || j == k) {
        out(i, j) = -b(i, j);
      } else {
        const std::int64_t x = b(i, k), y = b(k, j);
        std::int64_t add = 0;
        if (x > 0 && y > 0) add = x * y;
        if (x < 0 && y < 0) add = -(x * y);
        out(i, j) = b(i, j) + add;
      }
    }
  return out;
}

IntMatrix random_skew(std::mt19937_64& rng, Index n, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      m(i, j) = d(rng);
      m(j, i) = -m(i, j);
    }
  return m;
}

}  // namespace

TEST(ExchangeMatrix, MarkovMutatesToMarkov) {
  // 1 => 2 => 3 => 1, all double.
  const IntMatrix markov = mat({{0, -2, 2}, {2, 0, -2}, {-2, 2, 0}});
  const auto out = mutate(ExtendedExchangeMatrix(markov), 0);
  EXPECT_EQ(out.entries(), (-markov).eval());
}

TEST(ExchangeMatrix, RejectsNonSkew) {
  EXPECT_THROW(ExtendedExchangeMatrix(mat({{0, 1}, {1, 0}})), ArgumentError);
  EXPECT_THROW(ExtendedExchangeMatrix(mat({{0, 1, 0}})), ArgumentError);
  EXPECT_THROW(mutate(ExtendedExchangeMatrix(mat({{0, 1}, {-1, 0}})), 2), ArgumentError);
}

TEST(ExchangeMatrix, FrameAndCoframe) {
  const IntMatrix b = mat({{0, -1}, {1, 0}});
  EXPECT_EQ(frame(b).entries(), mat({{0, -1}, {1, 0}, {1, 0}, {0, 1}}));
  EXPECT_EQ(coframe(b).entries(), mat({{0, -1}, {1, 0}, {-1, 0}, {0, -1}}));
  const auto f = frame(b);
  EXPECT_EQ(color_of(f, 0), VertexColor::Green);
  EXPECT_EQ(color_of(mutate(f, 0), 0), VertexColor::Red);
}

TEST(ExchangeMatrix, MatchesNaiveRuleAndIsInvolution) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Index n = 1 + static_cast<Index>(rng() % 6);
    const auto f = frame(random_skew(rng, n, 3));
    const Index k = static_cast<Index>(rng() % static_cast<std::uint64_t>(n));
    const auto once = mutate(f, k);
    ASSERT_EQ(once.entries(), naive_mutate(f.entries(), k));
    ASSERT_TRUE(is_skew_symmetric(once.principal()));
    ASSERT_EQ(mutate(once, k), f);
  }
}

TEST(ExchangeMatrix, OverflowIsReported) {
  const std::int64_t big = std::int64_t{1} << 40;
  const IntMatrix b = mat({{0, big, -big}, {-big, 0, big}, {big, -big, 0}});
  EXPECT_THROW(mutate(ExtendedExchangeMatrix(b), 0), OverflowError);
}

TEST(ExchangeMatrix, NegativePermutation) {
  const auto sigma = negative_permutation(mat({{0, -1}, {-1, 0}}));
  ASSERT_TRUE(sigma);
  EXPECT_EQ(*sigma, (std::vector<Index>{1, 0}));
  EXPECT_FALSE(negative_permutation(mat({{-1, -1}, {0, 0}})));
  EXPECT_FALSE(negative_permutation(mat({{1, 0}, {0, -1}})));
}

TEST(ExchangeMatrix, Determinant) {
  EXPECT_EQ(determinant<std::int64_t>(mat({{2, 1}, {7, 4}})), 1);
  EXPECT_EQ(determinant<std::int64_t>(mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})), -1);
  EXPECT_EQ(determinant<std::int64_t>(mat({{1, 2}, {2, 4}})), 0);
}

TEST(Pattern, FirstGVector) {
  // One arrow 2 -> 1.
  const auto root = PatternState<std::int64_t>::root(mat({{0, 1}, {-1, 0}}));
  const auto s = greenseq::advance(root, 0);
  EXPECT_EQ(s.gmatrix(), mat({{-1, 0}, {1, 1}}));
  EXPECT_EQ(Matrix<std::int64_t>(s.cmatrix()), mat({{-1, 1}, {0, 1}}));
  EXPECT_TRUE(check_duality(s));
}

TEST(Pattern, CorruptedGMatrixFailsDuality) {
  const auto s = greenseq::advance(PatternState<std::int64_t>::root(mat({{0, 1}, {-1, 0}})), 0);
  EXPECT_FALSE(check_duality(s.with_gmatrix(mat({{-1, 0}, {0, 1}}))));
}

TEST(Pattern, DualityOnRandomPaths) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Index n = 1 + static_cast<Index>(rng() % 6);
    auto s = PatternState<BigInt>::root(random_skew(rng, n, 3));
    const int len = static_cast<int>(rng() % 21);
    Index last = -1;
    for (int step = 0; step < len; ++step) {
      Index k = static_cast<Index>(rng() % static_cast<std::uint64_t>(n));
      if (k == last && n > 1) k = (k + 1) % n;
      s = greenseq::advance(s, k);
      last = k;
      ASSERT_TRUE(check_duality(s)) << "trial " << trial << " step " << step;
      ASSERT_TRUE(is_sign_coherent(s));
      const Matrix<BigInt> c = s.cmatrix();
      const BigInt dc = determinant(c), dg = determinant(s.gmatrix());
      ASSERT_TRUE(dc == 1 || dc == -1);
      ASSERT_TRUE(dg == 1 || dg == -1);
    }
  }
}

TEST(Sequence, OneBasedRoundTrip) {
  const auto s = MutationSequence::from_one_based({2, 1, 3});
  EXPECT_EQ(s.steps(), (std::vector<Index>{1, 0, 2}));
  EXPECT_EQ(s.one_based(), (std::vector<Index>{2, 1, 3}));
  EXPECT_EQ(s.to_string(), "2 1 3");
  EXPECT_FALSE(s.valid_for(2));
}
