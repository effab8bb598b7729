#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "greenseq/errors.hpp"
#include "greenseq/generators.hpp"
#include "greenseq/quiver_file.hpp"
#include "greenseq/weights.hpp"

using namespace greenseq;

namespace {

// Sign of (t - 2) - sum 1/p_i, by cross-multiplying with the product of weights.
int excess_sign(const std::vector<int>& p) {
  std::int64_t prod = 1;
  for (int w : p) prod *= w;
  std::int64_t lhs = static_cast<std::int64_t>(p.size() - 2) * prod;
  for (int w : p) lhs -= prod / w;
  return (lhs > 0) - (lhs < 0);
}

WplType from_lists(std::vector<int> p) {
  p.erase(std::remove(p.begin(), p.end(), 1), p.end());
  std::sort(p.begin(), p.end());
  static const std::set<std::vector<int>> domestic{{2, 3, 3}, {2, 3, 4}, {2, 3, 5}};
  static const std::set<std::vector<int>> tubular{{2, 2, 2, 2}, {3, 3, 3}, {2, 4, 4}, {2, 3, 6}};
  if (p.size() <= 2 || (p.size() == 3 && p[0] == 2 && p[1] == 2) || domestic.count(p)) return WplType::Domestic;
  if (tubular.count(p)) return WplType::Tubular;
  return WplType::Wild;
}

}  // namespace

TEST(Weights, Genus) {
  EXPECT_EQ(genus({2, 3, 7}), Rational(3, 2));
  EXPECT_EQ(genus({2, 2, 2, 2}), Rational(1));
  EXPECT_EQ(genus({3, 3, 3}), Rational(1));
  EXPECT_EQ(genus({2, 3, 5}), Rational(1, 2));
  EXPECT_EQ(genus({2, 2, 2, 2, 2}), Rational(3, 2));
  EXPECT_THROW(WeightSequence({2}), ArgumentError);
  EXPECT_THROW(WeightSequence({2, 0}), ArgumentError);
}

TEST(Weights, ClassifySweep) {
  int checked = 0;
  for (int t = 2; t <= 4; ++t) {
    std::vector<int> p(static_cast<std::size_t>(t), 1);
    while (true) {
      const WeightSequence w(p);
      const int sign = excess_sign(p);
      const WplType by_sign = sign < 0 ? WplType::Domestic : sign == 0 ? WplType::Tubular : WplType::Wild;
      ASSERT_EQ(classify(w), by_sign) << w.to_string();
      ASSERT_EQ(classify(w), from_lists(p)) << w.to_string();
      ASSERT_EQ(listed_type(w), from_lists(p)) << w.to_string();
      ++checked;
      std::size_t i = 0;
      while (i < p.size() && p[i] == 9) p[i++] = 1;
      if (i == p.size()) break;
      ++p[i];
    }
  }
  EXPECT_EQ(checked, 81 + 729 + 6561);
}

TEST(Weights, MinimalWild) {
  for (const auto& p : minimal_wild_weights()) {
    EXPECT_EQ(classify(p), WplType::Wild);
    // Lowering any weight by one leaves the wild region.
    for (std::size_t i = 0; i < p.weights().size(); ++i) {
      auto w = p.weights();
      --w[i];
      EXPECT_NE(classify(WeightSequence(w)), WplType::Wild) << p.to_string();
    }
  }
  EXPECT_EQ(minimal_wild_subweight({3, 9, 2}).to_string(), "(2,3,7)");
  EXPECT_EQ(minimal_wild_subweight({4, 4, 4}).to_string(), "(3,3,4)");
  EXPECT_THROW(minimal_wild_subweight({2, 3, 5}), ArgumentError);
}

TEST(Weights, EveryWildSequenceDominatesAMinimalOne) {
  int wild = 0;
  for (int t = 2; t <= 5; ++t) {
    std::vector<int> p(static_cast<std::size_t>(t), 1);
    for (bool more = true; more;) {
      const WeightSequence w(p);
      if (classify(w) == WplType::Wild) {
        ++wild;
        const auto m = minimal_wild_subweight(w).normalized();
        const auto big = w.normalized();
        ASSERT_LE(m.size(), big.size());
        for (std::size_t i = 0; i < m.size(); ++i) ASSERT_LE(m[i], big[i]) << w.to_string();
      }
      std::size_t i = 0;
      while (i < p.size() && p[i] == 9) p[i++] = 1;
      more = i < p.size();
      if (more) ++p[i];
    }
  }
  EXPECT_GT(wild, 50000);
}

TEST(Generators, VertexCounts) {
  for (int t = 2; t <= 4; ++t) {
    std::vector<int> p(static_cast<std::size_t>(t), 1);
    for (bool more = true; more;) {
      Index want = 2;
      for (int x : p) want += x - 1;
      ASSERT_EQ(build_canonical_quiver(WeightSequence(p)).vertex_count(), want);
      ASSERT_EQ(build_squid_quiver(WeightSequence(p)).vertex_count(), want);
      std::size_t i = 0;
      while (i < p.size() && p[i] == 6) p[i++] = 1;
      more = i < p.size();
      if (more) ++p[i];
    }
  }
}

TEST(Generators, CanonicalShape) {
  const auto q = build_canonical_quiver({2, 3, 4});
  ASSERT_EQ(q.vertex_count(), 2 + 1 + 2 + 3);
  const Index top = q.index_of("O(c)");
  EXPECT_EQ(q.arrows(top, 0), 1);
  EXPECT_EQ(q.arrows(0, q.index_of("O(x1)")), 1);
  EXPECT_EQ(q.arrows(q.index_of("O(x1)"), top), 1);
  EXPECT_EQ(q.arrows(q.index_of("O(x3)"), q.index_of("O(2x3)")), 1);
  EXPECT_EQ(q.arrows(q.index_of("O(3x3)"), top), 1);
  EXPECT_EQ(build_canonical_quiver({2, 2, 2, 2, 2}).arrows(6, 0), 3);
  EXPECT_EQ(build_canonical_quiver({1, 3}).arrows(0, 3), 1);
}

TEST(Generators, SquidShape) {
  const auto q = build_squid_quiver({2, 3});
  ASSERT_EQ(q.vertex_count(), 5);
  const Index top = q.index_of("O(c)");
  EXPECT_EQ(q.arrows(0, top), 2);
  EXPECT_EQ(q.arrows(top, q.index_of("S2[2]")), 1);
  EXPECT_EQ(q.arrows(q.index_of("S2[2]"), 0), 1);
  EXPECT_EQ(q.arrows(q.index_of("S2[2]"), q.index_of("S2[1]")), 1);
  EXPECT_EQ(q.arrows(q.index_of("S1[1]"), 0), 1);
}

TEST(Generators, Hyperbolic) {
  const auto q = build_hyperbolic_quiver(3);
  EXPECT_EQ(q.labels(), (std::vector<std::string>{"diamond", "1", "2", "3", "star"}));
  EXPECT_EQ(q.arrows(0, 4), 2);
  for (const char* i : {"1", "2", "3"}) {
    EXPECT_EQ(q.arrows(4, q.index_of(i)), 1);
    EXPECT_EQ(q.arrows(q.index_of(i), 0), 1);
  }
}

TEST(Generators, QabcRecursion) {
  const auto v = qabc_power_mutation(3, 2, 2, 8);
  ASSERT_EQ(v.size(), 8u);
  EXPECT_EQ(v[0], (std::pair<std::int64_t, std::int64_t>{4, 10}));
  EXPECT_EQ(v[1], (std::pair<std::int64_t, std::int64_t>{26, 68}));
  // Replay by hand and compare the multiplicity multisets.
  auto q = build_qabc(4, 3, 2);
  const auto w = qabc_power_mutation(4, 3, 2, 6);
  for (const auto& [b, c] : w) {
    q = mutate(mutate(q, 0), 1);
    std::vector<std::int64_t> got{q.arrows(0, 1) + q.arrows(1, 0), q.arrows(1, 2) + q.arrows(2, 1),
                                  q.arrows(2, 0) + q.arrows(0, 2)};
    std::vector<std::int64_t> want{4, b, c};
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want);
  }
  EXPECT_THROW(qabc_power_mutation(2, 2, 2, 1), ArgumentError);
}

TEST(Generators, WildWitnesses) {
  const std::vector<std::vector<std::int64_t>> expected{{2, 2, 3}, {2, 2, 3}, {2, 2, 3}, {2, 2, 3}, {2, 3, 5}};
  const auto& list = minimal_wild_weights();
  ASSERT_EQ(list.size(), expected.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto w = wild_witness_sequence(list[i]);
    const auto q = mutate(build_canonical_quiver(list[i]), w.sequence);
    const auto c = find_embedded_qabc(q);
    ASSERT_TRUE(c) << list[i].to_string();
    EXPECT_EQ(c->multiset(), expected[i]) << list[i].to_string();
    EXPECT_EQ(w.expected, expected[i]);
  }
  EXPECT_THROW(wild_witness_sequence({2, 3, 8}), ArgumentError);
}

TEST(Generators, TubularGoldenFiles) {
  const std::vector<std::pair<std::string, WeightSequence>> cases{
      {"d4", {2, 2, 2, 2}}, {"e6", {3, 3, 3}}, {"e7", {2, 4, 4}}, {"e8", {2, 3, 6}}};
  for (const auto& [name, p] : cases) {
    const auto golden = read_quiver_file(std::string(GREENSEQ_DATA) + "/tubular/" + name + ".quiver");
    EXPECT_TRUE(isomorphic(golden, build_squid_quiver(p), 16)) << name;
  }
}
