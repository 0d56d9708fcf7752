#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace lhp;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

std::vector<LatticePoint> oracle_points(const LabeledPoset& P, const SMap& s, const Box& box) {
  return oracle::points(P, s, box.lo, box.hi);
}

}  // namespace

TEST(Enumerate, Singleton) {
  const auto pts = enumerate_points(make_antichain(1), SMap{1}, regime::n_leq(SMap{1}, 2));
  EXPECT_EQ(pts, (std::vector<LatticePoint>{{0}, {1}, {2}}));
}

TEST(Enumerate, NaturalTwoChain) {
  const SMap s{1, 1};
  EXPECT_EQ(enumerate_points(make_chain({1, 2}), s, regime::n_leq(s, 1)),
            (std::vector<LatticePoint>{{0, 0}, {0, 1}, {1, 1}}));
}

TEST(Enumerate, StrictTwoChain) {
  const SMap s{1, 1};
  EXPECT_EQ(enumerate_points(make_chain({2, 1}), s, regime::n_leq(s, 1)), (std::vector<LatticePoint>{{1, 0}}));
}

TEST(Enumerate, MatchesOdometerInEveryRegime) {
  std::mt19937_64 rng(43);
  for (int p = 1; p <= 4; ++p)
    for (const auto& P : all_labeled_posets(p)) {
      const auto s = oracle::random_s(p, 3, rng);
      const int n = p <= 3 ? 2 : 1;
      for (const Box& box : {regime::n_leq(s, n), regime::n_less(s, n + 1), regime::zplus_leq(s, n),
                             regime::cone_bounded(s, 1), regime::zplus_primed_bounded(s, 1)}) {
        const auto mine = enumerate_points(P, s, box);
        ASSERT_EQ(mine, oracle_points(P, s, box));
        ASSERT_EQ(count_points(P, s, box), Integer(static_cast<long>(mine.size())));
        for (const auto& f : mine) ASSERT_TRUE(is_partition(P, s, f));
      }
    }
}

TEST(Enumerate, RegimesAreNested) {
  std::mt19937_64 rng(47);
  for (const auto& P : all_labeled_posets(3)) {
    const auto s = oracle::random_s(3, 3, rng);
    for (int n = 0; n <= 3; ++n) {
      const auto less = enumerate_points(P, s, regime::n_less(s, n));
      const auto leq = enumerate_points(P, s, regime::n_leq(s, n));
      const auto next = enumerate_points(P, s, regime::n_leq(s, n + 1));
      EXPECT_TRUE(std::includes(leq.begin(), leq.end(), less.begin(), less.end()));
      EXPECT_TRUE(std::includes(next.begin(), next.end(), leq.begin(), leq.end()));
      const auto cone = enumerate_points(P, s, regime::cone_bounded(s, n));
      for (const auto& f : leq) EXPECT_TRUE(std::binary_search(cone.begin(), cone.end(), f));
    }
  }
}

TEST(Enumerate, CapIsEnforced) {
  Limits small;
  small.max_points = 5;
  EXPECT_THROW(enumerate_points(make_antichain(2), SMap{1, 1}, regime::n_leq(SMap{1, 1}, 3), small), resource_limit);
}

TEST(QuotientRemainder, RoundTripBothVariants) {
  const SMap s{1, 2, 3};
  for (const auto& f : enumerate_points(make_antichain(3), s, regime::scaled(s, 1, 3, 0))) {
    for (bool primed : {false, true}) {
      const auto qr = quotient_remainder(f, s, primed);
      for (int x = 1; x <= 3; ++x) {
        EXPECT_EQ(qr.q[x - 1] * s(x) + qr.r[x - 1], f[x - 1]);
        if (primed) {
          EXPECT_GT(qr.r[x - 1], 0);
          EXPECT_LE(qr.r[x - 1], s(x));
        } else {
          EXPECT_GE(qr.r[x - 1], 0);
          EXPECT_LT(qr.r[x - 1], s(x));
        }
      }
    }
  }
  const LatticePoint zero{0, 0, 0};
  EXPECT_THROW(quotient_remainder(zero, s, true), invalid_input);
}

TEST(EhrhartCounts, Examples) {
  EXPECT_EQ(ehrhart_counts(make_antichain(1), SMap{1}, 3), ints({1, 2, 3, 4}));
  EXPECT_EQ(ehrhart_counts(make_chain({1, 2, 3}), SMap{1, 2, 3}, 1)[1], 8);
  EXPECT_EQ(ehrhart_counts(make_chain({2, 1}), SMap{1, 1}, 3), ints({0, 1, 3, 6}));
}

TEST(EhrhartCounts, AntichainProductFormula) {
  std::mt19937_64 rng(53);
  for (int p = 1; p <= 4; ++p)
    for (int trial = 0; trial < 4; ++trial) {
      const auto s = oracle::random_s(p, 3, rng);
      const auto counts = ehrhart_counts(make_antichain(p), s, 4);
      for (int n = 0; n <= 4; ++n) {
        Integer expected = 1;
        for (int v : s.values()) expected *= 1 + n * v;
        EXPECT_EQ(counts[n], expected);
      }
    }
}

TEST(EulerianViaEhrhart, Examples) {
  EXPECT_EQ(eulerian_via_ehrhart(make_antichain(1), SMap{1}), (Polynomial{1}));
  EXPECT_EQ(eulerian_via_ehrhart(make_chain({1, 2, 3}), SMap{1, 2, 3}), (Polynomial{1, 4, 1}));
  EXPECT_EQ(eulerian_via_ehrhart(make_chain({2, 1}), SMap{1, 1}), (Polynomial{0, 1}));
}

TEST(EulerianViaEhrhart, AgreesWithDescentsOnRandomPosetsOfFive) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    const auto P = oracle::random_poset(5, 0.4, rng);
    const auto s = oracle::random_s(5, 2, rng);
    EXPECT_EQ(eulerian_via_ehrhart(P, s), eulerian(P, s));
  }
}

TEST(Dilation, SmallestN) {
  const SMap s{2, 3};
  const LatticePoint f{3, 3};
  EXPECT_EQ(dilation_leq(f, s), 2);
  EXPECT_EQ(dilation_less(f, s), 2);
  const LatticePoint g{4, 0};
  EXPECT_EQ(dilation_leq(g, s), 2);
  EXPECT_EQ(dilation_less(g, s), 3);
}

TEST(ChainCone, Membership) {
  const SMap s{1, 2};
  const std::vector<int> up{1, 2}, down{2, 1};
  const LatticePoint f{1, 2};
  EXPECT_TRUE(in_chain_cone(up, s, f));
  EXPECT_FALSE(in_chain_cone(down, s, f));
  const LatticePoint g{1, 1};
  EXPECT_FALSE(in_chain_cone(up, s, g));
  EXPECT_TRUE(in_chain_cone(down, s, g));
}
