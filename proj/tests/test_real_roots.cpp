#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace lhp;

namespace {

Polynomial from_roots(std::initializer_list<long> roots) {
  Polynomial out{1};
  for (long r : roots) out = out * Polynomial{-r, 1};
  return out;
}

}  // namespace

TEST(RealRooted, Examples) {
  EXPECT_TRUE(is_real_rooted(Polynomial{1, 4, 1}));
  EXPECT_FALSE(is_real_rooted(Polynomial{1, 1, 1}));
  EXPECT_TRUE(is_real_rooted(Polynomial{7}));
  EXPECT_TRUE(is_real_rooted(Polynomial{}));
}

TEST(RealRooted, AgreesWithDiscriminantOnAllSmallQuadratics) {
  for (long a = -10; a <= 10; ++a)
    for (long b = -10; b <= 10; ++b)
      for (long c = -10; c <= 10; ++c)
        ASSERT_EQ(is_real_rooted(Polynomial{a, b, c}), oracle::quadratic_real_rooted(a, b, c))
            << a << " " << b << " " << c;
}

TEST(RealRooted, RepeatedRoots) {
  EXPECT_TRUE(is_real_rooted(from_roots({1, 1, 1, -2, -2})));
  EXPECT_FALSE(is_real_rooted(from_roots({1, 1}) * Polynomial{1, 0, 1}));
  EXPECT_FALSE(is_real_rooted(Polynomial{1, 0, 1}.pow(2)));
}

TEST(RealRooted, ProductsOfLinearFactorsAreRealRooted) {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> pick(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial f{1};
    for (int k = 0; k < 1 + trial % 6; ++k) f = f * Polynomial{std::vector<Rational>{pick(rng), 1 + trial % 3}};
    EXPECT_TRUE(is_real_rooted(f));
    EXPECT_FALSE(is_real_rooted(f * Polynomial{1, 1, 1}));
  }
}

TEST(Isolation, MultiplicitiesAndOrder) {
  const auto iso = isolate_real_roots(from_roots({3, -1, -1, 0}) * Polynomial{2, 0, 1});
  ASSERT_EQ(iso.roots.size(), 3u);
  EXPECT_EQ(iso.roots[0].multiplicity, 2);
  EXPECT_EQ(iso.roots[1].multiplicity, 1);
  EXPECT_EQ(iso.roots[2].multiplicity, 1);
  EXPECT_EQ(iso.total_multiplicity(), 4);
  const Rational roots[] = {-1, 0, 3};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_LT(iso.roots[i].lower, roots[i]);
    EXPECT_LE(roots[i], iso.roots[i].upper);
  }
}

TEST(Sturm, CountsIrrationalRoots) {
  const SturmSequence sturm(Polynomial{-2, 0, 1});
  EXPECT_EQ(sturm.count_all(), 2);
  EXPECT_EQ(sturm.count(Rational(1), Rational(2)), 1);
  EXPECT_EQ(sturm.count(Rational(141, 100), Rational(142, 100)), 1);
  EXPECT_EQ(sturm.count(Rational(142, 100), Rational(2)), 0);
}

TEST(Interleaves, Examples) {
  EXPECT_TRUE(interleaves(Polynomial{1, 1}, Polynomial{0, 1}));
  EXPECT_FALSE(interleaves(Polynomial{0, 1}, Polynomial{1, 1}));
  EXPECT_TRUE(interleaves(Polynomial{}, Polynomial{1, 4, 1}));
  EXPECT_TRUE(interleaves(Polynomial{1, 4, 1}, Polynomial{}));
}

TEST(Interleaves, BothDirectionsOnlyForEqualRoots) {
  const auto f = from_roots({2});
  EXPECT_TRUE(interleaves(f, f));
  const auto g = from_roots({-1, 2});
  const auto h = from_roots({-1, 2});
  EXPECT_TRUE(interleaves(g, h) && interleaves(h, g));
  const auto a = from_roots({-3, 1});
  const auto b = from_roots({-2, 2});
  EXPECT_TRUE(interleaves(a, b));
  EXPECT_FALSE(interleaves(b, a));
}

TEST(Interleaves, DegreeGapsAndSharedRoots) {
  EXPECT_TRUE(interleaves(Polynomial{1}, from_roots({5})));
  EXPECT_FALSE(interleaves(Polynomial{1}, from_roots({1, 2})));
  EXPECT_FALSE(interleaves(from_roots({1, 2}), from_roots({3})));
  EXPECT_TRUE(interleaves(from_roots({-2, 0}), from_roots({-2, -1, 0})));
  const Polynomial sqrt2{-2, 0, 1};
  const Polynomial near{std::vector<Rational>{Rational(-141, 100), 1}};
  EXPECT_TRUE(interleaves(near * Polynomial{2, 1}, sqrt2));
}

TEST(Interleaves, RejectsBadInput) {
  EXPECT_THROW(interleaves(Polynomial{1, 1, 1}, Polynomial{0, 1}), invalid_input);
  EXPECT_THROW(interleaves(Polynomial{-1, -1}, Polynomial{0, 1}), invalid_input);
}

TEST(InterlacingSequence, Examples) {
  const std::vector<Polynomial> a{Polynomial{1}, Polynomial{0, 1}, Polynomial{0, 1}};
  EXPECT_TRUE(is_interlacing_sequence(a));
  const std::vector<Polynomial> b{Polynomial{0, 1}, Polynomial{1, 1}};
  EXPECT_FALSE(is_interlacing_sequence(b));
  const std::vector<Polynomial> c{Polynomial{1, 1, 1}.pow(0)};
  EXPECT_TRUE(is_interlacing_sequence(c));
}
