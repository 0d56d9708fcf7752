#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace lhp;

namespace {

TruncatedSeries random_series(const std::shared_ptr<const VariableSet>& vars, std::mt19937_64& rng) {
  TruncatedSeries out(vars);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> terms(0, 6);
  const int n = terms(rng);
  for (int k = 0; k < n; ++k) {
    Exponents e;
    for (std::size_t i = 0; i < vars->size(); ++i) e.push_back(std::uniform_int_distribution<int>(0, vars->cap(i))(rng));
    out.add_term(e, coeff(rng));
  }
  return out;
}

}  // namespace

TEST(Series, Geometric) {
  const auto vars = VariableSet::make({"x1"}, {2});
  const auto g = TruncatedSeries::geometric(vars, Exponents{1});
  EXPECT_EQ(g.term_count(), 3u);
  for (int k = 0; k <= 2; ++k) EXPECT_EQ(g.coefficient(Exponents{k}), 1);
}

TEST(Series, TruncatedProduct) {
  const auto vars = VariableSet::make({"t"}, {2});
  const auto plus = TruncatedSeries::one(vars) + TruncatedSeries::monomial(vars, Exponents{1});
  const auto minus = TruncatedSeries::one(vars) - TruncatedSeries::monomial(vars, Exponents{1});
  TruncatedSeries expected = TruncatedSeries::one(vars) - TruncatedSeries::monomial(vars, Exponents{2});
  EXPECT_EQ(plus * minus, expected);
}

TEST(Series, GeometricInvertsOneMinusM) {
  const auto vars = VariableSet::make({"x", "y"}, {4, 3});
  const Exponents m{1, 2};
  const auto one_minus = TruncatedSeries::one(vars) - TruncatedSeries::monomial(vars, m);
  EXPECT_EQ(one_minus.times_geometric(m), TruncatedSeries::one(vars));
  EXPECT_THROW(TruncatedSeries::one(vars).times_geometric(Exponents{0, 0}), invalid_input);
}

TEST(Series, Substitution) {
  const auto source = VariableSet::make({"u"}, {2});
  const auto target = VariableSet::make({"q"}, {4});
  const auto s = TruncatedSeries::geometric(source, Exponents{1});
  const auto image = s.substitute(target, {{"u", Substitution{1, {{"q", 2}}}}});
  EXPECT_EQ(image.term_count(), 3u);
  for (int k : {0, 2, 4}) EXPECT_EQ(image.coefficient(Exponents{k}), 1);
  const auto scaled = s.substitute(target, {{"u", Substitution{-3, {{"q", 1}}}}});
  EXPECT_EQ(scaled.coefficient(Exponents{2}), 9);
}

TEST(Series, DropsAboveCapAndRejectsNegativeExponents) {
  const auto vars = VariableSet::make({"x"}, {1});
  TruncatedSeries s(vars);
  s.add_term(Exponents{5}, 3);
  EXPECT_TRUE(s.is_zero());
  EXPECT_THROW(s.add_term(Exponents{-1}, 1), invalid_input);
}

TEST(Series, MismatchedVariablesRejected) {
  const auto a = VariableSet::make({"x"}, {2});
  const auto b = VariableSet::make({"y"}, {2});
  EXPECT_THROW(TruncatedSeries::one(a) + TruncatedSeries::one(b), invalid_input);
}

TEST(Series, RingAxiomsOnRandomInputs) {
  const auto vars = VariableSet::make({"x", "y", "t"}, {3, 2, 4});
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_series(vars, rng), b = random_series(vars, rng), c = random_series(vars, rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(a * TruncatedSeries::one(vars), a);
  }
}

TEST(Series, CompareFindsFirstMismatch) {
  const auto vars = VariableSet::make({"x", "t"}, {3, 3});
  auto a = TruncatedSeries::geometric(vars, Exponents{1, 1});
  auto b = a;
  b.add_term(Exponents{2, 2}, 1);
  b.add_term(Exponents{0, 3}, 4);
  const auto cmp = compare_series(a, b);
  ASSERT_TRUE(cmp.mismatch);
  EXPECT_EQ(cmp.mismatch->exponents, (Exponents{0, 3}));
  EXPECT_EQ(cmp.mismatch->lhs, 0);
  EXPECT_EQ(cmp.mismatch->rhs, 4);
  EXPECT_FALSE(compare_series(a, a).mismatch);
  EXPECT_EQ(compare_series(a, a).monomials_compared, a.term_count());
}
