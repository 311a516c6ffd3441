#include <gtest/gtest.h>

#include <sstream>

#include "coxabs/coxeter_type.hpp"
#include "coxabs/element.hpp"
#include "coxabs/root_system.hpp"
#include "test_util.hpp"

namespace coxabs {
namespace {

using test::build;

TEST(RootSystem, PositiveRootCounts) {
  EXPECT_EQ(build("A2")->num_positive(), 3u);
  EXPECT_EQ(build("B3")->num_positive(), 9u);
  EXPECT_EQ(build("H3")->num_positive(), 15u);
  EXPECT_EQ(build("D4")->num_positive(), 12u);
  EXPECT_EQ(build("F4")->num_positive(), 24u);
  EXPECT_EQ(build("H4")->num_positive(), 60u);
  EXPECT_EQ(build("E6")->num_positive(), 36u);
  EXPECT_EQ(build("E7")->num_positive(), 63u);
  EXPECT_EQ(build("E8")->num_positive(), 120u);
  EXPECT_EQ(build("I2(5)")->num_positive(), 5u);
  EXPECT_EQ(build("I2(6)")->num_positive(), 6u);
}

TEST(RootSystem, ReflectionsMatchLongestLength) {
  for (const char* type : {"A3", "B3", "H3", "D5", "F4"}) {
    auto sys = build(type);
    EXPECT_EQ(static_cast<std::size_t>(longest_element(sys).coxeter_length()), sys->num_reflections()) << type;
  }
}

TEST(RootSystem, NamedD6Numbering) {
  const CoxeterMatrix m = CoxeterMatrix::named("D6");
  ASSERT_EQ(m.rank(), 6);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      int expected = i == j ? 1 : 2;
      if ((i == 0 || i == 1) && j == 2) expected = 3;
      if ((j == 0 || j == 1) && i == 2) expected = 3;
      if (i >= 2 && j >= 2 && (i - j == 1 || j - i == 1)) expected = 3;
      EXPECT_EQ(m(i, j), expected) << i << "," << j;
    }
  }
}

TEST(RootSystem, NamedSmall) {
  EXPECT_EQ(CoxeterMatrix::named("A1").entries(), (std::vector<std::vector<int>>{{1}}));
  const CoxeterMatrix b3 = CoxeterMatrix::named("B3");
  EXPECT_EQ(b3(0, 1), 4);
  EXPECT_EQ(b3(1, 2), 3);
  EXPECT_EQ(b3(0, 2), 2);
  EXPECT_EQ(TypeLabel::parse("I2(3)").to_string(), "A2");
  EXPECT_EQ(TypeLabel::parse("I2(4)").to_string(), "B2");
  EXPECT_THROW(CoxeterMatrix::named("Z3"), std::invalid_argument);
  EXPECT_THROW(CoxeterMatrix::named("E9"), std::invalid_argument);
}

TEST(RootSystem, MatrixFile) {
  std::istringstream in("3\n1 3 2\n3 1 4\n2 4 1\n");
  auto sys = RootSystem::build(CoxeterMatrix::parse(in));
  EXPECT_EQ(sys->num_positive(), 9u);
  std::istringstream bad("2\n1 3\n");
  EXPECT_THROW(CoxeterMatrix::parse(bad), std::invalid_argument);
}

TEST(RootSystem, RejectsInfiniteTypes) {
  // Affine A2 triangle and the hyperbolic (3,7) bond.
  EXPECT_THROW(RootSystem::build(CoxeterMatrix({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}})), std::domain_error);
  EXPECT_THROW(RootSystem::build(CoxeterMatrix({{1, 4, 2}, {4, 1, 4}, {2, 4, 1}})), std::domain_error);
  EXPECT_THROW(RootSystem::build(CoxeterMatrix({{1, 7}, {7, 1}})), std::invalid_argument);
  EXPECT_THROW(CoxeterMatrix({{1, 3}, {2, 1}}), std::invalid_argument);
}

class RootSystemProperty : public ::testing::TestWithParam<const char*> {};

TEST_P(RootSystemProperty, Invariants) {
  auto sys = build(GetParam());
  const auto n = sys->num_positive();
  const int rank = sys->rank();
  ASSERT_EQ(sys->num_roots(), 2 * n);
  for (RootIndex i = 0; i < sys->num_roots(); ++i) {
    // Uniform signs, unit length, negation pairing.
    int s = 0;
    for (const FieldScalar& c : sys->root(i)) {
      if (c.is_zero()) continue;
      if (s == 0) s = c.sign();
      ASSERT_EQ(c.sign(), s);
    }
    ASSERT_EQ(s, sys->is_positive(i) ? 1 : -1);
    ASSERT_TRUE(sys->form(i, i).is_one());
    ASSERT_EQ(sys->negate(sys->negate(i)), i);
    for (int k = 0; k < rank; ++k) ASSERT_TRUE((sys->root(i)[k] + sys->root(sys->negate(i))[k]).is_zero());
  }
  for (RootIndex t = 0; t < n; ++t) {
    ASSERT_EQ(sys->reflect(t, t), sys->negate(t));
    for (RootIndex i = 0; i < sys->num_roots(); ++i) {
      ASSERT_EQ(sys->reflect(t, sys->reflect(t, i)), i);
      ASSERT_EQ(sys->reflect(t, i) == i, sys->form(t, i).is_zero());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Types, RootSystemProperty,
                         ::testing::Values("A1", "A3", "B3", "B4", "D4", "D5", "F4", "H3", "H4", "I2(5)", "I2(6)",
                                           "E6"));

}  // namespace
}  // namespace coxabs
