#include <gtest/gtest.h>

#include <algorithm>
#include <unordered_map>

#include "coxabs/absolute_order.hpp"
#include "coxabs/element.hpp"
#include "test_util.hpp"

namespace coxabs {
namespace {

using test::build;
using test::word;

TEST(Element, FromWord) {
  auto b2 = build("B2");
  EXPECT_TRUE(word(b2, {}).is_identity());
  const Element s = word(b2, {1});
  EXPECT_TRUE(s.is_involution());
  EXPECT_FALSE(s.is_identity());
  const Element w0 = word(b2, {1, 2, 1, 2});
  EXPECT_EQ(w0, longest_element(b2));
  EXPECT_EQ(w0, word(b2, {2, 1, 2, 1}));
  for (int g = 1; g <= 2; ++g) EXPECT_TRUE(w0.commutes_with(word(b2, {g})));
}

TEST(Element, MultiplyInverse) {
  auto a3 = build("A3");
  const Element a = word(a3, {1, 2, 3, 2});
  const Element id = Element::identity(a3);
  EXPECT_EQ(a * id, a);
  EXPECT_EQ(id * a, a);
  EXPECT_TRUE((a * a.inverse()).is_identity());
  for (RootIndex t = 0; t < a3->num_positive(); ++t) {
    const Element r = Element::reflection(a3, t);
    EXPECT_TRUE((r * r).is_identity());
  }
  EXPECT_THROW(a * Element::identity(build("A3")), std::invalid_argument);
}

TEST(Element, InversionSet) {
  auto h3 = build("H3");
  EXPECT_TRUE(Element::identity(h3).inversion_set().empty());
  for (int s = 0; s < 3; ++s) {
    EXPECT_EQ(Element::simple(h3, s).inversion_set(), std::vector<RootIndex>{h3->simple_root(s)});
  }
  EXPECT_EQ(longest_element(h3).inversion_set().size(), h3->num_reflections());
}

TEST(Element, FixedAndMovedSpaces) {
  auto b3 = build("B3");
  const Element id = Element::identity(b3);
  EXPECT_EQ(id.fixed_space().dim(), 3);
  EXPECT_EQ(id.moved_space().dim(), 0);
  const Element t = Element::reflection(b3, 4);
  EXPECT_EQ(t.fixed_space().dim(), 2);
  EXPECT_EQ(t.moved_space().dim(), 1);
  EXPECT_TRUE(t.moved_space().contains(b3->root(4)));
  EXPECT_EQ(longest_element(b3).fixed_space().dim(), 0);
}

TEST(Element, ReflectionLength) {
  EXPECT_EQ(Element::identity(build("H4")).reflection_length(), 0);
  EXPECT_EQ(longest_element(build("H4")).reflection_length(), 4);
  EXPECT_EQ(word(build("A2"), {1, 2}).reflection_length(), 2);
  EXPECT_EQ(longest_element(build("A3")).reflection_length(), 2);
  EXPECT_EQ(longest_element(build("D4")).reflection_length(), 4);
  EXPECT_TRUE(longest_element(build("D4")).is_involution());
  EXPECT_EQ(longest_element(build("E8")).reflection_length(), 8);
}

TEST(Element, LongestElement) {
  auto a1 = build("A1");
  EXPECT_EQ(longest_element(a1), Element::simple(a1, 0));
}

TEST(Element, ValidateTReduced) {
  auto b2 = build("B2");
  const RootIndex s = b2->simple_root(0);
  const long tst_index = word(b2, {2, 1, 2}).as_reflection();
  ASSERT_GE(tst_index, 0);
  const auto tst = static_cast<RootIndex>(tst_index);
  EXPECT_FALSE(validate_T_reduced(*b2, std::vector<RootIndex>{s, s}));
  EXPECT_TRUE(validate_T_reduced(*b2, std::vector<RootIndex>{s, tst}));
  EXPECT_TRUE(validate_T_reduced(*b2, std::vector<RootIndex>{3}));
  EXPECT_EQ(Element::reflection(b2, s) * Element::reflection(b2, tst), longest_element(b2));
}

TEST(Element, Words) {
  EXPECT_EQ(parse_word("s1, s2,s3", 3), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(parse_word("s,t,s", 2), (std::vector<int>{0, 1, 0}));
  EXPECT_EQ(parse_word("2,1", 2), (std::vector<int>{1, 0}));
  EXPECT_TRUE(parse_word("", 4).empty());
  EXPECT_THROW(parse_word("s4", 3), std::invalid_argument);
  EXPECT_THROW(parse_word("s1,,s2", 3), std::invalid_argument);
  EXPECT_THROW(parse_word("x", 3), std::invalid_argument);
  EXPECT_EQ(word_to_string(std::vector<int>{0, 2}), "s1,s3");
}

TEST(Element, GroupOrders) {
  EXPECT_EQ(enumerate_group(build("A3")).size(), 24u);
  EXPECT_EQ(enumerate_group(build("B3")).size(), 48u);
  EXPECT_EQ(enumerate_group(build("H3")).size(), 120u);
  EXPECT_EQ(enumerate_group(build("F4")).size(), 1152u);
}

class ElementProperty : public ::testing::TestWithParam<const char*> {};

// Carter: l_T = codim V^w = dim Mov(w), Mov(w) = (V^w)^perp, |N(w)| = l_S,
// and t <=_T w iff V^w lies in the reflecting hyperplane of t.
TEST_P(ElementProperty, CarterAndInversions) {
  auto sys = build(GetParam());
  const int n = sys->rank();
  std::vector<Subspace> hyperplanes;
  for (RootIndex t = 0; t < sys->num_positive(); ++t) hyperplanes.push_back(Element::reflection(sys, t).fixed_space());
  LengthCache lengths;
  for (const Element& w : enumerate_group(sys)) {
    const Subspace fixed = w.fixed_space();
    const Subspace moved = w.moved_space();
    ASSERT_EQ(w.reflection_length(), n - fixed.dim());
    ASSERT_EQ(moved.dim(), n - fixed.dim());
    ASSERT_EQ(moved.orthogonal_complement(sys->gram()).basis(), fixed.basis());
    ASSERT_EQ(w.inversion_set().size(), static_cast<std::size_t>(w.coxeter_length()));
    ASSERT_EQ(Element::from_word(sys, w.reduced_word()), w);
    ASSERT_EQ(w.reduced_word().size(), w.inversion_set().size());
    for (RootIndex t = 0; t < sys->num_positive(); ++t) {
      ASSERT_EQ(leq_T(Element::reflection(sys, t), w, lengths), fixed.is_subspace_of(hyperplanes[t]));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Groups, ElementProperty,
                         ::testing::Values("A3", "B3", "H3", "A4", "D4", "B4", "F4", "I2(5)", "I2(6)"));

class TReducedProperty : public ::testing::TestWithParam<const char*> {};

TEST_P(TReducedProperty, IndependenceMatchesLength) {
  auto sys = build(GetParam());
  const RootIndex n = static_cast<RootIndex>(sys->num_positive());
  std::vector<RootIndex> ts;
  auto check = [&] {
    Element prod = Element::identity(sys);
    for (RootIndex t : ts) prod = prod * Element::reflection(sys, t);
    return validate_T_reduced(*sys, ts) == (prod.reflection_length() == static_cast<int>(ts.size()));
  };
  for (RootIndex a = 0; a < n; ++a) {
    for (RootIndex b = 0; b < n; ++b) {
      for (RootIndex c = 0; c < n; ++c) {
        ts = {a, b, c};
        ASSERT_TRUE(check());
      }
      ts = {a, b};
      ASSERT_TRUE(check());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Rank3, TReducedProperty, ::testing::Values("A3", "B3", "H3"));

}  // namespace
}  // namespace coxabs
