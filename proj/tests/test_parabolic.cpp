#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "coxabs/absolute_order.hpp"
#include "coxabs/oracles.hpp"
#include "coxabs/parabolic.hpp"
#include "test_util.hpp"

namespace coxabs {
namespace {

using test::build;
using test::word;

std::string type_string(const Parabolic& p) { return to_string(p.type()); }

TEST(Parabolic, ClosureExamples) {
  auto b3 = build("B3");
  const Parabolic single = parabolic_closure(Element::reflection(b3, 5));
  EXPECT_EQ(single.positive_roots(), std::vector<RootIndex>{5});
  EXPECT_EQ(type_string(single), "A1");

  const Parabolic f4 = parabolic_closure(longest_element(build("F4")));
  EXPECT_EQ(f4.positive_roots().size(), 24u);
  EXPECT_EQ(type_string(f4), "F4");

  auto d6 = build("D6");
  const Parabolic fork = parabolic_closure(word(d6, {1, 2}));
  EXPECT_EQ(type_string(fork), "A1xA1");
  EXPECT_EQ(fork.positive_roots().size(), 2u);

  EXPECT_EQ(type_string(parabolic_closure(word(build("A3"), {1, 2}))), "A2");
  EXPECT_TRUE(parabolic_closure(Element::identity(b3)).is_trivial());
}

TEST(Parabolic, Intersections) {
  auto d6 = build("D6");
  const Parabolic p1 = parabolic_closure(longest_element(Parabolic::standard(d6, {0, 1, 2, 3})));
  EXPECT_EQ(type_string(p1), "D4");
  EXPECT_EQ(intersect(p1, p1).mask(), p1.mask());
  const Parabolic p2 = p1.conjugate(Element::simple(d6, 4));
  const Parabolic meet = intersect(p1, p2);
  EXPECT_EQ(type_string(meet), "A3");
  EXPECT_EQ(meet.mask(), Parabolic::standard(d6, {0, 1, 2}).mask());
  EXPECT_EQ(intersect_by_span(p1, p2).mask(), meet.mask());

  auto f4 = build("F4");
  const Parabolic b3 = Parabolic::standard(f4, {0, 1, 2});
  EXPECT_EQ(type_string(b3), "B3");
  EXPECT_EQ(type_string(intersect(b3, b3.conjugate(Element::simple(f4, 3)))), "A2");

  auto h4 = build("H4");
  const Parabolic h3 = Parabolic::standard(h4, {0, 1, 2});
  EXPECT_EQ(type_string(intersect(h3, h3.conjugate(Element::simple(h4, 3)))), "I2(5)");
}

TEST(Parabolic, SimpleSystem) {
  auto b3 = build("B3");
  EXPECT_EQ(simple_system(*b3, std::vector<RootIndex>{7}), std::vector<RootIndex>{7});
  auto a2 = build("A2");
  EXPECT_EQ(simple_system(*a2, std::vector<RootIndex>{0, 1, 2}), (std::vector<RootIndex>{0, 1}));
  const Parabolic whole = Parabolic::whole(b3);
  ASSERT_EQ(whole.simple_system().size(), 3u);
  std::multiset<int> bonds;
  const auto& ss = whole.simple_system();
  for (std::size_t i = 0; i < ss.size(); ++i) {
    for (std::size_t j = i + 1; j < ss.size(); ++j) {
      const int m = dihedral_order(*b3, ss[i], ss[j]);
      if (m > 2) bonds.insert(m);
    }
  }
  EXPECT_EQ(bonds, (std::multiset<int>{3, 4}));
  std::vector<RootIndex> not_closed{0, 1};
  EXPECT_THROW(Parabolic::from_roots(b3, not_closed), std::invalid_argument);
}

TEST(Parabolic, TypeOf) {
  EXPECT_TRUE(type_of(Parabolic::trivial(build("A2"))).empty());
  EXPECT_EQ(type_string(Parabolic::whole(build("H4"))), "H4");
  EXPECT_EQ(type_string(Parabolic::standard(build("E8"), {1, 2, 3, 4})), "D4");
}

TEST(Parabolic, Involutive) {
  auto d4 = build("D4");
  auto a3 = build("A3");
  EXPECT_TRUE(is_involutive(Parabolic::standard(a3, {0})));
  EXPECT_FALSE(is_involutive(Parabolic::whole(a3)));
  EXPECT_TRUE(is_involutive(Parabolic::whole(d4)));
  EXPECT_TRUE(is_involutive(Parabolic::trivial(a3)));
  EXPECT_FALSE(is_involutive(Parabolic::whole(build("E6"))));
  EXPECT_TRUE(is_involutive(Parabolic::whole(build("E7"))));
}

TEST(Parabolic, CentralInvolution) {
  auto b2 = build("B2");
  EXPECT_EQ(central_involution(Parabolic::standard(b2, {1})), Element::simple(b2, 1));
  EXPECT_EQ(central_involution(Parabolic::whole(b2)), word(b2, {1, 2, 1, 2}));
  auto d4 = build("D4");
  const Element c = central_involution(Parabolic::whole(d4));
  EXPECT_EQ(c.reflection_length(), 4);
  EXPECT_EQ(c, longest_element(d4));
  EXPECT_THROW(central_involution(Parabolic::whole(build("A2"))), std::domain_error);
  auto e7 = build("E7");
  const Parabolic d4_in_e7 = Parabolic::standard(e7, {1, 2, 3, 4});
  EXPECT_EQ(parabolic_closure(central_involution(d4_in_e7)).mask(), d4_in_e7.mask());
}

TEST(Parabolic, EnumerateInvolutions) {
  auto b3 = build("B3");
  EXPECT_EQ(enumerate_involutions(Parabolic::standard(b3, {2})).size(), 2u);
  auto b2 = build("B2");
  std::set<Element> b2_invol;
  for (const Element& x : enumerate_involutions(Parabolic::whole(b2))) b2_invol.insert(x);
  const std::set<Element> expected{word(b2, {}),        word(b2, {1}),          word(b2, {2}),
                                   word(b2, {1, 2, 1}), word(b2, {2, 1, 2}), word(b2, {1, 2, 1, 2})};
  EXPECT_EQ(b2_invol, expected);
  EXPECT_EQ(enumerate_involutions(Parabolic::whole(build("A2"))).size(), 4u);
}

std::set<Element> involutions_by_enumeration(const Parabolic& p) {
  std::set<Element> out;
  for (const Element& w : enumerate_group(p.system_ptr(), true)) {
    if (w.is_involution()) {
      if (p.contains(w)) out.insert(w);
    }
  }
  return out;
}

class ParabolicProperty : public ::testing::TestWithParam<const char*> {};

// Involution enumeration against the group, and the two involutive tests
// against each other, for every parabolic subgroup.
TEST_P(ParabolicProperty, InvolutionsAndInvolutiveTests) {
  auto sys = build(GetParam());
  const auto parabolics = enumerate_parabolics(Parabolic::whole(sys));
  for (const Parabolic& p : parabolics) {
    ASSERT_EQ(is_involutive(p), is_involutive_by_type(p)) << type_string(p);
    ASSERT_EQ(static_cast<int>(p.span().dim()), p.rank());
  }
  const auto whole = enumerate_involutions(Parabolic::whole(sys));
  const auto reference = involutions_by_enumeration(Parabolic::whole(sys));
  ASSERT_EQ(std::set<Element>(whole.begin(), whole.end()), reference);
}

TEST_P(ParabolicProperty, IntersectionLaws) {
  auto sys = build(GetParam());
  const auto ps = enumerate_parabolics(Parabolic::whole(sys));
  const std::size_t step = std::max<std::size_t>(1, ps.size() / 40);
  for (std::size_t i = 0; i < ps.size(); i += step) {
    for (std::size_t j = 0; j < ps.size(); j += step) {
      const Parabolic pq = intersect(ps[i], ps[j]);
      ASSERT_EQ(pq.mask(), intersect(ps[j], ps[i]).mask());
      ASSERT_EQ(pq.mask(), intersect_by_span(ps[i], ps[j]).mask());
      ASSERT_EQ(Parabolic::from_subspace(sys, pq.span()).mask(), pq.mask());
      for (std::size_t k = 0; k < ps.size(); k += step * 3) {
        ASSERT_EQ(intersect(pq, ps[k]).mask(), intersect(ps[i], intersect(ps[j], ps[k])).mask());
      }
    }
  }
}

TEST_P(ParabolicProperty, ClosureRankAndMembership) {
  auto sys = build(GetParam());
  LengthCache lengths;
  for (const Element& w : enumerate_group(sys)) {
    const Parabolic p = parabolic_closure(w);
    ASSERT_EQ(p.rank(), w.reflection_length());
    ASSERT_TRUE(p.contains(w));
    for (RootIndex t = 0; t < sys->num_positive(); ++t) {
      ASSERT_EQ(p.contains_root(t), leq_T(Element::reflection(sys, t), w, lengths));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Groups, ParabolicProperty,
                         ::testing::Values("A3", "A4", "B3", "B4", "D4", "H3", "F4", "I2(6)"));

TEST(ParabolicProperty, InvolutiveTestsLargeTypes) {
  for (const char* type : {"A5", "B5", "D5", "D6", "E6", "H4"}) {
    auto sys = build(type);
    for (const Parabolic& p : enumerate_parabolics(Parabolic::whole(sys))) {
      ASSERT_EQ(is_involutive(p), is_involutive_by_type(p)) << type << " " << type_string(p);
    }
  }
}

TEST(ParabolicProperty, OrthogonalIffCommuting) {
  for (const char* type : {"B4", "H4", "F4", "D5"}) {
    auto sys = build(type);
    for (RootIndex a = 0; a < sys->num_positive(); ++a) {
      const Element ta = Element::reflection(sys, a);
      for (RootIndex b = 0; b < sys->num_positive(); ++b) {
        ASSERT_EQ(sys->orthogonal(a, b) && a != b,
                  a != b && ta.commutes_with(Element::reflection(sys, b)));
      }
    }
  }
}

}  // namespace
}  // namespace coxabs
