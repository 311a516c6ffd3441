#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "coxabs/absolute_order.hpp"
#include "coxabs/oracles.hpp"
#include "coxabs/parabolic.hpp"
#include "test_util.hpp"

namespace coxabs {
namespace {

using test::build;
using test::word;

TEST(AbsoluteOrder, Leq) {
  auto b2 = build("B2");
  const Element w0 = longest_element(b2);
  const Element id = Element::identity(b2);
  for (const Element& w : enumerate_group(b2)) EXPECT_TRUE(leq_T(id, w));
  EXPECT_TRUE(leq_T(word(b2, {1}), w0));
  EXPECT_TRUE(leq_T(word(b2, {2}), w0));
  auto a3 = build("A3");
  const Element u = word(a3, {1, 3});
  EXPECT_FALSE(leq_T(word(a3, {2}), u));
  EXPECT_EQ((word(a3, {2}) * u).reflection_length(), 3);
  EXPECT_TRUE(leq_T(word(a3, {3}), u));
}

TEST(AbsoluteOrder, IntervalExamples) {
  auto b2 = build("B2");
  EXPECT_EQ(interval_of_involution(Element::identity(b2)).size(), 1u);
  const IntervalPoset p = interval_of_involution(longest_element(b2));
  ASSERT_EQ(p.size(), 6u);
  EXPECT_EQ(p.ranks, (std::vector<int>{0, 1, 1, 1, 1, 2}));
  EXPECT_TRUE(p.elements.front().is_identity());
  EXPECT_EQ(p.elements.back(), longest_element(b2));
  EXPECT_EQ(p.hasse.size(), 8u);
  EXPECT_THROW(interval_of_involution(word(b2, {1, 2})), std::invalid_argument);

  auto d4 = build("D4");
  std::size_t involutions = 0;
  for (const Element& w : enumerate_group(d4)) involutions += w.is_involution();
  EXPECT_EQ(involutions, 44u);
  EXPECT_EQ(interval_of_involution(longest_element(d4)).size(), involutions);
}

TEST(AbsoluteOrder, IntervalSizes) {
  EXPECT_EQ(interval_of_involution(longest_element(build("B3"))).size(), 20u);
  EXPECT_EQ(interval_of_involution(longest_element(build("H3"))).size(), 32u);
  EXPECT_EQ(interval_of_involution(longest_element(build("B4"))).size(), 76u);
  EXPECT_EQ(interval_of_involution(longest_element(build("F4"))).size(), 140u);
  EXPECT_EQ(interval_of_involution(longest_element(build("H4"))).size(), 572u);
  EXPECT_EQ(interval_of_involution(longest_element(build("D6"))).size(), 752u);
}

TEST(AbsoluteOrder, BruteForceLattice) {
  EXPECT_TRUE(is_lattice_bruteforce(interval_of_involution(longest_element(build("B3")))).is_lattice);
  auto a2 = build("A2");
  EXPECT_TRUE(is_lattice_bruteforce(interval_of_involution(Element::reflection(a2, 2))).is_lattice);

  const IntervalPoset d6 = interval_of_involution(longest_element(build("D6")));
  const BruteForceVerdict v = is_lattice_bruteforce(d6);
  ASSERT_FALSE(v.is_lattice);
  ASSERT_TRUE(v.witness);
  EXPECT_GE(v.witness->maximal_lower_bounds.size(), 2u);
  EXPECT_EQ(d6.ranks[v.witness->a], 4);
  EXPECT_EQ(d6.ranks[v.witness->b], 4);
  for (std::size_t x : {v.witness->a, v.witness->b}) {
    EXPECT_EQ(to_string(parabolic_closure(d6.elements[x]).type()), "D4");
  }
}

TEST(AbsoluteOrder, FindMissingMeet) {
  // Bowtie: two minimal-ish elements below two tops, plus a bottom and top.
  //   0 < 1,2 < 3,4 < 5
  std::vector<Bitset> below(6, Bitset(6));
  auto set = [&](std::size_t j, std::initializer_list<std::size_t> xs) {
    for (std::size_t x : xs) below[j].set(x);
  };
  set(0, {0});
  set(1, {0, 1});
  set(2, {0, 2});
  set(3, {0, 1, 2, 3});
  set(4, {0, 1, 2, 4});
  set(5, {0, 1, 2, 3, 4, 5});
  const auto failure = find_missing_meet(below);
  ASSERT_TRUE(failure);
  EXPECT_EQ(failure->a, 3u);
  EXPECT_EQ(failure->b, 4u);
  EXPECT_EQ(failure->maximal_lower_bounds, (std::vector<std::size_t>{1, 2}));
  // Dropping 2 < 3 makes 1 the meet of 3 and 4.
  below[3] = Bitset(6);
  set(3, {0, 1, 3});
  EXPECT_FALSE(find_missing_meet(below));
}

TEST(AbsoluteOrder, Structural) {
  EXPECT_TRUE(is_lattice_structural(longest_element(build("H3"))).is_lattice);
  EXPECT_TRUE(is_lattice_structural(Element::identity(build("H3"))).is_lattice);
  const StructuralVerdict f4 = is_lattice_structural(longest_element(build("F4")));
  ASSERT_FALSE(f4.is_lattice);
  ASSERT_TRUE(f4.witness);
  EXPECT_FALSE(is_involutive(f4.witness->intersection));
  EXPECT_TRUE(is_involutive(f4.witness->closure_v));
  EXPECT_TRUE(is_involutive(f4.witness->closure_w));
  EXPECT_EQ(to_string(is_lattice_structural(longest_element(build("D6"))).witness->intersection.type()), "A3");
  EXPECT_THROW(is_lattice_structural(word(build("A3"), {1, 2})), std::invalid_argument);
}

TEST(AbsoluteOrder, Meet) {
  auto b2 = build("B2");
  const IntervalPoset p = interval_of_involution(longest_element(b2));
  const Element s = word(b2, {1});
  const Element tst = word(b2, {2, 1, 2});
  EXPECT_TRUE(meet(p, s, tst).is_identity());
  EXPECT_EQ(meet(p, s, p.top), s);
  EXPECT_EQ(meet(p, tst, tst), tst);

  auto b4 = build("B4");
  const IntervalPoset q = interval_of_involution(longest_element(b4));
  for (std::size_t i = 0; i < q.size(); i += 7) {
    for (std::size_t j = 0; j < q.size(); j += 5) {
      const Element m = meet(q, q.elements[i], q.elements[j]);
      const long k = q.index_of(m);
      ASSERT_GE(k, 0);
      ASSERT_TRUE(q.leq(k, i));
      ASSERT_TRUE(q.leq(k, j));
    }
  }

  auto d6 = build("D6");
  const IntervalPoset r = interval_of_involution(longest_element(d6));
  const BruteForceVerdict v = is_lattice_bruteforce(r);
  ASSERT_TRUE(v.witness);
  EXPECT_THROW(meet(r, r.elements[v.witness->a], r.elements[v.witness->b]), std::domain_error);
}

TEST(AbsoluteOrder, PosetIsomorphism) {
  EXPECT_TRUE(poset_isomorphism_check(Element::identity(build("B3"))).ok);
  const IsomorphismReport b3 = poset_isomorphism_check(longest_element(build("B3")));
  EXPECT_TRUE(b3.ok) << b3.failure;
  EXPECT_EQ(b3.interval_size, b3.involutive_parabolics);
  const IsomorphismReport h4 = poset_isomorphism_check(longest_element(build("H4")));
  EXPECT_TRUE(h4.ok) << h4.failure;
  EXPECT_EQ(h4.interval_size, 572u);
}

TEST(AbsoluteOrder, TWords) {
  auto b2 = build("B2");
  LengthCache lengths;
  const Element w0 = longest_element(b2);
  const auto tw = t_word(w0, lengths);
  ASSERT_EQ(tw.size(), 2u);
  EXPECT_EQ(Element::reflection(b2, tw[0]) * Element::reflection(b2, tw[1]), w0);
  EXPECT_EQ(t_word_to_string(*b2, {}), "1");
  EXPECT_EQ(t_word_to_string(*b2, {b2->simple_root(0)}), "s1");
}

TEST(AbsoluteOrder, JsonAndDot) {
  auto b2 = build("B2");
  LengthCache lengths;
  const IntervalPoset p = interval_of_involution(longest_element(b2));
  const auto j = nlohmann::json::parse(interval_to_json(p, "B2", "s1,s2,s1,s2", lengths));
  EXPECT_EQ(j["top_word"], "s1,s2,s1,s2");
  EXPECT_EQ(j["type"], "B2");
  EXPECT_EQ(j["elements"].size(), 6u);
  EXPECT_EQ(j["hasse"].size(), 8u);
  EXPECT_EQ(j["is_lattice"], true);
  EXPECT_TRUE(j["witness"].is_null());
  EXPECT_EQ(j["elements"][0]["t_word"], "1");
  EXPECT_EQ(j["elements"][5]["rank"], 2);
  const std::string dot = interval_to_dot(p, lengths);
  EXPECT_NE(dot.find("digraph interval"), std::string::npos);
  EXPECT_NE(dot.find("n0 -> n1"), std::string::npos);
  EXPECT_EQ(interval_to_dot(p, lengths), dot);

  const IntervalPoset d6 = interval_of_involution(longest_element(build("D6")));
  const auto k = nlohmann::json::parse(interval_to_json(d6, "D6", "", lengths));
  EXPECT_EQ(k["is_lattice"], false);
  EXPECT_GE(k["witness"]["maximal_lower_bounds"].size(), 2u);
}

class IntervalProperty : public ::testing::TestWithParam<const char*> {};

TEST_P(IntervalProperty, GradedSelfDualAndAgreesWithOracle) {
  auto sys = build(GetParam());
  const oracle::CayleyLengths d(sys);
  LengthCache lengths;
  for (const Element& u : enumerate_involutions(Parabolic::whole(sys))) {
    const IntervalPoset p = interval_of_involution(u, lengths);
    ASSERT_TRUE(p.elements.front().is_identity());
    ASSERT_EQ(p.elements.back(), u);
    for (std::size_t i = 0; i < p.size(); ++i) {
      const long c = p.index_of(p.elements[i].inverse() * u);
      ASSERT_GE(c, 0);
      ASSERT_EQ(p.ranks[i] + p.ranks[c], p.ranks.back());
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (p.leq(i, j) && i != j) {
          ASSERT_LT(p.ranks[i], p.ranks[j]);
        }
      }
    }
    for (auto [a, b] : p.hasse) ASSERT_EQ(p.ranks[a] + 1, p.ranks[b]);
    const IntervalPoset q = oracle::cayley_interval(u, d);
    ASSERT_EQ(q.elements, p.elements);
    ASSERT_EQ(q.hasse, p.hasse);
    ASSERT_EQ(is_lattice_bruteforce(p).is_lattice, is_lattice_structural(p).is_lattice);
  }
}

INSTANTIATE_TEST_SUITE_P(Groups, IntervalProperty, ::testing::Values("A3", "B3", "H3", "D4", "B4", "A1xB3"));

}  // namespace
}  // namespace coxabs
