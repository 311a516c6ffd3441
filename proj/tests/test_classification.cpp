#include <gtest/gtest.h>

#include <numeric>

#include "coxabs/absolute_order.hpp"
#include "coxabs/classification.hpp"
#include "coxabs/dihedral.hpp"
#include "coxabs/parabolic.hpp"
#include "test_util.hpp"

namespace coxabs {
namespace {

using test::build;
using test::word;

TEST(Classification, Decompose) {
  auto a3 = build("A3");
  const Element t = Element::reflection(a3, 4);
  const auto single = decompose_involution(t);
  ASSERT_EQ(single.factors.size(), 1u);
  EXPECT_EQ(single.factors[0].u, t);
  EXPECT_EQ(single.factors[0].type.to_string(), "A1");

  const Element w0 = longest_element(a3);
  const auto pair = decompose_involution(w0);
  ASSERT_EQ(pair.factors.size(), 2u);
  EXPECT_EQ(pair.factors[0].type.to_string(), "A1");
  EXPECT_EQ(pair.factors[1].type.to_string(), "A1");
  EXPECT_EQ(pair.factors[0].u * pair.factors[1].u, w0);
  EXPECT_TRUE(pair.factors[0].u.commutes_with(pair.factors[1].u));

  const auto b4 = decompose_involution(longest_element(build("B4")));
  ASSERT_EQ(b4.factors.size(), 1u);
  EXPECT_EQ(b4.factors[0].type.to_string(), "B4");

  EXPECT_THROW(decompose_involution(Element::identity(a3)), std::invalid_argument);
  EXPECT_THROW(decompose_involution(word(a3, {1, 2})), std::invalid_argument);
}

TEST(Classification, ByClassification) {
  auto d6 = build("D6");
  const Element d4 = central_involution(Parabolic::standard(d6, {0, 1, 2, 3}));
  EXPECT_TRUE(lattice_by_classification(d4));
  EXPECT_FALSE(lattice_by_classification(longest_element(d6)));
  EXPECT_TRUE(lattice_by_classification(Element::identity(d6)));
  EXPECT_FALSE(lattice_by_classification(longest_element(build("E7"))));
  EXPECT_TRUE(lattice_by_classification(longest_element(build("I2(6)"))));
  EXPECT_TRUE(dihedral_fast_path(8, {0, 1, 0, 1, 0, 1, 0, 1}).lattice);
}

TEST(Classification, CounterexampleWitnesses) {
  const std::pair<const char*, const char*> cases[] = {
      {"D6", "A3"}, {"D8", "A3"}, {"F4", "A2"}, {"H4", "I2(5)"}, {"E7", "A3"}, {"E8", "A3"}};
  for (auto [type, expected] : cases) {
    const CounterexampleWitness w = counterexample_witness(TypeLabel::parse(type));
    EXPECT_EQ(w.intersection_type.to_string(), expected) << type;
    EXPECT_TRUE(is_involutive(w.p1)) << type;
    EXPECT_TRUE(is_involutive(w.p2)) << type;
    EXPECT_FALSE(is_involutive(w.intersection)) << type;
    EXPECT_NE(w.p1.mask(), w.p2.mask()) << type;
    EXPECT_EQ(w.p1.conjugate(Element::simple(w.p1.system_ptr(), w.conjugator)).mask(), w.p2.mask()) << type;
  }
  const CounterexampleWitness d6 = counterexample_witness(TypeLabel::parse("D6"));
  EXPECT_EQ(d6.intersection.mask(), Parabolic::standard(d6.p1.system_ptr(), {0, 1, 2}).mask());
  EXPECT_EQ(d6.conjugator, 4);
  EXPECT_EQ(counterexample_witness(TypeLabel::parse("E8")).p1.system().num_positive(), 120u);
  EXPECT_THROW(counterexample_witness(TypeLabel::parse("D5")), std::invalid_argument);
  EXPECT_THROW(counterexample_witness(TypeLabel::parse("B4")), std::invalid_argument);
}

TEST(Classification, InvolutiveList) {
  const InvolutiveListReport a3 = verify_involutive_list(TypeLabel::parse("A3"));
  EXPECT_FALSE(a3.in_list);
  EXPECT_FALSE(a3.minus_identity);
  EXPECT_TRUE(a3.consistent());
  const InvolutiveListReport e7 = verify_involutive_list(TypeLabel::parse("E7"));
  EXPECT_TRUE(e7.in_list);
  EXPECT_TRUE(e7.minus_identity);
  EXPECT_TRUE(e7.consistent());
  const InvolutiveListReport i25 = verify_involutive_list(TypeLabel::parse("I2(5)"));
  EXPECT_FALSE(i25.in_list);
  EXPECT_TRUE(i25.consistent());
  for (const char* type : {"A1", "A2", "A5", "B2", "B3", "B6", "D4", "D5", "D6", "E6", "E8", "F4", "H3", "H4",
                           "I2(6)", "I2(7)", "I2(10)", "I2(11)"}) {
    EXPECT_TRUE(verify_involutive_list(TypeLabel::parse(type)).consistent()) << type;
  }
}

TEST(Dihedral, FastPath) {
  dihedral::Group g7(7);
  for (const dihedral::Element& w : g7.elements()) {
    if (w.reflection || w.k == 0) continue;
    const DihedralReport r = dihedral_fast_path(7, [&] {
      std::vector<int> letters;
      for (long i = 0; i < w.k; ++i) letters.insert(letters.end(), {0, 1});
      return letters;
    }());
    EXPECT_EQ(r.reflection_length, 2);
    EXPECT_TRUE(r.lattice);
  }
  const DihedralReport b2 = dihedral_fast_path(4, {0, 1, 0, 1});
  EXPECT_EQ(b2.interval_size, 6u);
  EXPECT_TRUE(b2.involution);
  EXPECT_TRUE(b2.lattice);
  const DihedralReport refl = dihedral_fast_path(9, {0, 1, 0});
  EXPECT_EQ(refl.reflection_length, 1);
  EXPECT_EQ(refl.interval_size, 2u);
  EXPECT_TRUE(refl.lattice);
  EXPECT_EQ(dihedral_fast_path(12, {}).reflection_length, 0);
}

TEST(Dihedral, GroupModel) {
  EXPECT_THROW(dihedral::Group(1), std::invalid_argument);
  for (long m : {3L, 4L, 5L, 6L, 7L, 8L, 10L}) {
    dihedral::Group g(m);
    const auto els = g.elements();
    ASSERT_EQ(els.size(), static_cast<std::size_t>(2 * m));
    const dihedral::Element s = g.s(), t = g.t();
    EXPECT_EQ(g.multiply(s, s), g.identity());
    EXPECT_EQ(g.multiply(t, t), g.identity());
    dihedral::Element st = g.identity();
    for (long i = 0; i < m; ++i) st = g.multiply(st, g.multiply(s, t));
    EXPECT_EQ(st, g.identity()) << m;
    const dihedral::Element w0 = g.longest_element();
    EXPECT_EQ(g.coxeter_length(w0), m);
    EXPECT_EQ(g.is_central(w0), m % 2 == 0);
    for (const auto& a : els) {
      EXPECT_EQ(g.multiply(a, g.inverse(a)), g.identity());
      EXPECT_LE(g.reflection_length(a), 2);
      for (const auto& b : els) {
        for (const auto& c : {s, t, w0}) {
          ASSERT_EQ(g.multiply(g.multiply(a, b), c), g.multiply(a, g.multiply(b, c)));
        }
      }
    }
  }
}

// The symbolic model agrees with the root-system model where both exist.
TEST(Dihedral, MatchesRootSystems) {
  for (long m : {3L, 4L, 5L, 6L}) {
    dihedral::Group g(m);
    auto sys = RootSystem::build(CoxeterMatrix({{1, static_cast<int>(m)}, {static_cast<int>(m), 1}}));
    for (const dihedral::Element& x : g.elements()) {
      std::vector<int> w;
      const std::string text = x == g.identity() ? "" : g.word(x);
      for (char c : text) {
        if (c == '1') w.push_back(0);
        if (c == '2') w.push_back(1);
      }
      ASSERT_EQ(g.from_word(w), x);
      const Element e = Element::from_word(sys, w);
      EXPECT_EQ(e.coxeter_length(), g.coxeter_length(x));
      EXPECT_EQ(e.reflection_length(), g.reflection_length(x));
      if (e.is_involution()) {
        EXPECT_EQ(interval_of_involution(e).size(), dihedral::interval(g, x).size());
      }
    }
  }
}

class ClassificationProperty : public ::testing::TestWithParam<const char*> {};

// Product structure of intervals and additivity of l_T over the factors.
TEST_P(ClassificationProperty, FactorsMultiply) {
  auto sys = build(GetParam());
  LengthCache lengths;
  for (const Element& u : enumerate_involutions(Parabolic::whole(sys))) {
    if (u.is_identity()) continue;
    const auto dec = decompose_involution(u);
    Element product = Element::identity(sys);
    int total = 0;
    std::size_t size = 1;
    for (const InvolutionFactor& f : dec.factors) {
      product = product * f.u;
      total += f.u.reflection_length();
      size *= interval_of_involution(f.u, lengths).size();
      for (const InvolutionFactor& g : dec.factors) ASSERT_TRUE(f.u.commutes_with(g.u));
    }
    ASSERT_EQ(product, u);
    ASSERT_EQ(total, u.reflection_length());
    ASSERT_EQ(size, interval_of_involution(u, lengths).size());
    ASSERT_EQ(lattice_by_classification(u), is_lattice_structural(u).is_lattice);
  }
}

INSTANTIATE_TEST_SUITE_P(Groups, ClassificationProperty, ::testing::Values("A4", "B4", "D4", "D5", "H3", "F4"));

}  // namespace
}  // namespace coxabs
