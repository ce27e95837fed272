#include <gtest/gtest.h>

#include "dlstar/construct.hpp"
#include "dlstar/coset_action.hpp"
#include "oracle.hpp"

using namespace dlstar;

namespace {
Permutation P(std::size_t n, const char* s) { return Permutation::parse(n, s); }
Group klein() { return Group(4, {P(4, "(1,2)(3,4)"), P(4, "(1,3)(2,4)")}); }
}  // namespace

TEST(CosetAction, NaturalActionOfSym4) {
  Group g = sym(4);
  auto img = coset_action(g, point_stabilizer(g, {0}));
  EXPECT_EQ(img.index, 4u);
  EXPECT_EQ(img.image.degree(), 4u);
  EXPECT_EQ(img.image.order(), 24);
}

TEST(CosetAction, WholeGroupGivesTrivialImage) {
  Group g = agl(2, 3);
  auto img = coset_action(g, g);
  EXPECT_EQ(img.index, 1u);
  EXPECT_TRUE(img.image.is_trivial());
}

TEST(CosetAction, QuotientByKlein) {
  auto img = coset_action(sym(4), klein());
  EXPECT_EQ(img.index, 6u);
  EXPECT_EQ(img.image.order(), 6);
}

TEST(CosetAction, IndexCap) { EXPECT_THROW(coset_action(sym(6), Group::trivial(6), 100), IndexCapExceeded); }

TEST(CosetAction, RequiresSubgroup) {
  EXPECT_THROW(coset_action(alt(4), Group(4, {P(4, "(1,2)")})), NotInGroup);
}

TEST(CosetAction, IsAHomomorphism) {
  Group g = wreath_imprimitive(sym(3), sym(2));
  Group h(6, {P(6, "(1,2)"), P(6, "(4,5,6)")});
  CosetAction act(g, h);
  EXPECT_EQ(act.index() * h.order(), g.order());
  for (const auto& x : g.generators()) {
    for (const auto& y : g.generators()) EXPECT_EQ(act.image(x * y), act.image(x) * act.image(y));
  }
}

TEST(QuotientDerived, Examples) {
  Group s4 = sym(4);
  EXPECT_TRUE(quotient_derived_check(s4, klein(), 1));
  EXPECT_TRUE(quotient_derived_check(s4, alt(4), 2));
  Group w = wreath_imprimitive(sym(4), sym(2));
  Group base = Group(8, {P(8, "(1,2)"), P(8, "(1,2,3,4)"), P(8, "(5,6)"), P(8, "(5,6,7,8)")});
  ASSERT_TRUE(is_normal(w, base));
  for (std::size_t n = 0; n <= 4; ++n) EXPECT_TRUE(quotient_derived_check(w, base, n)) << n;
  EXPECT_THROW(quotient_derived_check(s4, Group(4, {P(4, "(1,2)")}), 1), NotNormal);
}

// |G/N| via the coset action equals |G|/|N|, and the brute-force image
// order agrees, for the normal subgroups of Sym(4).
TEST(CosetActionProperty, QuotientOrders) {
  Group s4 = sym(4);
  for (const Group& n : {Group::trivial(4), klein(), alt(4), s4}) {
    auto img = coset_action(s4, n);
    EXPECT_EQ(img.image.order() * n.order(), 24);
    auto brute = oracle::enumerate(img.image.degree(), oracle::images_of(img.image.generators()));
    EXPECT_EQ(Integer(brute.size()), img.image.order());
  }
}
