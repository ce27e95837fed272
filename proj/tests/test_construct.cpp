#include <gtest/gtest.h>

#include "dlstar/construct.hpp"
#include "dlstar/derived.hpp"
#include "dlstar/expr.hpp"
#include "oracle.hpp"

using namespace dlstar;

TEST(Basic, Orders) {
  EXPECT_EQ(sym(5).order(), 120);
  EXPECT_EQ(alt(5).order(), 60);
  EXPECT_EQ(alt(6).order(), 360);
  EXPECT_EQ(cyclic(7).order(), 7);
  EXPECT_EQ(dihedral(5).order(), 10);
  EXPECT_EQ(dihedral(6).order(), 12);
  EXPECT_EQ(sym(1).order(), 1);
  EXPECT_EQ(alt(2).order(), 1);
  EXPECT_EQ(alt(3).order(), 3);
}

TEST(Basic, InvalidParameters) {
  EXPECT_THROW(sym(0), InvalidArgument);
  EXPECT_THROW(dihedral(2), InvalidArgument);
}

TEST(Basic, DerivedLengths) {
  EXPECT_EQ(dl_star(sym(4)), 3u);
  EXPECT_EQ(oracle::dl_star(4, sym(4).generators()), 3u);
  for (std::size_t n = 5; n <= 9; ++n) EXPECT_EQ(dl_star(alt(n)), 0u) << n;
}

TEST(Linear, Orders) {
  EXPECT_EQ(agl(2, 3).order(), 432);
  EXPECT_EQ(agl(1, 5).order(), 20);
  EXPECT_EQ(gl(2, 3).order(), 48);
  EXPECT_EQ(sl(2, 3).order(), 24);
  EXPECT_EQ(gl(3, 2).order(), 168);
  EXPECT_EQ(agl(3, 2).order(), 1344);
  EXPECT_EQ(sl(2, 5).order(), 120);
  EXPECT_THROW(agl(2, 4), InvalidArgument);
  EXPECT_THROW(gl(0, 3), InvalidArgument);
}

TEST(Linear, Agl23MatchesBruteForce) {
  Group g = agl(2, 3);
  auto brute = oracle::derived_orders(9, oracle::images_of(g.generators()));
  EXPECT_EQ(brute, (std::vector<std::size_t>{432, 216, 72, 18, 9, 1}));
  EXPECT_EQ(dl_star(g), 5u);
}

TEST(DirectProduct, Examples) {
  EXPECT_EQ(dl_star(direct_product(sym(3), sym(4))), 3u);
  EXPECT_EQ(direct_product(sym(2), sym(3)).order(), 12);
  EXPECT_EQ(dl_star(direct_product(alt(5), alt(5))), 0u);
}

TEST(Wreath, Imprimitive) {
  Group w = wreath_imprimitive(sym(4), sym(4));
  EXPECT_EQ(w.degree(), 16u);
  EXPECT_EQ(w.order(), Integer(24) * 24 * 24 * 24 * 24);
  EXPECT_EQ(dl_star(w), 6u);
  Group w2 = wreath_imprimitive(sym(2), sym(3));
  EXPECT_EQ(w2.order(), 48);
  EXPECT_EQ(oracle::dl_star(6, w2.generators()), dl_star(w2));
}

TEST(Wreath, IntransitiveTop) {
  // Top = <(1,2)> on 3 points: blocks 1,2 swapped, block 3 fixed.
  Group top(3, {Permutation::parse(3, "(1,2)")});
  Group w = wreath_imprimitive(sym(3), top);
  EXPECT_EQ(w.order(), Integer(6 * 6 * 6 * 2));
}

TEST(Wreath, ProductAction) {
  Group g = wreath_product_action(alt(5), alt(5));
  EXPECT_EQ(g.degree(), 3125u);
  EXPECT_EQ(g.order(), Integer(60) * 60 * 60 * 60 * 60 * 60);
  EXPECT_TRUE(g.is_transitive());
  Group small = wreath_product_action(sym(3), sym(2));
  EXPECT_EQ(small.degree(), 9u);
  EXPECT_EQ(small.order(), 72);
  Limits lim;
  lim.degree_cap = 1000;
  EXPECT_THROW(wreath_product_action(alt(5), alt(5), lim), DegreeCapExceeded);
}

TEST(IntersectWithAlt, Examples) {
  EXPECT_EQ(intersect_with_alt(sym(4)).order(), 12);
  EXPECT_EQ(intersect_with_alt(alt(5)).order(), 60);
  Group w = wreath_imprimitive(sym(5), sym(4));
  Group e = intersect_with_alt(w);
  EXPECT_EQ(e.order() * 2, w.order());
  for (const auto& x : e.generators()) EXPECT_TRUE(x.is_even());
  EXPECT_EQ(dl_star(e), 4u);
}

TEST(Diagonal, Alt5) {
  auto d = diagonal_action(alt(5));
  EXPECT_EQ(d.group.degree(), 60u);
  EXPECT_EQ(d.group.order(), 3600);
  EXPECT_TRUE(d.group.is_transitive());
  EXPECT_EQ(d.stabilizer.order(), 60);
  EXPECT_EQ(dl_star(d.stabilizer), 0u);
  EXPECT_EQ(dl_star(d.group), 0u);
  EXPECT_THROW(diagonal_action(alt(5), 50), Error);
}

TEST(ExBad, Sym3) {
  auto e = exbad(sym(3));
  EXPECT_EQ(e.wreath.order(), Integer(6 * 6 * 6 * 6 * 6) * 60);
  EXPECT_EQ(e.group.order() * 2, e.wreath.order());
  EXPECT_EQ(dl_star(e.group), 0u);
  EXPECT_TRUE(is_solvable(e.stabilizer));
  EXPECT_GE(derived_length(e.stabilizer), 2u);
  EXPECT_TRUE(e.group.contains(e.stabilizer));
}

TEST(ExBad, Sym4) {
  auto e = exbad(sym(4));
  EXPECT_EQ(dl_star(e.group), 0u);
  EXPECT_GE(derived_length(e.stabilizer), 3u);
}

TEST(ExBad, RejectsNonSolvable) { EXPECT_THROW(exbad(alt(5)), NotSolvable); }

TEST(Expr, ParseAndPrint) {
  auto e = parse_construction(" wreath( sym(4) , sym(4) ) ");
  EXPECT_EQ(to_string(e), "wreath(sym(4),sym(4))");
  EXPECT_EQ(parse_construction(to_string(e)), e);
  EXPECT_THROW(parse_construction("wreath(sym(4))"), ParseError);
  EXPECT_THROW(parse_construction("foo(3)"), ParseError);
  EXPECT_THROW(parse_construction("sym(3) x"), ParseError);
}

TEST(Expr, BuildMatchesDirectCalls) {
  EXPECT_EQ(build("andalt(wreath(sym(5),sym(4)))").order(), intersect_with_alt(wreath_imprimitive(sym(5), sym(4))).order());
  EXPECT_EQ(build("agl(2,3)").order(), 432);
  EXPECT_EQ(build("diag(alt(5))").degree(), 60u);
  EXPECT_EQ(build("direct(cyclic(3),dihedral(4))").order(), 24);
}
