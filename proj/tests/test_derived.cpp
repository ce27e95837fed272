#include <gtest/gtest.h>

#include <random>

#include "dlstar/construct.hpp"
#include "dlstar/derived.hpp"
#include "dlstar/supplement.hpp"
#include "oracle.hpp"

using namespace dlstar;

namespace {
Permutation P(std::size_t n, const char* s) { return Permutation::parse(n, s); }
}  // namespace

TEST(CommutatorSubgroup, Sym3) {
  Group s3 = sym(3);
  EXPECT_EQ(commutator_subgroup(s3, s3, s3).order(), 3);
  EXPECT_EQ(oracle::derived_orders(3, oracle::images_of(s3.generators()))[1], 3u);
}

TEST(CommutatorSubgroup, WithTrivial) {
  Group g = sym(4);
  EXPECT_TRUE(commutator_subgroup(g, g, Group::trivial(4)).is_trivial());
}

TEST(CommutatorSubgroup, PerfectGroup) { EXPECT_EQ(commutator_subgroup(alt(5), alt(5), alt(5)).order(), 60); }

TEST(CommutatorSubgroup, MixedPair) {
  // [Sym(4), Alt(4)] = Alt(4)
  Group g = sym(4);
  EXPECT_EQ(commutator_subgroup(g, g, alt(4)).order(), 12);
}

TEST(DerivedSeries, Sym4) {
  auto r = derived_series(sym(4));
  EXPECT_EQ(r.orders, (std::vector<Integer>{24, 12, 4, 1}));
  EXPECT_EQ(r.dlstar, 3u);
  EXPECT_TRUE(r.is_solvable);
  EXPECT_FALSE(r.is_perfect);
}

TEST(DerivedSeries, Alt5) {
  auto r = derived_series(alt(5));
  EXPECT_EQ(r.orders, std::vector<Integer>{60});
  EXPECT_EQ(r.dlstar, 0u);
  EXPECT_TRUE(r.is_perfect);
  EXPECT_FALSE(r.is_solvable);
}

TEST(DerivedSeries, ImprimitiveWreath44) {
  auto r = derived_series(wreath_imprimitive(sym(4), sym(4)));
  EXPECT_EQ(r.dlstar, 6u);
  EXPECT_TRUE(r.is_solvable);
}

TEST(PerfectCore, Examples) {
  EXPECT_EQ(perfect_core(sym(5)).order(), 60);
  EXPECT_EQ(perfect_core(alt(5)).order(), 60);
  EXPECT_TRUE(perfect_core(sym(4)).is_trivial());
  EXPECT_EQ(perfect_core(direct_product(sym(5), sym(3))).order(), 60);
}

TEST(DlStar, Examples) {
  EXPECT_EQ(dl_star(agl(2, 3)), 5u);
  EXPECT_EQ(dl_star(Group::trivial(3)), 0u);
  EXPECT_THROW(derived_length(alt(5)), NotSolvable);
  EXPECT_EQ(derived_length(sym(4)), 3u);
  EXPECT_EQ(dl_star(sym(5)), 1u);
}

TEST(NormalClosure, Examples) {
  EXPECT_EQ(normal_closure(alt(5), {P(5, "(1,2,3,4,5)")}).order(), 60);
  EXPECT_TRUE(normal_closure(alt(5), {}).is_trivial());
  EXPECT_EQ(normal_closure(sym(4), {P(4, "(1,2)(3,4)")}).order(), 4);
  EXPECT_THROW(normal_closure(alt(5), {P(5, "(1,2)")}), NotInGroup);
}

TEST(IsNormal, Examples) {
  Group s4 = sym(4);
  EXPECT_TRUE(is_normal(s4, alt(4)));
  EXPECT_FALSE(is_normal(s4, Group(4, {P(4, "(1,2)")})));
}

// Derived series against brute-force enumeration for random subgroups of Sym(6).
TEST(DerivedProperty, MatchesBruteForce) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 40; ++k) {
    std::vector<Permutation> gens;
    for (int i = 0; i < 2; ++i) {
      std::vector<Point> v(6);
      std::iota(v.begin(), v.end(), 0u);
      std::shuffle(v.begin(), v.end(), rng);
      gens.push_back(Permutation::from_images(v));
    }
    if (k % 3 == 0) gens[0] = gens[0] * gens[0];
    Group g(6, gens);
    auto brute = oracle::derived_orders(6, oracle::images_of(gens));
    auto r = derived_series(g);
    ASSERT_EQ(r.orders.size(), brute.size());
    for (std::size_t i = 0; i < brute.size(); ++i) EXPECT_EQ(r.orders[i], Integer(brute[i]));
  }
}

TEST(Supplement, SolvableGroupIsItsOwnSupplement) {
  Group g = sym(4);
  EXPECT_EQ(find_solvable_supplement(g, 10).order(), 24);
}

TEST(Supplement, PerfectGroupHasTrivialSupplement) { EXPECT_TRUE(find_solvable_supplement(alt(5), 10).is_trivial()); }

TEST(Supplement, Sym5) {
  Group g = sym(5);
  Group s = find_solvable_supplement(g, 50);
  EXPECT_TRUE(is_solvable(s));
  EXPECT_EQ(join(perfect_core(g), s).order(), 120);
  EXPECT_EQ(derived_length(s), dl_star(g));
}

TEST(Supplement, MixedDirectProduct) {
  Group g = direct_product(sym(5), sym(4));
  Group s = find_solvable_supplement(g, 200);
  EXPECT_TRUE(is_solvable(s));
  EXPECT_EQ(join(perfect_core(g), s).order(), g.order());
  EXPECT_LE(derived_length(s), dl_star(g));
}
