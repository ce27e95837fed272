#include <gtest/gtest.h>

#include <random>

#include "dlstar/permutation.hpp"
#include "oracle.hpp"

using dlstar::Permutation;

namespace {
Permutation P(std::size_t n, const char* s) { return Permutation::parse(n, s); }
}  // namespace

TEST(Permutation, ParsesCycleNotation) {
  auto p = P(5, "(1,2,3)(4,5)");
  EXPECT_EQ(p(0), 1u);
  EXPECT_EQ(p(2), 0u);
  EXPECT_EQ(p(3), 4u);
  EXPECT_EQ(p.to_cycle_string(), "(1,2,3)(4,5)");
}

TEST(Permutation, WhitespaceInsideCyclesIgnored) { EXPECT_EQ(P(5, " ( 1 , 2,3 ) (4, 5)"), P(5, "(1,2,3)(4,5)")); }

TEST(Permutation, IdentityRoundTrip) {
  auto e = P(4, "()");
  EXPECT_TRUE(e.is_identity());
  EXPECT_EQ(e.to_cycle_string(), "()");
  EXPECT_EQ(Permutation::identity(4), e);
}

TEST(Permutation, NormalizesCycleOrder) { EXPECT_EQ(P(6, "(5,6)(3,1,2)").to_cycle_string(), "(1,2,3)(5,6)"); }

TEST(Permutation, RejectsRepeatedPoint) {
  EXPECT_THROW(P(4, "(1,2)(2,3)"), dlstar::InvalidPermutation);
  EXPECT_THROW(P(4, "(1,1)"), dlstar::InvalidPermutation);
}

TEST(Permutation, RejectsOutOfRange) {
  EXPECT_THROW(P(4, "(1,5)"), dlstar::PointOutOfRange);
  EXPECT_THROW(P(4, "(0,1)"), dlstar::PointOutOfRange);
}

TEST(Permutation, RejectsNonBijectionImages) {
  EXPECT_THROW(Permutation::from_images({0, 0, 1}), dlstar::InvalidPermutation);
  EXPECT_THROW(Permutation::from_images({0, 3, 1}), dlstar::InvalidPermutation);
}

TEST(Permutation, RejectsMalformedText) {
  EXPECT_THROW(P(4, "(1,2"), dlstar::Error);
  EXPECT_THROW(P(4, "1,2)"), dlstar::Error);
  EXPECT_THROW(P(4, "(a,b)"), dlstar::Error);
}

TEST(Permutation, ProductActsLeftThenRight) {
  // (p*q)(x) = q(p(x))
  auto p = P(3, "(1,2)"), q = P(3, "(2,3)");
  EXPECT_EQ((p * q)(0), 2u);
  EXPECT_EQ((p * q).to_cycle_string(), "(1,3,2)");
}

TEST(Permutation, CommutatorConvention) {
  auto a = P(3, "(1,2)"), b = P(3, "(2,3)");
  EXPECT_EQ(dlstar::commutator(a, b), a.inverse() * b.inverse() * a * b);
  EXPECT_EQ(dlstar::conjugate(a, b), b.inverse() * a * b);
  EXPECT_EQ(dlstar::conjugate(a, b), P(3, "(1,3)"));
}

TEST(Permutation, Parity) {
  EXPECT_TRUE(P(5, "(1,2,3)").is_even());
  EXPECT_FALSE(P(5, "(1,2)").is_even());
  EXPECT_TRUE(P(5, "(1,2)(3,4)").is_even());
  EXPECT_FALSE(P(5, "(1,2,3,4)").is_even());
}

TEST(Permutation, FirstMovedPoint) {
  EXPECT_FALSE(P(4, "()").first_moved_point().has_value());
  EXPECT_EQ(*P(4, "(3,4)").first_moved_point(), 2u);
}

TEST(PermutationProperty, GroupAxiomsOnRandomElements) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    std::vector<dlstar::Point> a(9), b(9), c(9);
    for (auto* v : {&a, &b, &c}) {
      std::iota(v->begin(), v->end(), 0u);
      std::shuffle(v->begin(), v->end(), rng);
    }
    auto x = Permutation::from_images(a), y = Permutation::from_images(b), z = Permutation::from_images(c);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_TRUE((x * x.inverse()).is_identity());
    EXPECT_EQ(x.is_even() == y.is_even(), (x * y).is_even());
    EXPECT_EQ(Permutation::parse(9, x.to_cycle_string()), x);
    oracle::Images ref = oracle::compose(a, b);
    EXPECT_TRUE(std::equal(ref.begin(), ref.end(), (x * y).images().begin()));
  }
}
