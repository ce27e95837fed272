#include <gtest/gtest.h>

#include "dlstar/rootsys.hpp"
#include "oracle.hpp"

using namespace dlstar::rootsys;

namespace {
std::vector<LieType> all_types() {
  std::vector<LieType> v;
  for (int n = 1; n <= 8; ++n) v.push_back({Family::A, n});
  for (int n = 2; n <= 8; ++n) v.push_back({Family::B, n});
  for (int n = 2; n <= 8; ++n) v.push_back({Family::C, n});
  for (int n = 4; n <= 8; ++n) v.push_back({Family::D, n});
  for (int n : {6, 7, 8}) v.push_back({Family::E, n});
  v.push_back({Family::F, 4});
  v.push_back({Family::G, 2});
  return v;
}

std::size_t expected_count(const LieType& t) {
  int n = t.rank;
  switch (t.family) {
    case Family::A: return static_cast<std::size_t>(n * (n + 1) / 2);
    case Family::B:
    case Family::C: return static_cast<std::size_t>(n * n);
    case Family::D: return static_cast<std::size_t>(n * (n - 1));
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}
}  // namespace

TEST(RootSystem, CountsMatchReflectionOrbit) {
  for (const auto& t : all_types()) {
    auto roots = build_root_system(t);
    auto orbit = oracle::positive_roots(cartan_matrix(t));
    std::set<std::vector<int>> mine;
    for (const auto& r : roots) mine.insert(r.coeffs);
    EXPECT_EQ(mine, orbit) << t.name();
    EXPECT_EQ(roots.size(), expected_count(t)) << t.name();
  }
}

TEST(RootSystem, SortedByHeight) {
  auto roots = build_root_system({Family::E, 7});
  for (std::size_t i = 1; i < roots.size(); ++i) EXPECT_LE(height(roots[i - 1]), height(roots[i]));
}

TEST(HighestRoot, Examples) {
  EXPECT_EQ(highest_root({Family::E, 6}).coeffs, (std::vector<int>{1, 2, 2, 3, 2, 1}));
  EXPECT_EQ(height(highest_root({Family::E, 6})), 11);
  EXPECT_EQ(highest_root({Family::A, 3}).coeffs, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(highest_root({Family::E, 8}).coeffs, (std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2}));
  EXPECT_EQ(highest_root({Family::G, 2}).coeffs, (std::vector<int>{3, 2}));
  EXPECT_EQ(highest_root({Family::F, 4}).coeffs, (std::vector<int>{2, 3, 4, 2}));
  EXPECT_EQ(highest_root({Family::B, 3}).coeffs, (std::vector<int>{1, 2, 2}));
  EXPECT_EQ(highest_root({Family::C, 3}).coeffs, (std::vector<int>{2, 2, 1}));
}

TEST(HighestRoot, HeightIsCoxeterNumberMinusOne) {
  for (const auto& t : all_types()) {
    int h = height(highest_root(t));
    EXPECT_EQ(static_cast<std::size_t>((h + 1) * t.rank), 2 * expected_count(t)) << t.name();
  }
}

// The highest root dominates every positive root coefficientwise, so its
// level is the maximum level for every choice of removed nodes.
TEST(HighestRoot, RealizesMaxLevel) {
  for (const auto& t : all_types()) {
    Root top = highest_root(t);
    for (int i = 1; i <= t.rank; ++i) EXPECT_EQ(max_level(t, {{i}}), level(top, {{i}})) << t.name() << " a" << i;
  }
}

TEST(Level, Examples) {
  Root r{{1, 2, 2, 3, 2, 1}};
  EXPECT_EQ(level(r, {{4}}), 3);
  EXPECT_EQ(level(r, {{2, 5}}), 4);
  EXPECT_EQ(level(r, {{1, 6}}), 2);
}

TEST(MaxLevel, Examples) {
  EXPECT_EQ(max_level({Family::E, 6}, {{2, 5}}), 4);
  EXPECT_EQ(max_level({Family::E, 6}, {{4}}), 3);
  EXPECT_EQ(max_level({Family::E, 8}, {{4}}), 6);
  for (int n = 1; n <= 7; ++n) {
    for (int i = 1; i <= n; ++i) EXPECT_EQ(max_level({Family::A, n}, {{i}}), 1);
  }
  EXPECT_THROW(max_level({Family::E, 6}, {{7}}), dlstar::InvalidArgument);
  EXPECT_THROW(max_level({Family::E, 6}, {{}}), dlstar::InvalidArgument);
}

TEST(Choices, Modes) {
  EXPECT_EQ(maximal_parabolic_choices({Family::E, 8}).size(), 8u);
  auto e6 = maximal_parabolic_choices({Family::E, 6, OrbitMode::order2});
  std::vector<std::vector<int>> got;
  for (const auto& c : e6) got.push_back(c.removed);
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<std::vector<int>>{{1, 6}, {2}, {3, 5}, {4}}));
  auto d4 = maximal_parabolic_choices({Family::D, 4, OrbitMode::order3});
  EXPECT_NE(std::find(d4.begin(), d4.end(), ParabolicChoice{{1, 3, 4}}), d4.end());
  auto a5 = maximal_parabolic_choices({Family::A, 5, OrbitMode::order2});
  EXPECT_EQ(a5.size(), 3u);
}

TEST(Choices, InadmissibleTypes) {
  EXPECT_THROW(validate({Family::E, 5}), dlstar::InvalidArgument);
  EXPECT_THROW(validate({Family::D, 2}), dlstar::InvalidArgument);
  EXPECT_THROW(validate({Family::D, 5, OrbitMode::order3}), dlstar::InvalidArgument);
  EXPECT_THROW(validate({Family::E, 7, OrbitMode::order2}), dlstar::InvalidArgument);
  EXPECT_THROW(validate({Family::A, 0}), dlstar::InvalidArgument);
}

TEST(Choices, DiagramAutomorphismPreservesCartanMatrix) {
  for (LieType t : {LieType{Family::A, 5, OrbitMode::order2}, LieType{Family::D, 6, OrbitMode::order2},
                    LieType{Family::D, 4, OrbitMode::order3}, LieType{Family::E, 6, OrbitMode::order2}}) {
    auto c = cartan_matrix(t);
    auto s = diagram_automorphism(t);
    for (int i = 0; i < t.rank; ++i) {
      for (int j = 0; j < t.rank; ++j) EXPECT_EQ(c[i][j], c[s[i]][s[j]]) << t.name();
    }
  }
}

TEST(UnipotentBound, Examples) {
  EXPECT_EQ(unipotent_dl_bound({Family::E, 8}, {{4}}).value, 3u);
  EXPECT_EQ(unipotent_dl_bound({Family::A, 4}, {{2}}).value, 1u);
  for (const auto& t : all_types()) {
    if (!is_classical(t.family)) continue;
    for (const auto& j : maximal_parabolic_choices(t)) EXPECT_LE(unipotent_dl_bound(t, j).value, 2u) << t.name();
  }
  for (const auto& t : all_types()) {
    for (const auto& j : maximal_parabolic_choices(t)) EXPECT_LE(unipotent_dl_bound(t, j).value, 3u) << t.name();
  }
}

TEST(LeviBound, Examples) {
  EXPECT_EQ(levi_dlstar_bound({Family::A, 6}, 2, true).value, 5u);
  EXPECT_EQ(levi_dlstar_bound({Family::E, 8}, 5, false).value, 1u);
  EXPECT_EQ(levi_dlstar_bound({Family::E, 7}, 2, false).value, 4u);
  EXPECT_EQ(levi_dlstar_bound({Family::A, 5}, 2, true).value, 4u);
  EXPECT_EQ(levi_dlstar_bound({Family::A, 6}, 4, true).value, 1u);
  EXPECT_THROW(levi_dlstar_bound({Family::E, 8}, 6, false), dlstar::InvalidArgument);
}

TEST(ParabolicBound, Composition) {
  for (const auto& t : all_types()) {
    for (const auto& j : maximal_parabolic_choices(t)) {
      auto c = parabolic_dlstar_bound(t, 4, j, 2);
      EXPECT_LE(c.value, 3u + 1u + 2u);
      if (is_classical(t.family)) {
        EXPECT_LE(c.value, 5u);
      }
      EXPECT_EQ(c.value, c.parts[0].value + c.parts[1].value + 2);
    }
  }
  std::uint64_t worst = 0;
  for (const auto& j : maximal_parabolic_choices({Family::A, 6, OrbitMode::order2})) {
    worst = std::max(worst, parabolic_dlstar_bound({Family::A, 6}, 2, j, 0, true).value);
  }
  EXPECT_EQ(worst, 7u);
}
