#ifndef DLSTAR_HARNESS_HPP
#define DLSTAR_HARNESS_HPP

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dlstar/bounds.hpp"
#include "dlstar/construct.hpp"
#include "dlstar/ingest.hpp"
#include "dlstar/rootsys.hpp"

#ifndef DLSTAR_DEFAULT_FIXTURE_DIR
#define DLSTAR_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace dlstar {

/// Fixture root: $DLSTAR_FIXTURES if set, else the directory baked in at build time.
inline std::filesystem::path default_fixture_root() {
  if (const char* env = std::getenv("DLSTAR_FIXTURES"); env && *env) return env;
  return DLSTAR_DEFAULT_FIXTURE_DIR;
}

/// dl* of the two-point stabilizers of a transitive group: one value per
/// suborbit of the stabilizer of the first point, represented by the
/// smallest point of the suborbit. Returned sorted.
inline std::vector<std::size_t> two_point_profile(const Group& g, std::size_t degree_cap = Limits{}.degree_cap) {
  if (g.degree() > degree_cap) throw DegreeCapExceeded("two_point_profile: degree exceeds cap");
  if (!g.is_transitive()) throw InvalidArgument("two_point_profile: group is not transitive");
  if (g.degree() < 2) return {};
  Group h = point_stabilizer(g, {0});
  std::vector<bool> seen(g.degree(), false);
  seen[0] = true;
  std::vector<std::size_t> out;
  for (Point x = 1; x < g.degree(); ++x) {
    if (seen[x]) continue;
    for (Point y : h.orbit(x)) seen[y] = true;
    std::vector<Point> pair{0, x};
    out.push_back(dl_star(point_stabilizer(g, std::span<const Point>(pair))));
  }
  std::sort(out.begin(), out.end());
  return out;
}

enum class ScenarioTag { paper_exact, paper_bound, property, stretch };

inline std::string to_string(ScenarioTag t) {
  switch (t) {
    case ScenarioTag::paper_exact: return "paper_exact";
    case ScenarioTag::paper_bound: return "paper_bound";
    case ScenarioTag::property: return "property";
    case ScenarioTag::stretch: return "stretch";
  }
  return "?";
}

enum class Status { pass, fail, skipped };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

struct SuiteContext {
  std::uint64_t seed = 1;
  std::filesystem::path fixture_root = default_fixture_root();
  std::size_t random_cases = 200;
  std::size_t random_degree = 8;
};

struct Outcome {
  Status status = Status::pass;
  std::vector<std::pair<std::string, std::string>> values;
  std::string message;

  void record(const std::string& key, const std::string& v) { values.emplace_back(key, v); }
  void record(const std::string& key, const Integer& v) { values.emplace_back(key, v.str()); }
  template <class T>
    requires std::is_integral_v<T>
  void record(const std::string& key, T v) {
    values.emplace_back(key, std::to_string(v));
  }
  // Records a failed check without stopping the scenario.
  void check(bool ok, const std::string& what) {
    if (ok) return;
    status = Status::fail;
    if (!message.empty()) message += "; ";
    message += what;
  }
};

struct Scenario {
  std::string id;
  ScenarioTag tag;
  std::string claim;  // the statement being reproduced, shown on failure
  std::function<Outcome(const SuiteContext&)> run;
};

struct ScenarioResult {
  std::string id;
  ScenarioTag tag;
  std::string claim;
  Outcome outcome;
  double seconds = 0;
};

struct SuiteReport {
  std::string filter;
  std::uint64_t seed = 0;
  std::vector<ScenarioResult> results;

  std::size_t count(Status s) const {
    return static_cast<std::size_t>(std::count_if(results.begin(), results.end(),
                                                  [&](const auto& r) { return r.outcome.status == s; }));
  }
  bool all_passed() const { return count(Status::fail) == 0; }
};

namespace detail {

inline Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images(std::move(img));
}

// Each generator is a power x^e of a uniform random x. Plain uniform
// elements almost always generate Alt(n) or Sym(n); the powers make
// smaller subgroups common.
inline Group random_group(std::size_t n, std::mt19937_64& rng) {
  static constexpr int exponents[] = {1, 2, 3, 4, 6};
  std::uniform_int_distribution<int> ngens(2, 3);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(exponents) - 1);
  std::vector<Permutation> gens;
  for (int k = ngens(rng); k > 0; --k) {
    Permutation x = random_permutation(n, rng);
    Permutation y = x;
    for (int e = exponents[pick(rng)]; e > 1; --e) y *= x;
    gens.push_back(y);
  }
  return Group(n, std::move(gens));
}

struct RandomPair {
  Group g;
  Group n;
};

// N is the normal closure of a random element; when that is all of G, the
// element is drawn from the next derived term instead.
inline RandomPair random_pair(std::size_t degree, std::mt19937_64& rng) {
  Group g = random_group(degree, rng);
  auto terms = derived_terms(g);
  for (const auto& t : terms) {
    Group n = normal_closure(g, {t.chain().random_element(rng)});
    if (n.order() != g.order() || &t == &terms.back()) return {g, n};
  }
  return {g, g};
}

inline bool divides(const Integer& a, const Integer& b) { return b % a == 0; }

inline Outcome expect_dlstar(const Group& g, std::size_t expected) {
  Outcome o;
  auto rep = derived_series(g);
  o.record("order", g.order());
  o.record("dlstar", rep.dlstar);
  o.record("perfect_core_order", rep.perfect_core_order);
  o.check(rep.dlstar == expected, "dl* = " + std::to_string(rep.dlstar) + ", expected " + std::to_string(expected));
  return o;
}

inline Outcome fixture_scenario(const SuiteContext& ctx, const std::string& dir, std::size_t expected) {
  Outcome o;
  auto path = ctx.fixture_root / dir;
  if (!std::filesystem::exists(path / "group.gens")) {
    o.status = Status::skipped;
    o.message = "fixture " + path.string() + " not present";
    return o;
  }
  auto rep = dlstar_max(load_fixture(path));
  o.record("maximals", rep.maximals.size());
  o.record("dlstar_max", rep.dlstar_max);
  o.check(rep.dlstar_max == expected,
          "dl*Max = " + std::to_string(rep.dlstar_max) + ", expected " + std::to_string(expected));
  return o;
}

// The subnormal series N G^(i) ... N G^(inf) > N = N^(0) > ... > N^(inf) > 1,
// whose factors are abelian or perfect.
inline std::vector<SectionDescriptor> series_through(const Group& g, const Group& n) {
  std::vector<SectionDescriptor> out;
  auto gterms = derived_terms(g);
  std::vector<Integer> upper;
  for (const auto& t : gterms) upper.push_back(join(n, t).order());
  for (std::size_t i = 0; i + 1 < upper.size(); ++i) {
    if (upper[i] != upper[i + 1]) out.push_back(SectionDescriptor::solvable(1));
  }
  if (upper.back() != n.order()) out.push_back(SectionDescriptor::perfect());
  auto nterms = derived_terms(n);
  for (std::size_t i = 0; i + 1 < nterms.size(); ++i) out.push_back(SectionDescriptor::solvable(1));
  if (!nterms.back().is_trivial()) out.push_back(SectionDescriptor::perfect());
  if (out.empty()) out.push_back(SectionDescriptor::solvable(0));
  return out;
}

template <class Check>
Outcome random_property(const SuiteContext& ctx, std::uint64_t salt, Check check) {
  Outcome o;
  std::mt19937_64 rng(ctx.seed * 0x9E3779B97F4A7C15ull + salt);
  std::size_t failures = 0;
  std::set<std::pair<Integer, Integer>> shapes;
  for (std::size_t k = 0; k < ctx.random_cases; ++k) {
    auto pair = random_pair(ctx.random_degree, rng);
    shapes.emplace(pair.g.order(), pair.n.order());
    if (!check(pair, rng)) {
      if (failures++ == 0) o.check(false, "first failure at case " + std::to_string(k));
    }
  }
  o.record("cases", ctx.random_cases);
  o.record("failures", failures);
  o.record("distinct_order_pairs", shapes.size());
  return o;
}

}  // namespace detail

/// The scenario catalogue, in a fixed order.
inline std::vector<Scenario> scenario_catalogue() {
  using namespace rootsys;
  std::vector<Scenario> s;
  auto add = [&](std::string id, ScenarioTag tag, std::string claim, std::function<Outcome(const SuiteContext&)> f) {
    s.push_back({std::move(id), tag, std::move(claim), std::move(f)});
  };

  add("wreath44", ScenarioTag::paper_exact, "Sym(4) wr_4 Sym(4) (degree 16, order 24^5) has dl* = 6",
      [](const SuiteContext&) {
        Group g = wreath_imprimitive(sym(4), sym(4));
        Outcome o = detail::expect_dlstar(g, 6);
        o.check(g.degree() == 16, "degree");
        o.check(g.order() == Integer(24) * 24 * 24 * 24 * 24, "order 24^5");
        return o;
      });
  add("wreath54_alt", ScenarioTag::paper_exact, "(Sym(5) wr_4 Sym(4)) cap Alt(20) has dl* = 4",
      [](const SuiteContext&) {
        Group w = wreath_imprimitive(sym(5), sym(4));
        Group g = intersect_with_alt(w);
        Outcome o = detail::expect_dlstar(g, 4);
        o.check(g.order() * 2 == w.order(), "index 2 in the wreath product");
        return o;
      });
  add("agl23", ScenarioTag::paper_bound, "AGL_2(3) has dl* <= 5 (attained)", [](const SuiteContext&) {
    Group g = agl(2, 3);
    Outcome o = detail::expect_dlstar(g, 5);
    o.check(g.order() == 432, "order 432");
    return o;
  });
  add("agl15", ScenarioTag::paper_bound, "AGL_1(5) is solvable with dl* = 2 <= 5", [](const SuiteContext&) {
    Group g = agl(1, 5);
    Outcome o = detail::expect_dlstar(g, 2);
    o.check(g.order() == 20, "order 20");
    return o;
  });
  for (std::size_t k : {3, 4}) {
    add("exbad_s" + std::to_string(k), ScenarioTag::paper_exact,
        "G = (Sym(" + std::to_string(k) + ") wr_5 Alt(5))' is perfect, |W:G| = |S:S'| = 2, and the block "
        "stabilizer H is solvable with dl(H) >= dl(S)",
        [k](const SuiteContext&) {
          Outcome o;
          Group base = sym(k);
          auto e = exbad(base);
          auto rep = derived_series(e.group);
          std::size_t dl_h = derived_length(e.stabilizer);
          std::size_t dl_s = derived_length(base);
          Integer idx = e.wreath.order() / e.group.order();
          Integer abel = base.order() / derived_subgroup(base).order();
          o.record("index_W_G", idx);
          o.record("dl_H", dl_h);
          o.record("dl_S", dl_s);
          o.check(rep.is_perfect, "G is not perfect");
          o.check(idx == abel && idx == 2, "|W:G| != |S:S'| = 2");
          o.check(dl_h >= dl_s, "dl(H) < dl(S)");
          o.check(e.group.order() == e.stabilizer.order() * 5, "H does not have index 5");
          return o;
        });
  }
  add("diag_a5", ScenarioTag::paper_exact,
      "Alt(5)^2 in diagonal action on 60 points is perfect, as is its point stabilizer",
      [](const SuiteContext&) {
        Outcome o;
        auto d = diagonal_action(alt(5));
        o.record("degree", d.group.degree());
        o.record("order", d.group.order());
        o.check(d.group.degree() == 60 && d.group.order() == 3600, "degree 60, order 3600");
        o.check(d.group.is_transitive(), "not transitive");
        o.check(dl_star(d.group) == 0, "group not perfect");
        o.check(dl_star(d.stabilizer) == 0, "stabilizer not perfect");
        o.check(point_stabilizer(d.group, {0}).order() == d.stabilizer.order(), "stabilizer is not the diagonal");
        return o;
      });
  add("prodact_a5", ScenarioTag::paper_bound,
      "Alt(5) wr_5 Alt(5) on 3125 points is perfect; its point stabilizer H has dl*(H) <= dl*(Alt(4)) = 2",
      [](const SuiteContext&) {
        Outcome o;
        Group g = wreath_product_action(alt(5), alt(5));
        Group h = point_stabilizer(g, {0});
        std::size_t dh = dl_star(h);
        o.record("degree", g.degree());
        o.record("order", g.order());
        o.record("dlstar_H", dh);
        o.check(g.degree() == 3125, "degree");
        o.check(dl_star(g) == 0, "not perfect");
        o.check(dh <= dl_star(alt(4)) && dl_star(alt(4)) == 2, "dl*(H) > 2");
        return o;
      });
  add("primperf_eq", ScenarioTag::paper_bound,
      "product action Alt(5) wr_5 Alt(5): the stabilizer H satisfies dl*(H) <= dl*(N cap H), N the socle",
      [](const SuiteContext&) {
        Outcome o;
        Group a = alt(5);
        Group g = wreath_product_action(a, alt(5));
        // The first generators of g act on the first coordinate only.
        std::vector<Permutation> coord(g.generators().begin(),
                                       g.generators().begin() + static_cast<std::ptrdiff_t>(a.generators().size()));
        Group n = normal_closure(g, coord);
        Group h = point_stabilizer(g, {0});
        Group nh = point_stabilizer(n, {0});
        std::size_t dh = dl_star(h), dnh = dl_star(nh);
        o.record("socle_order", n.order());
        o.record("dlstar_H", dh);
        o.record("dlstar_N_cap_H", dnh);
        o.check(n.order() == Integer(60) * 60 * 60 * 60 * 60, "socle is not Alt(5)^5");
        o.check(dh <= dnh, "dl*(H) > dl*(N cap H)");
        return o;
      });
  add("e6_height", ScenarioTag::paper_exact, "E6 highest root (1,2,2,3,2,1) has height 11", [](const SuiteContext&) {
    Outcome o;
    Root r = highest_root({Family::E, 6});
    o.record("height", height(r));
    o.check(r.coeffs == std::vector<int>{1, 2, 2, 3, 2, 1}, "highest root coefficients");
    o.check(height(r) == 11, "height");
    return o;
  });
  add("e6_midnode", ScenarioTag::paper_exact,
      "E6 with the branch node a4 removed: the highest root has level 3, the maximum", [](const SuiteContext&) {
        Outcome o;
        LieType t{Family::E, 6};
        ParabolicChoice j{{4}};
        o.record("level", level(highest_root(t), j));
        o.record("max_level", max_level(t, j));
        o.check(level(highest_root(t), j) == 3 && max_level(t, j) == 3, "level 3");
        return o;
      });
  add("e6_25", ScenarioTag::paper_exact, "E6 with {a2, a5} removed has max level 4, the largest over E6",
      [](const SuiteContext&) {
        Outcome o;
        LieType t{Family::E, 6, OrbitMode::order2};
        int ml = max_level(t, {{2, 5}});
        o.record("max_level", ml);
        o.check(ml == 4, "max level");
        int best = 0;
        std::string argmax;
        for (const auto& j : maximal_parabolic_choices(t)) {
          int v = max_level(t, j);
          if (v > best) {
            best = v;
            argmax = j.label();
          } else if (v == best) {
            argmax += " " + j.label();
          }
        }
        o.record("max_over_orbits", best);
        o.record("maximizers", argmax);
        o.check(best == 4, "largest max level over admissible choices");
        return o;
      });
  add("e8_node4", ScenarioTag::paper_exact, "E8 with a4 removed: max level 6 and dl(U) bound 3",
      [](const SuiteContext&) {
        Outcome o;
        LieType t{Family::E, 8};
        ParabolicChoice j{{4}};
        auto c = unipotent_dl_bound(t, j);
        o.record("max_level", max_level(t, j));
        o.record("dlU_bound", c.value);
        o.check(max_level(t, j) == 6 && c.value == 3, "level 6, bound 3");
        return o;
      });
  add("classical_levels", ScenarioTag::paper_bound,
      "every classical type and maximal J gives dl(U) bound <= 2; every type gives <= 3", [](const SuiteContext&) {
        Outcome o;
        std::size_t checked = 0;
        std::vector<LieType> types;
        for (int n = 1; n <= 8; ++n) {
          types.push_back({Family::A, n});
          if (n >= 2) types.push_back({Family::A, n, OrbitMode::order2});
          if (n >= 2) types.push_back({Family::B, n});
          if (n >= 2) types.push_back({Family::C, n});
          if (n >= 4) types.push_back({Family::D, n});
          if (n >= 4) types.push_back({Family::D, n, OrbitMode::order2});
        }
        types.push_back({Family::B, 2, OrbitMode::order2});
        types.push_back({Family::D, 4, OrbitMode::order3});
        for (auto t : {LieType{Family::E, 6}, LieType{Family::E, 6, OrbitMode::order2}, LieType{Family::E, 7},
                       LieType{Family::E, 8}, LieType{Family::F, 4}, LieType{Family::F, 4, OrbitMode::order2},
                       LieType{Family::G, 2}, LieType{Family::G, 2, OrbitMode::order2}}) {
          types.push_back(t);
        }
        for (const auto& t : types) {
          for (const auto& j : maximal_parabolic_choices(t)) {
            auto c = unipotent_dl_bound(t, j);
            ++checked;
            o.check(c.value <= 3, t.name() + " " + j.label() + " exceeds 3");
            if (is_classical(t.family)) o.check(c.value <= 2, t.name() + " " + j.label() + " exceeds 2");
          }
        }
        o.record("choices_checked", checked);
        return o;
      });
  add("levi_rules", ScenarioTag::paper_bound,
      "Levi bounds: 5 for twisted A6(2), 1 for q >= 4, 4 otherwise; combined parabolic bound 7 before Out",
      [](const SuiteContext&) {
        Outcome o;
        o.check(levi_dlstar_bound({Family::A, 6}, 2, true).value == 5, "2A6(2)");
        o.check(levi_dlstar_bound({Family::E, 8}, 5, false).value == 1, "E8(5)");
        o.check(levi_dlstar_bound({Family::E, 7}, 2, false).value == 4, "E7(2)");
        std::uint64_t worst = 0;
        for (const auto& j : maximal_parabolic_choices({Family::A, 6, OrbitMode::order2})) {
          worst = std::max(worst, parabolic_dlstar_bound({Family::A, 6}, 2, j, 0, true).value);
        }
        o.record("worst_2A6_2", worst);
        o.check(worst <= 7, "2A6(2) parabolic bound above 7");
        return o;
      });
  add("remp_table", ScenarioTag::paper_exact, "p-group derived length table: p^2->1, p^5->2, p^12->3, p^21->4, p^39->5",
      [](const SuiteContext&) {
        Outcome o;
        o.check(pgroup_dl_bound(2, 12).value == 3, "(2,12)");
        o.check(pgroup_dl_bound(3, 0).value == 0, "(3,0)");
        o.check(pgroup_dl_bound(2, 30).value == 5, "(2,30)");
        o.check(pgroup_dl_bound(5, 2).value == 1 && pgroup_dl_bound(5, 5).value == 2 &&
                    pgroup_dl_bound(5, 21).value == 4 && pgroup_dl_bound(5, 39).value == 5,
                "row boundaries");
        bool threw = false;
        try {
          pgroup_dl_bound(2, 40);
        } catch (const OutOfTable&) {
          threw = true;
        }
        o.check(threw, "k = 40 should be out of table");
        o.check(ext_bound({SectionDescriptor::solvable(2), SectionDescriptor::perfect(),
                           SectionDescriptor::solvable(3)})
                        .value == 5,
                "extension sum");
        return o;
      });
  add("out_table", ScenarioTag::paper_exact, "dl(Out(T)): 1 for alternating/sporadic, 3 iff untwisted D4 with q odd",
      [](const SuiteContext&) {
        Outcome o;
        using K = SocleDescriptor::Kind;
        o.check(out_dl_bound({K::sporadic}).value == 1, "sporadic");
        o.check(out_dl_bound({K::alternating}).value == 1, "alternating");
        o.check(out_dl_bound({K::lie, Family::D, 4, false, true}).value == 3, "D4 q odd");
        o.check(out_dl_bound({K::lie, Family::D, 4, false, false}).value == 2, "D4 q even");
        o.check(out_dl_bound({K::lie, Family::D, 4, true, true}).value == 2, "3D4");
        o.check(out_dl_bound({K::lie, Family::E, 6, false, true}).value <= 3, "E6");
        return o;
      });
  struct Row {
    const char* id;
    const char* dir;
    std::size_t value;
  };
  for (const Row& r : {Row{"m11", "M11", 4}, Row{"m12", "M12", 5}, Row{"m22", "M22", 1}, Row{"m23", "M23", 2},
                       Row{"m24", "M24", 2}, Row{"hs", "HS", 2}, Row{"j2", "J2", 4}}) {
    std::string dir = r.dir;
    std::size_t value = r.value;
    add(r.id, ScenarioTag::paper_exact, std::string("dl*Max for socle ") + r.dir + " is " + std::to_string(r.value),
        [dir, value](const SuiteContext& ctx) { return detail::fixture_scenario(ctx, dir, value); });
  }
  add("fi23_solvmax", ScenarioTag::stretch,
      "the solvable maximal 3^(1+8).2^(1+6).3^(1+2).2S4 of Fi23 on 31671 points has derived length 10",
      [](const SuiteContext& ctx) {
        Outcome o;
        auto path = ctx.fixture_root / "Fi23_solvmax" / "group.gens";
        if (!std::filesystem::exists(path)) {
          o.status = Status::skipped;
          o.message = "stretch fixture " + path.string() + " not present";
          return o;
        }
        Group h = load_group_file(path).to_group();
        std::size_t dl = derived_length(h);
        o.record("dl", dl);
        o.check(dl == 10, "derived length " + std::to_string(dl) + ", expected 10");
        return o;
      });
  add("rand_sandwich", ScenarioTag::property, "dl*(G/N) <= dl*(G) <= dl*(G/N) + dl*(N) for random (G, N)",
      [](const SuiteContext& ctx) {
        return detail::random_property(ctx, 1, [](const detail::RandomPair& p, std::mt19937_64&) {
          return sandwich_check(p.g, p.n).holds;
        });
      });
  add("rand_quotient", ScenarioTag::property,
      "(G/N)^(n) = N G^(n) / N for all n; dl*(G) = dl*(G/N) when N <= G^(inf)", [](const SuiteContext& ctx) {
        return detail::random_property(ctx, 2, [](const detail::RandomPair& p, std::mt19937_64& rng) {
          std::size_t d = dl_star(p.g);
          for (std::size_t n = 0; n <= d + 1; ++n) {
            if (!quotient_derived_check(p.g, p.n, n)) return false;
          }
          Group core = perfect_core(p.g);
          if (core.is_trivial()) return true;
          Group m = normal_closure(p.g, {core.chain().random_element(rng)});
          return dl_star(CosetAction(p.g, m).image_group()) == d;
        });
      });
  add("rand_monotone", ScenarioTag::property,
      "H^(n) <= G^(n) for H <= G; dl*(H) <= dl*(G) when G^(inf) <= H", [](const SuiteContext& ctx) {
        return detail::random_property(ctx, 3, [](const detail::RandomPair& p, std::mt19937_64& rng) {
          auto gt = derived_terms(p.g);
          Group h(p.g.degree(), {p.g.chain().random_element(rng), p.g.chain().random_element(rng)});
          auto ht = derived_terms(h);
          for (std::size_t n = 0; n < std::max(gt.size(), ht.size()) + 1; ++n) {
            const Group& gn = gt[std::min(n, gt.size() - 1)];
            const Group& hn = ht[std::min(n, ht.size() - 1)];
            if (!detail::divides(hn.order(), gn.order()) || !gn.contains(hn)) return false;
          }
          if (!gt.back().contains(ht.back())) return false;
          std::vector<Permutation> gens = gt.back().generators();
          gens.push_back(p.g.chain().random_element(rng));
          Group over(p.g.degree(), gens);
          return perfect_core(over).order() == gt.back().order() && dl_star(over) <= gt.size() - 1;
        });
      });
  add("rand_corext", ScenarioTag::property,
      "the extension sum over a solvable/perfect subnormal series bounds dl*(G)", [](const SuiteContext& ctx) {
        return detail::random_property(ctx, 4, [](const detail::RandomPair& p, std::mt19937_64&) {
          return ext_bound(detail::series_through(p.g, p.n)).value >= dl_star(p.g);
        });
      });
  add("rand_perfect_join", ScenarioTag::property, "a group generated by perfect subgroups is perfect",
      [](const SuiteContext& ctx) {
        return detail::random_property(ctx, 5, [&ctx](const detail::RandomPair& p, std::mt19937_64& rng) {
          Group other = detail::random_group(ctx.random_degree, rng);
          return dl_star(join(perfect_core(p.g), perfect_core(other))) == 0;
        });
      });
  add("two_point_small", ScenarioTag::property, "two-point stabilizer profiles of small primitive groups",
      [](const SuiteContext&) {
        Outcome o;
        auto s4 = two_point_profile(sym(4));
        o.check(s4 == std::vector<std::size_t>{1}, "Sym(4) profile");
        auto a5 = two_point_profile(alt(5));
        o.check(a5.size() == 1, "2-transitive Alt(5) profile has one entry");
        auto e = exbad(sym(3));
        Group blocks(5, {});
        {
          std::vector<Permutation> imgs;
          for (const auto& x : e.group.generators()) {
            std::vector<Point> img(5);
            for (Point b = 0; b < 5; ++b) img[b] = x(b * 3) / 3;
            imgs.push_back(Permutation::from_images(std::move(img)));
          }
          blocks = Group(5, std::move(imgs));
        }
        auto prof = two_point_profile(blocks);
        std::size_t dl_h = derived_length(e.stabilizer);
        for (auto v : prof) o.check(v <= dl_h, "block-action profile exceeds dl(H)");
        o.record("sym4", s4.empty() ? 0 : s4.front());
        o.record("exbad_blocks_max", prof.empty() ? 0 : prof.back());
        return o;
      });
  return s;
}

/// A filter selects scenarios by exact id, by tag name, by a trailing-`*`
/// prefix, or a comma-separated list of those. Empty or "all" selects everything.
inline bool filter_matches(const std::string& filter, const Scenario& s) {
  if (filter.empty() || filter == "all") return true;
  std::size_t start = 0;
  while (start <= filter.size()) {
    auto end = filter.find(',', start);
    std::string tok = filter.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (!tok.empty()) {
      if (tok == s.id || tok == to_string(s.tag)) return true;
      if (tok.back() == '*' && s.id.rfind(tok.substr(0, tok.size() - 1), 0) == 0) return true;
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return false;
}

/// Runs the matching scenarios in catalogue order. Once `budget` has
/// elapsed, the remaining scenarios are reported as skipped.
inline SuiteReport run_suite(const std::string& filter, std::uint64_t seed,
                             std::chrono::duration<double> budget = std::chrono::hours(1), SuiteContext ctx = {}) {
  ctx.seed = seed;
  SuiteReport report{filter, seed, {}};
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& sc : scenario_catalogue()) {
    if (!filter_matches(filter, sc)) continue;
    ScenarioResult r{sc.id, sc.tag, sc.claim, {}, 0};
    if (std::chrono::steady_clock::now() - t0 > budget) {
      r.outcome.status = Status::skipped;
      r.outcome.message = "time budget exhausted";
    } else {
      auto t = std::chrono::steady_clock::now();
      try {
        r.outcome = sc.run(ctx);
      } catch (const std::exception& e) {
        r.outcome.status = Status::fail;
        r.outcome.message = std::string("exception: ") + e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace dlstar

#endif  // DLSTAR_HARNESS_HPP
