#ifndef DLSTAR_ROOTSYS_HPP
#define DLSTAR_ROOTSYS_HPP

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "dlstar/certificate.hpp"
#include "dlstar/errors.hpp"

namespace dlstar::rootsys {

enum class Family { A, B, C, D, E, F, G };

/// Which diagram automorphisms constrain the parabolic choice.
enum class OrbitMode { none, order2, order3 };

inline char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

inline Family parse_family(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
    case 'E': case 'e': return Family::E;
    case 'F': case 'f': return Family::F;
    case 'G': case 'g': return Family::G;
    default: throw InvalidArgument(std::string("unknown Lie family '") + c + "'");
  }
}

struct LieType {
  Family family;
  int rank;
  OrbitMode mode = OrbitMode::none;

  std::string name() const { return family_letter(family) + std::to_string(rank); }
};

inline bool is_classical(Family f) { return f == Family::A || f == Family::B || f == Family::C || f == Family::D; }

/// Diagram automorphism generating the orbit structure for `t.mode`, as a
/// 0-based node permutation. Empty for mode none.
inline std::vector<int> diagram_automorphism(const LieType& t) {
  std::vector<int> p(static_cast<std::size_t>(t.rank));
  std::iota(p.begin(), p.end(), 0);
  if (t.mode == OrbitMode::none) return {};
  int n = t.rank;
  if (t.mode == OrbitMode::order3) {
    if (t.family != Family::D || n != 4) throw InvalidArgument("order-3 graph automorphisms exist only for D4");
    p[0] = 2;
    p[2] = 3;
    p[3] = 0;
    return p;
  }
  switch (t.family) {
    case Family::A:
      if (n < 2) break;
      for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
      return p;
    case Family::D:
      std::swap(p[n - 2], p[n - 1]);
      return p;
    case Family::E:
      if (n != 6) break;
      std::swap(p[0], p[5]);
      std::swap(p[2], p[4]);
      return p;
    case Family::B:
    case Family::C:
      if (n != 2) break;
      std::swap(p[0], p[1]);
      return p;
    case Family::F:
      std::swap(p[0], p[3]);
      std::swap(p[1], p[2]);
      return p;
    case Family::G:
      std::swap(p[0], p[1]);
      return p;
  }
  throw InvalidArgument("type " + t.name() + " has no order-2 graph automorphism");
}

inline void validate(const LieType& t) {
  int n = t.rank;
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B:
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 3; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (!ok) throw InvalidArgument("inadmissible root system type " + t.name());
  diagram_automorphism(t);
}

/// Cartan matrix in Bourbaki numbering, entry (i, j) = <alpha_i, alpha_j^vee>.
inline std::vector<std::vector<int>> cartan_matrix(const LieType& t) {
  validate(t);
  int n = t.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto bond = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      c[n - 2][n - 1] = -2;  // alpha_n short
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      c[n - 1][n - 2] = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case Family::E:
      bond(0, 2);
      bond(1, 3);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Family::F:
      bond(0, 1);
      bond(1, 2);
      bond(2, 3);
      c[1][2] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      break;
    case Family::G:
      bond(0, 1);
      c[1][0] = -3;  // alpha_1 short, alpha_2 long
      break;
  }
  return c;
}

/// A root as integer coefficients over the simple roots (Bourbaki order).
struct Root {
  std::vector<int> coeffs;
  friend auto operator<=>(const Root&, const Root&) = default;
};

/// Set of removed simple roots, 1-based Bourbaki labels; J is the rest.
struct ParabolicChoice {
  std::vector<int> removed;
  friend bool operator==(const ParabolicChoice&, const ParabolicChoice&) = default;

  std::string label() const {
    std::string s = "{";
    for (std::size_t i = 0; i < removed.size(); ++i) s += (i ? ",a" : "a") + std::to_string(removed[i]);
    return s + "}";
  }
};

inline int height(const Root& r) { return std::accumulate(r.coeffs.begin(), r.coeffs.end(), 0); }

inline int level(const Root& r, const ParabolicChoice& j) {
  int s = 0;
  for (int node : j.removed) s += r.coeffs.at(static_cast<std::size_t>(node - 1));
  return s;
}

/// Positive roots, generated from the simple roots by root strings:
/// alpha + alpha_i is a root iff p - <alpha, alpha_i^vee> > 0, where p is the
/// length of the alpha_i-string below alpha. Sorted by height, then coefficients.
inline std::vector<Root> build_root_system(const LieType& t) {
  auto c = cartan_matrix(t);
  int n = t.rank;
  std::set<std::vector<int>> all;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    layer.push_back(e);
    all.insert(e);
  }
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& a : layer) {
      for (int i = 0; i < n; ++i) {
        int pairing = 0;
        for (int k = 0; k < n; ++k) pairing += a[k] * c[k][i];
        int p = 0;
        for (auto b = a; b[i] > 0;) {
          --b[i];
          if (!all.contains(b)) break;
          ++p;
        }
        if (p - pairing > 0) {
          auto up = a;
          ++up[i];
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    all.insert(next.begin(), next.end());
  }
  std::vector<Root> roots;
  for (const auto& v : all) roots.push_back(Root{v});
  std::stable_sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a.coeffs < b.coeffs;
  });
  return roots;
}

/// The unique positive root of largest height.
inline Root highest_root(const LieType& t) { return build_root_system(t).back(); }

inline void check_choice(const LieType& t, const ParabolicChoice& j) {
  if (j.removed.empty()) throw InvalidArgument("parabolic choice must remove at least one node");
  for (int node : j.removed) {
    if (node < 1 || node > t.rank) throw InvalidArgument("node a" + std::to_string(node) + " outside " + t.name());
  }
}

/// Largest level over the positive roots outside the Levi subsystem.
inline int max_level(const LieType& t, const ParabolicChoice& j) {
  check_choice(t, j);
  int best = 0;
  for (const auto& r : build_root_system(t)) best = std::max(best, level(r, j));
  return best;
}

/// Diagram-automorphism orbits (mode order2/order3) or single nodes (mode none).
inline std::vector<ParabolicChoice> maximal_parabolic_choices(const LieType& t) {
  validate(t);
  auto aut = diagram_automorphism(t);
  std::vector<ParabolicChoice> out;
  std::vector<bool> seen(static_cast<std::size_t>(t.rank), false);
  for (int i = 0; i < t.rank; ++i) {
    if (seen[i]) continue;
    ParabolicChoice pc;
    for (int k = i; !seen[k]; k = aut.empty() ? k : aut[k]) {
      seen[k] = true;
      pc.removed.push_back(k + 1);
    }
    std::sort(pc.removed.begin(), pc.removed.end());
    out.push_back(pc);
  }
  return out;
}

inline int floor_log2(std::uint64_t x) { return std::bit_width(x) - 1; }

/// dl(U) <= floor(log2(max level)) + 1, from [U(i), U(j)] <= U(i + j).
inline BoundCertificate unipotent_dl_bound(const LieType& t, const ParabolicChoice& j) {
  int ml = max_level(t, j);
  BoundCertificate c;
  c.value = static_cast<std::uint64_t>(floor_log2(static_cast<std::uint64_t>(ml)) + 1);
  c.rule = "unipotent_level_filtration";
  c.inputs = {{"type", t.name()}, {"removed", j.label()}, {"max_level", std::to_string(ml)}};
  return c;
}

inline bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  std::uint64_t p = 2;
  while (q % p) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

/// Levi factor bound: 1 when q >= 4, 5 for twisted A_n(2) with n even, 4 otherwise.
inline BoundCertificate levi_dlstar_bound(const LieType& t, std::uint64_t q, bool twisted) {
  validate(t);
  if (!is_prime_power(q)) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
  BoundCertificate c;
  c.rule = "levi_rules";
  bool unitary_even = twisted && t.family == Family::A && t.rank % 2 == 0;
  c.value = q >= 4 ? 1 : unitary_even ? 5 : 4;
  c.inputs = {{"type", (twisted ? "2" : "") + t.name()}, {"q", std::to_string(q)},
              {"twisted", twisted ? "true" : "false"}};
  return c;
}

/// dl*(T cap H) <= dl(U) + dl*(L), plus the outer-automorphism term.
inline BoundCertificate parabolic_dlstar_bound(const LieType& t, std::uint64_t q, const ParabolicChoice& j,
                                               std::uint64_t outer_dl, bool twisted = false) {
  BoundCertificate u = unipotent_dl_bound(t, j);
  BoundCertificate l = levi_dlstar_bound(t, q, twisted);
  BoundCertificate c;
  c.rule = "parabolic_sum";
  c.value = u.value + l.value + outer_dl;
  c.inputs = {{"type", t.name()}, {"removed", j.label()}, {"q", std::to_string(q)},
              {"outer_dl", std::to_string(outer_dl)}};
  c.parts = {u, l};
  return c;
}

}  // namespace dlstar::rootsys

#endif  // DLSTAR_ROOTSYS_HPP
