#ifndef DLSTAR_BOUNDS_HPP
#define DLSTAR_BOUNDS_HPP

#include <string>
#include <vector>

#include "dlstar/certificate.hpp"
#include "dlstar/construct.hpp"
#include "dlstar/coset_action.hpp"
#include "dlstar/derived.hpp"
#include "dlstar/rootsys.hpp"

namespace dlstar {

/// Upper bound on the derived length of a group of order p^k.
inline BoundCertificate pgroup_dl_bound(std::uint64_t p, std::uint64_t k) {
  if (!is_prime(p)) throw InvalidArgument("pgroup_dl_bound: p = " + std::to_string(p) + " is not prime");
  struct Row {
    std::uint64_t max_exponent, dl;
  };
  static constexpr Row table[] = {{0, 0}, {2, 1}, {5, 2}, {12, 3}, {21, 4}, {39, 5}};
  for (const auto& row : table) {
    if (k <= row.max_exponent) {
      return {row.dl, "pgroup_order_table", {{"p", std::to_string(p)}, {"k", std::to_string(k)}}, {}};
    }
  }
  throw OutOfTable("pgroup_dl_bound: no tabulated bound for |P| = p^" + std::to_string(k) + " (table ends at p^39)");
}

/// One factor of a subnormal series: solvable of a given derived length, or perfect.
struct SectionDescriptor {
  enum class Kind { solvable, perfect } kind = Kind::solvable;
  std::uint64_t dl = 0;

  static SectionDescriptor solvable(std::uint64_t dl) { return {Kind::solvable, dl}; }
  static SectionDescriptor perfect() { return {Kind::perfect, 0}; }
};

/// dl*(G) is at most the sum of dl over the solvable factors.
inline BoundCertificate ext_bound(const std::vector<SectionDescriptor>& sections) {
  if (sections.empty()) throw InvalidArgument("ext_bound: empty section list");
  BoundCertificate c;
  c.rule = "subnormal_extension_sum";
  std::string shape;
  for (const auto& s : sections) {
    if (s.kind == SectionDescriptor::Kind::perfect && s.dl != 0) {
      throw InvalidArgument("ext_bound: a perfect section has dl 0");
    }
    if (s.kind == SectionDescriptor::Kind::solvable) c.value += s.dl;
    if (!shape.empty()) shape += ",";
    shape += s.kind == SectionDescriptor::Kind::perfect ? "perfect" : "solvable:" + std::to_string(s.dl);
  }
  c.inputs = {{"sections", shape}};
  return c;
}

struct SandwichResult {
  std::size_t lower = 0;   // dl*(G/N)
  std::size_t actual = 0;  // dl*(G)
  std::size_t upper = 0;   // dl*(G/N) + dl*(N)
  bool holds = false;
};

/// Evaluates dl*(G/N) <= dl*(G) <= dl*(G/N) + dl*(N), with G/N realized as
/// the coset action of G on N.
inline SandwichResult sandwich_check(const Group& g, const Group& n, std::size_t cap = Limits{}.index_cap) {
  if (!g.contains(n) || !is_normal(g, n)) throw NotNormal("sandwich_check: N is not normal in G");
  CosetAction act(g, n, cap);
  SandwichResult r;
  r.lower = dl_star(act.image_group());
  r.actual = dl_star(g);
  r.upper = r.lower + dl_star(n);
  r.holds = r.lower <= r.actual && r.actual <= r.upper;
  return r;
}

/// Family of a non-abelian simple socle, as far as the Out(T) lookup needs.
struct SocleDescriptor {
  enum class Kind { alternating, sporadic, cyclic, lie } kind = Kind::alternating;
  rootsys::Family family = rootsys::Family::A;
  int rank = 1;
  bool twisted = false;
  bool q_odd = false;
};

/// dl(Out(T)): 1 when Out(T) is abelian (alternating, sporadic, cyclic),
/// 3 exactly for untwisted D4 over odd q, and 2 for the other Lie families.
inline BoundCertificate out_dl_bound(const SocleDescriptor& s) {
  BoundCertificate c;
  c.rule = "outer_automorphism_lookup";
  switch (s.kind) {
    case SocleDescriptor::Kind::alternating:
      c.value = 1;
      c.inputs = {{"family", "alternating"}};
      return c;
    case SocleDescriptor::Kind::sporadic:
      c.value = 1;
      c.inputs = {{"family", "sporadic"}};
      return c;
    case SocleDescriptor::Kind::cyclic:
      c.value = 1;
      c.inputs = {{"family", "cyclic"}};
      return c;
    case SocleDescriptor::Kind::lie: {
      bool triality = s.family == rootsys::Family::D && s.rank == 4 && !s.twisted && s.q_odd;
      c.value = triality ? 3 : 2;
      c.inputs = {{"family", std::string("lie:") + rootsys::family_letter(s.family) + std::to_string(s.rank)},
                  {"twisted", s.twisted ? "true" : "false"},
                  {"q_odd", s.q_odd ? "true" : "false"}};
      return c;
    }
  }
  throw InvalidArgument("out_dl_bound: unknown socle family");
}

}  // namespace dlstar

#endif  // DLSTAR_BOUNDS_HPP
