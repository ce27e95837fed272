// dlstar: command-line front end.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dlstar/dlstar.hpp"

namespace fs = std::filesystem;
using namespace dlstar;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

// A positional argument that names an existing file is a group file;
// anything else is a construction expression.
std::pair<std::string, Group> load_target(const std::string& target, const std::string& expr) {
  if (!expr.empty()) return {expr, build(expr)};
  if (target.empty()) throw UsageError("analyze: give a group file or --expr");
  if (fs::is_regular_file(target)) {
    auto f = load_group_file(target);
    return {f.name, f.to_group()};
  }
  return {target, build(target)};
}

int cmd_analyze(const std::string& target, const std::string& expr, bool json) {
  auto [name, g] = load_target(target, expr);
  auto r = derived_series(g);
  if (json) {
    print_json(series_to_json(name, g.degree(), r));
    return exit_ok;
  }
  std::cout << "name                " << name << "\n"
            << "degree              " << g.degree() << "\n"
            << "order               " << r.orders.front() << "\n"
            << "derived_orders      ";
  for (std::size_t i = 0; i < r.orders.size(); ++i) std::cout << (i ? " > " : "") << r.orders[i];
  std::cout << "\n"
            << "dlstar              " << r.dlstar << "\n"
            << "perfect_core_order  " << r.perfect_core_order << "\n"
            << "solvable            " << (r.is_solvable ? "yes" : "no") << "\n"
            << "perfect             " << (r.is_perfect ? "yes" : "no") << "\n";
  return exit_ok;
}

int cmd_construct(const std::string& expr, const std::string& out, std::string name) {
  Group g = build(expr);
  if (name.empty()) name = to_string(parse_construction(expr));
  std::string text = "# " + to_string(parse_construction(expr)) + "\n" + serialize_group_file(group_file_from(g, name));
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + out);
    f << text;
    std::cerr << "wrote " << out << " (degree " << g.degree() << ", order " << g.order() << ")\n";
  }
  return exit_ok;
}

int cmd_parabolic(const std::string& family, int rank, bool twisted, bool triality, std::uint64_t q, bool json) {
  using namespace rootsys;
  if (family.size() != 1) throw UsageError("--family takes a single letter A-G");
  LieType t{parse_family(family[0]), rank,
            triality ? OrbitMode::order3 : twisted ? OrbitMode::order2 : OrbitMode::none};
  validate(t);
  bool tw = twisted || triality;
  std::uint64_t outer = 0;
  if (q) {
    SocleDescriptor sd{SocleDescriptor::Kind::lie, t.family, rank, tw, q % 2 == 1};
    outer = out_dl_bound(sd).value;
  }
  Json rows = Json::array();
  if (!json) {
    std::cout << "type " << (triality ? "3" : twisted ? "2" : "") << t.name() << ", highest root height "
              << height(highest_root(t)) << "\n";
    std::cout << "removed        max_level  dl(U)<=" << (q ? "  dl*(L)<=  dl(Out)<=  total<=" : "") << "\n";
  }
  for (const auto& j : maximal_parabolic_choices(t)) {
    auto u = unipotent_dl_bound(t, j);
    int ml = max_level(t, j);
    Json row{{"removed", j.label()}, {"max_level", ml}, {"dlU_bound", u.value}};
    std::string line = j.label();
    line.resize(15, ' ');
    line += std::to_string(ml);
    line.resize(26, ' ');
    line += std::to_string(u.value);
    if (q) {
      auto c = parabolic_dlstar_bound(t, q, j, outer, tw);
      row["levi_bound"] = c.parts[1].value;
      row["out_bound"] = outer;
      row["total_bound"] = c.value;
      line.resize(35, ' ');
      line += std::to_string(c.parts[1].value);
      line.resize(45, ' ');
      line += std::to_string(outer);
      line.resize(56, ' ');
      line += std::to_string(c.value);
    }
    rows.push_back(row);
    if (!json) std::cout << line << "\n";
  }
  if (json) {
    Json j{{"schema_version", report_schema_version}, {"type", t.name()}, {"twisted", tw},
           {"q", q ? Json(q) : Json(nullptr)}, {"rows", rows}};
    print_json(j);
  }
  return exit_ok;
}

void print_certificate(const BoundCertificate& c, int indent = 0) {
  std::cout << std::string(static_cast<std::size_t>(indent), ' ') << c.rule << " = " << c.value;
  for (const auto& [k, v] : c.inputs) std::cout << "  " << k << "=" << v;
  std::cout << "\n";
  for (const auto& p : c.parts) print_certificate(p, indent + 2);
}

std::vector<SectionDescriptor> parse_sections(const std::string& text) {
  std::vector<SectionDescriptor> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    std::string tok = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (tok == "p" || tok == "perfect") {
      out.push_back(SectionDescriptor::perfect());
    } else if (!tok.empty() && (tok[0] == 's') && tok.size() > 1 &&
               tok.find_first_not_of("0123456789", 1) == std::string::npos) {
      out.push_back(SectionDescriptor::solvable(std::stoull(tok.substr(1))));
    } else {
      throw UsageError("--sections: expected sN or p, got '" + tok + "'");
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

int cmd_maxtable(const std::string& dir, bool json) {
  std::vector<fs::path> fixtures;
  if (fs::exists(fs::path(dir) / "group.gens")) {
    fixtures.push_back(dir);
  } else {
    fixtures = list_fixtures(dir);
    if (fixtures.empty()) throw UsageError("maxtable: no fixtures under " + dir);
  }
  bool all_match = true;
  Json out = Json::array();
  if (!json) std::cout << "group   degree  order          maximals  dl*Max  expected\n";
  for (const auto& f : fixtures) {
    auto r = dlstar_max(load_fixture(f));
    bool match = !r.expected || *r.expected == r.dlstar_max;
    all_match = all_match && match;
    if (json) {
      out.push_back(dlstar_max_to_json(r));
      continue;
    }
    std::string line = r.name;
    line.resize(8, ' ');
    line += std::to_string(r.degree);
    line.resize(16, ' ');
    line += r.order.str();
    line.resize(31, ' ');
    line += std::to_string(r.maximals.size());
    line.resize(41, ' ');
    line += std::to_string(r.dlstar_max) + (r.lower_bound_only ? "+" : "");
    line.resize(49, ' ');
    line += r.expected ? std::to_string(*r.expected) + (match ? "" : "  MISMATCH") : "-";
    std::cout << line << "\n";
  }
  if (json) print_json(fixtures.size() == 1 ? out[0] : out);
  return all_match ? exit_ok : exit_check_failed;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, double budget, bool json) {
  auto r = run_suite(suite, seed, std::chrono::duration<double>(budget));
  if (json) {
    print_json(suite_to_json(r));
  } else {
    for (const auto& s : r.results) {
      std::string line = to_string(s.outcome.status);
      line.resize(9, ' ');
      line += s.id;
      line.resize(30, ' ');
      char secs[32];
      std::snprintf(secs, sizeof secs, "%8.2fs", s.seconds);
      line += secs;
      for (const auto& [k, v] : s.outcome.values) line += "  " + k + "=" + v;
      std::cout << line << "\n";
      if (s.outcome.status != Status::pass && !s.outcome.message.empty()) {
        std::cout << "         " << s.outcome.message << "\n";
      }
      if (s.outcome.status == Status::fail) std::cout << "         claim: " << s.claim << "\n";
    }
    std::cout << r.count(Status::pass) << " passed, " << r.count(Status::fail) << " failed, "
              << r.count(Status::skipped) << " skipped\n";
  }
  return r.all_passed() ? exit_ok : exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dlstar: generalized derived length of permutation groups"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  std::string target, expr;
  auto* analyze = app.add_subcommand("analyze", "derived series of a group file or construction expression");
  analyze->add_option("target", target, "group file or expression");
  analyze->add_option("--expr", expr, "construction expression, e.g. wreath(sym(4),sym(4))");
  analyze->add_flag("--json", json, "machine-readable output");

  std::string cexpr, out, name;
  auto* construct = app.add_subcommand("construct", "write a constructed group as a group file");
  construct->add_option("expr", cexpr, "construction expression")->required();
  construct->add_option("--out,-o", out, "output file (default stdout)");
  construct->add_option("--name", name, "name recorded in the file");

  std::string family;
  int rank = 0;
  bool twisted = false, triality = false;
  std::uint64_t q = 0;
  auto* parabolic = app.add_subcommand("parabolic", "level and bound table over maximal parabolics");
  parabolic->add_option("--family", family, "A-G")->required();
  parabolic->add_option("--rank", rank, "rank")->required()->check(CLI::PositiveNumber);
  parabolic->add_flag("--twisted", twisted, "twisted form: choices are orbits of the order-2 graph automorphism");
  parabolic->add_flag("--triality", triality, "twisted by the order-3 automorphism of D4");
  parabolic->add_option("--q", q, "field size; adds Levi and Out columns");
  parabolic->add_flag("--json", json, "machine-readable output");

  auto* bounds = app.add_subcommand("bounds", "evaluate a bound rule");
  bounds->require_subcommand(1);
  bounds->add_flag("--json", json, "machine-readable output");
  std::uint64_t p = 0, k = 0;
  auto* bpgroup = bounds->add_subcommand("pgroup", "derived length bound for a group of order p^k");
  bpgroup->add_option("--p", p, "prime")->required();
  bpgroup->add_option("--k", k, "exponent")->required();
  std::string sections;
  auto* bext = bounds->add_subcommand("ext", "sum over a subnormal series");
  bext->add_option("--sections", sections, "comma list: sN (solvable, dl N) or p (perfect)")->required();
  std::string kind = "lie", ofamily = "A";
  int orank = 1;
  bool otwisted = false;
  std::uint64_t oq = 0;
  auto* bout = bounds->add_subcommand("out", "derived length of Out(T)");
  bout->add_option("--kind", kind, "alternating|sporadic|cyclic|lie")
      ->check(CLI::IsMember({"alternating", "sporadic", "cyclic", "lie"}));
  bout->add_option("--family", ofamily, "Lie family A-G");
  bout->add_option("--rank", orank, "Lie rank");
  bout->add_flag("--twisted", otwisted, "twisted group");
  bout->add_option("--q", oq, "field size");

  std::string fixture_dir;
  auto* maxtable = app.add_subcommand("maxtable", "dl*Max over the maximals listed in fixtures");
  maxtable->add_option("dir", fixture_dir, "fixture directory or root (default $DLSTAR_FIXTURES)");
  maxtable->add_flag("--json", json, "machine-readable output");

  std::string suite;
  std::uint64_t seed = 1;
  double budget = 3600;
  auto* verify = app.add_subcommand("verify", "run the scenario catalogue");
  verify->add_option("--suite", suite, "scenario id, tag, prefix* or comma list (default all)");
  verify->add_option("--seed", seed, "seed for the random property suites");
  verify->add_option("--budget", budget, "seconds before remaining scenarios are skipped");
  verify->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*analyze) return cmd_analyze(target, expr, json);
    if (*construct) return cmd_construct(cexpr, out, name);
    if (*parabolic) return cmd_parabolic(family, rank, twisted, triality, q, json);
    if (*bounds) {
      BoundCertificate c;
      if (*bpgroup) {
        c = pgroup_dl_bound(p, k);
      } else if (*bext) {
        c = ext_bound(parse_sections(sections));
      } else {
        using K = SocleDescriptor::Kind;
        K kk = kind == "alternating" ? K::alternating : kind == "sporadic" ? K::sporadic
               : kind == "cyclic"    ? K::cyclic
                                     : K::lie;
        if (ofamily.size() != 1) throw UsageError("--family takes a single letter A-G");
        c = out_dl_bound({kk, rootsys::parse_family(ofamily[0]), orank, otwisted, oq % 2 == 1});
      }
      if (json) {
        print_json(certificate_to_json(c));
      } else {
        print_certificate(c);
      }
      return exit_ok;
    }
    if (*maxtable) {
      if (fixture_dir.empty()) fixture_dir = default_fixture_root().string();
      return cmd_maxtable(fixture_dir, json);
    }
    if (*verify) return cmd_verify(suite, seed, budget, json);
  } catch (const UsageError& e) {
    std::cerr << "dlstar: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    std::cerr << "dlstar: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
