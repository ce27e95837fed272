#ifndef DLSTAR_INGEST_HPP
#define DLSTAR_INGEST_HPP

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dlstar/derived.hpp"
#include "dlstar/group.hpp"

namespace dlstar {

/// A group definition file: degree plus generators in 1-based cycle notation.
///
///     # comment
///     name M11          (optional)
///     degree 11
///     gen (1,2,3,4,5,6,7,8,9,10,11)
///     gen (3,7,11,8)(4,10,5,6)
///
/// Generators are stored in normalized cycle form, so serializing and
/// re-parsing reproduces the same value.
struct GroupFile {
  std::string name;
  std::size_t degree = 1;
  std::vector<std::string> generators;

  friend bool operator==(const GroupFile&, const GroupFile&) = default;

  Group to_group() const {
    std::vector<Permutation> gens;
    for (const auto& g : generators) gens.push_back(Permutation::parse(degree, g));
    return Group(degree, std::move(gens));
  }
};

namespace detail {
inline std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}
}  // namespace detail

inline GroupFile parse_group_file(std::string_view text, std::string default_name = {}) {
  GroupFile out;
  out.name = std::move(default_name);
  bool have_degree = false;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    auto sp = line.find_first_of(" \t");
    std::string key = line.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : detail::trim(line.substr(sp));
    if (key == "name") {
      if (rest.empty()) throw ParseError("'name' needs a value", lineno);
      out.name = rest;
    } else if (key == "degree") {
      if (have_degree) throw ParseError("duplicate 'degree' line", lineno);
      if (!out.generators.empty()) throw ParseError("'degree' must precede generators", lineno);
      if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError("'degree' needs a positive integer", lineno);
      }
      if (rest.size() > 9) throw ParseError("degree too large", lineno);
      out.degree = std::stoul(rest);
      if (out.degree == 0) throw ParseError("degree must be positive", lineno);
      have_degree = true;
    } else if (key == "gen") {
      if (!have_degree) throw ParseError("'gen' before 'degree'", lineno);
      try {
        out.generators.push_back(Permutation::parse(out.degree, rest).to_cycle_string());
      } catch (const Error& e) {
        throw ParseError(e.what(), lineno);
      }
    } else {
      throw ParseError("unknown directive '" + key + "'", lineno);
    }
  }
  if (!have_degree) throw ParseError("missing 'degree' line");
  return out;
}

inline std::string serialize_group_file(const GroupFile& f) {
  std::string out;
  if (!f.name.empty()) out += "name " + f.name + "\n";
  out += "degree " + std::to_string(f.degree) + "\n";
  for (const auto& g : f.generators) out += "gen " + g + "\n";
  return out;
}

inline GroupFile group_file_from(const Group& g, std::string name = {}) {
  GroupFile f{std::move(name), g.degree(), {}};
  for (const auto& x : g.generators()) f.generators.push_back(x.to_cycle_string());
  return f;
}

inline std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline GroupFile load_group_file(const std::filesystem::path& p) {
  try {
    return parse_group_file(read_text(p), p.stem().string());
  } catch (const ParseError& e) {
    throw ParseError(p.string() + ": " + e.what());
  }
}

/// A group together with generator sets for (representatives of) its
/// maximal subgroups.
///
/// On disk: a directory holding `group.gens`, `maximal_01.gens`, ... and an
/// optional `expected.txt` whose first non-comment token is the expected
/// maximum dl* over the listed maximals.
struct FixtureEntry {
  GroupFile group;
  std::vector<GroupFile> maximals;
  std::optional<std::size_t> expected_dlstar_max;
  bool complete = true;  // false when the maximals list is known to omit classes
};

inline FixtureEntry load_fixture(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error("fixture directory not found: " + dir.string());
  FixtureEntry e;
  e.group = load_group_file(dir / "group.gens");
  if (e.group.name == "group") e.group.name = dir.filename().string();
  std::vector<fs::path> maxfiles;
  for (const auto& ent : fs::directory_iterator(dir)) {
    auto fn = ent.path().filename().string();
    if (fn.rfind("maximal_", 0) == 0 && ent.path().extension() == ".gens") maxfiles.push_back(ent.path());
  }
  std::sort(maxfiles.begin(), maxfiles.end());
  for (const auto& p : maxfiles) {
    e.maximals.push_back(load_group_file(p));
    if (e.maximals.back().degree != e.group.degree) {
      throw ParseError(p.string() + ": degree differs from group.gens");
    }
  }
  if (fs::exists(dir / "expected.txt")) {
    std::istringstream in(read_text(dir / "expected.txt"));
    std::string line;
    while (std::getline(in, line)) {
      line = detail::trim(line.substr(0, line.find('#')));
      if (line.empty()) continue;
      if (line == "incomplete") {
        e.complete = false;
        continue;
      }
      try {
        e.expected_dlstar_max = std::stoul(line);
      } catch (const std::exception&) {
        throw ParseError((dir / "expected.txt").string() + ": expected an integer, got '" + line + "'");
      }
    }
  }
  return e;
}

/// Lists fixture directories (those containing group.gens) below root, sorted by name.
inline std::vector<std::filesystem::path> list_fixtures(const std::filesystem::path& root) {
  namespace fs = std::filesystem;
  std::vector<fs::path> out;
  if (!fs::is_directory(root)) return out;
  for (const auto& ent : fs::directory_iterator(root)) {
    if (ent.is_directory() && fs::exists(ent.path() / "group.gens")) out.push_back(ent.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct MaximalReport {
  std::string name;
  Integer order;
  std::size_t dlstar = 0;
};

struct DlstarMaxReport {
  std::string name;
  std::size_t degree = 0;
  Integer order;
  std::vector<MaximalReport> maximals;
  std::size_t dlstar_max = 0;
  std::optional<std::size_t> expected;
  bool lower_bound_only = false;  // maximals list incomplete
};

/// max dl*(H) over the maximal subgroups listed in the fixture.
inline DlstarMaxReport dlstar_max(const FixtureEntry& e) {
  Group g = e.group.to_group();
  DlstarMaxReport r{e.group.name, g.degree(), g.order(), {}, 0, e.expected_dlstar_max, !e.complete};
  for (const auto& mf : e.maximals) {
    Group h = mf.to_group();
    for (const auto& x : h.generators()) {
      if (!g.contains(x)) {
        throw NotInGroup("dlstar_max: generator of " + mf.name + " is not in " + e.group.name);
      }
    }
    std::size_t d = dl_star(h);
    r.maximals.push_back({mf.name, h.order(), d});
    r.dlstar_max = std::max(r.dlstar_max, d);
  }
  return r;
}

}  // namespace dlstar

#endif  // DLSTAR_INGEST_HPP
