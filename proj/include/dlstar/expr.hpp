#ifndef DLSTAR_EXPR_HPP
#define DLSTAR_EXPR_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "dlstar/construct.hpp"

namespace dlstar {

/// A construction expression such as `wreath(sym(4),sym(4))` or `agl(2,3)`.
///
///     E := sym(n) | alt(n) | cyclic(n) | dihedral(n)
///        | gl(d,p) | sl(d,p) | agl(d,p)
///        | direct(E,E) | wreath(E,E) | prodact(E,E)
///        | diag(E) | exbad(E) | andalt(E)
struct ConstructionSpec {
  enum class Kind { sym, alt, cyclic, dihedral, gl, sl, agl, direct, wreath, prodact, diag, exbad, andalt };
  Kind kind = Kind::sym;
  std::vector<std::size_t> numbers;
  std::vector<ConstructionSpec> args;

  friend bool operator==(const ConstructionSpec&, const ConstructionSpec&) = default;
};

namespace detail {

struct KindInfo {
  std::string_view name;
  ConstructionSpec::Kind kind;
  int numbers;
  int subexprs;
};

inline constexpr KindInfo kind_table[] = {
    {"sym", ConstructionSpec::Kind::sym, 1, 0},         {"alt", ConstructionSpec::Kind::alt, 1, 0},
    {"cyclic", ConstructionSpec::Kind::cyclic, 1, 0},   {"dihedral", ConstructionSpec::Kind::dihedral, 1, 0},
    {"gl", ConstructionSpec::Kind::gl, 2, 0},           {"sl", ConstructionSpec::Kind::sl, 2, 0},
    {"agl", ConstructionSpec::Kind::agl, 2, 0},         {"direct", ConstructionSpec::Kind::direct, 0, 2},
    {"wreath", ConstructionSpec::Kind::wreath, 0, 2},   {"prodact", ConstructionSpec::Kind::prodact, 0, 2},
    {"diag", ConstructionSpec::Kind::diag, 0, 1},       {"exbad", ConstructionSpec::Kind::exbad, 0, 1},
    {"andalt", ConstructionSpec::Kind::andalt, 0, 1},
};

inline const KindInfo& info(ConstructionSpec::Kind k) {
  for (const auto& i : kind_table) {
    if (i.kind == k) return i;
  }
  throw InvalidArgument("unknown construction kind");
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  ConstructionSpec parse_all() {
    ConstructionSpec e = parse();
    ws();
    if (i_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression: " + what + " at offset " + std::to_string(i_) + " in '" + std::string(s_) + "'");
  }
  void ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  void expect(char c) {
    ws();
    if (i_ >= s_.size() || s_[i_] != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  std::size_t number() {
    ws();
    std::size_t start = i_;
    std::size_t v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      if (i_ - start > 9) fail("number too large");
      v = v * 10 + static_cast<std::size_t>(s_[i_++] - '0');
    }
    if (i_ == start) fail("expected a number");
    return v;
  }
  ConstructionSpec parse() {
    ws();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::string_view name = s_.substr(start, i_ - start);
    const KindInfo* ki = nullptr;
    for (const auto& k : kind_table) {
      if (k.name == name) ki = &k;
    }
    if (!ki) fail("unknown constructor '" + std::string(name) + "'");
    ConstructionSpec e;
    e.kind = ki->kind;
    expect('(');
    for (int k = 0; k < ki->numbers; ++k) {
      if (k) expect(',');
      e.numbers.push_back(number());
    }
    for (int k = 0; k < ki->subexprs; ++k) {
      if (k) expect(',');
      e.args.push_back(parse());
    }
    expect(')');
    return e;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline ConstructionSpec parse_construction(std::string_view text) { return detail::ExprParser(text).parse_all(); }

inline std::string to_string(const ConstructionSpec& e) {
  std::string out(detail::info(e.kind).name);
  out += '(';
  bool first = true;
  for (auto n : e.numbers) {
    if (!first) out += ',';
    out += std::to_string(n);
    first = false;
  }
  for (const auto& a : e.args) {
    if (!first) out += ',';
    out += to_string(a);
    first = false;
  }
  return out + ')';
}

/// Builds the group an expression denotes. `diag(T)` yields T x T on the
/// elements of T; `exbad(S)` yields the perfect group (S wr_5 Alt(5))'.
inline Group build(const ConstructionSpec& e, const Limits& lim = {}) {
  using K = ConstructionSpec::Kind;
  switch (e.kind) {
    case K::sym: return sym(e.numbers[0]);
    case K::alt: return alt(e.numbers[0]);
    case K::cyclic: return cyclic(e.numbers[0]);
    case K::dihedral: return dihedral(e.numbers[0]);
    case K::gl: return gl(e.numbers[0], e.numbers[1], lim);
    case K::sl: return sl(e.numbers[0], e.numbers[1], lim);
    case K::agl: return agl(e.numbers[0], e.numbers[1], lim);
    case K::direct: return direct_product(build(e.args[0], lim), build(e.args[1], lim));
    case K::wreath: return wreath_imprimitive(build(e.args[0], lim), build(e.args[1], lim), lim);
    case K::prodact: return wreath_product_action(build(e.args[0], lim), build(e.args[1], lim), lim);
    case K::diag: return diagonal_action(build(e.args[0], lim)).group;
    case K::exbad: return exbad(build(e.args[0], lim)).group;
    case K::andalt: return intersect_with_alt(build(e.args[0], lim));
  }
  throw InvalidArgument("unknown construction kind");
}

inline Group build(std::string_view text, const Limits& lim = {}) { return build(parse_construction(text), lim); }

}  // namespace dlstar

#endif  // DLSTAR_EXPR_HPP
