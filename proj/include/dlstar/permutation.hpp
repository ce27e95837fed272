#ifndef DLSTAR_PERMUTATION_HPP
#define DLSTAR_PERMUTATION_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dlstar/errors.hpp"

namespace dlstar {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}, stored as an image table.
///
/// Points are 0-based internally. Cycle notation (parsing and printing) is
/// 1-based. Products act on the right: `(p * q)(x) == q(p(x))`, so `p * q`
/// means "first p, then q", matching the usual convention for permutation
/// group software.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree) {
    Permutation p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), Point{0});
    return p;
  }

  /// Builds from a 0-based image table. Throws InvalidPermutation unless it is a bijection.
  static Permutation from_images(std::vector<Point> images) {
    std::vector<bool> seen(images.size(), false);
    for (Point x : images) {
      if (x >= images.size() || seen[x]) {
        throw InvalidPermutation("image table is not a bijection");
      }
      seen[x] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  /// Builds from 1-based disjoint cycles, e.g. {{1,2,3},{4,5}}.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
    Permutation p = identity(degree);
    std::vector<bool> used(degree, false);
    for (const auto& cyc : cycles) {
      for (Point x : cyc) {
        if (x < 1 || x > degree) {
          throw PointOutOfRange("point " + std::to_string(x) + " outside 1.." + std::to_string(degree));
        }
        if (used[x - 1]) {
          throw InvalidPermutation("point " + std::to_string(x) + " repeated across cycles");
        }
        used[x - 1] = true;
      }
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        p.images_[cyc[i] - 1] = cyc[(i + 1) % cyc.size()] - 1;
      }
    }
    return p;
  }

  /// Parses 1-based cycle notation such as "(1,2,3)(4,5)" or "()".
  /// Whitespace is ignored; commas or blanks separate points.
  static Permutation parse(std::size_t degree, std::string_view text) {
    std::vector<std::vector<Point>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
      if (text[i] != '(') throw InvalidPermutation("expected '(' in cycle notation");
      ++i;
      std::vector<Point> cyc;
      for (;;) {
        skip_ws();
        if (i >= text.size()) throw InvalidPermutation("unterminated cycle");
        if (text[i] == ')') {
          ++i;
          break;
        }
        if (text[i] == ',') {
          if (cyc.empty()) throw InvalidPermutation("unexpected ','");
          ++i;
          continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
          throw InvalidPermutation(std::string("unexpected character '") + text[i] + "' in cycle");
        }
        std::uint64_t v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
          if (v > 0xFFFFFFFFull) throw PointOutOfRange("point value too large");
          ++i;
        }
        cyc.push_back(static_cast<Point>(v));
      }
      if (!cyc.empty()) cycles.push_back(std::move(cyc));
      skip_ws();
    }
    return from_cycles(degree, cycles);
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (Point x = 0; x < images_.size(); ++x) {
      if (images_[x] != x) return false;
    }
    return true;
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (Point x = 0; x < images_.size(); ++x) r.images_[images_[x]] = x;
    return r;
  }

  /// First p, then q.
  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    Permutation r;
    r.images_.resize(p.images_.size());
    for (std::size_t x = 0; x < p.images_.size(); ++x) r.images_[x] = q.images_[p.images_[x]];
    return r;
  }

  Permutation& operator*=(const Permutation& q) {
    for (auto& y : images_) y = q.images_[y];
    return *this;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

  /// Smallest point not fixed, if any.
  std::optional<Point> first_moved_point() const noexcept {
    for (Point x = 0; x < images_.size(); ++x) {
      if (images_[x] != x) return x;
    }
    return std::nullopt;
  }

  /// true for even permutations.
  bool is_even() const {
    std::vector<bool> seen(images_.size(), false);
    std::size_t transpositions = 0;
    for (Point x = 0; x < images_.size(); ++x) {
      if (seen[x]) continue;
      std::size_t len = 0;
      for (Point y = x; !seen[y]; y = images_[y]) {
        seen[y] = true;
        ++len;
      }
      transpositions += len - 1;
    }
    return transpositions % 2 == 0;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Point x : images_) h = (h ^ x) * 1099511628211ull;
    return h;
  }

  /// 1-based disjoint-cycle string, fixed points omitted; identity is "()".
  std::string to_cycle_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (Point x = 0; x < images_.size(); ++x) {
      if (seen[x] || images_[x] == x) continue;
      out += '(';
      for (Point y = x; !seen[y]; y = images_[y]) {
        seen[y] = true;
        if (y != x) out += ',';
        out += std::to_string(y + 1);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

 private:
  std::vector<Point> images_;
};

/// [a, b] = a^-1 b^-1 a b.
inline Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

/// g^-1 x g.
inline Permutation conjugate(const Permutation& x, const Permutation& g) { return g.inverse() * x * g; }

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept { return p.hash(); }
};

}  // namespace dlstar

#endif  // DLSTAR_PERMUTATION_HPP
