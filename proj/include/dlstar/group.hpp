#ifndef DLSTAR_GROUP_HPP
#define DLSTAR_GROUP_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <numeric>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "dlstar/errors.hpp"
#include "dlstar/permutation.hpp"

namespace dlstar {

using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& n) { return n.str(); }

/// Configurable size caps shared by the constructors and the coset action.
struct Limits {
  std::size_t degree_cap = 100000;
  std::size_t index_cap = 1000000;
};

/// A base and strong generating set, built by the deterministic
/// Schreier-Sims algorithm.
///
/// Base points are the smallest moved point of whichever element forces a
/// new level, unless a prefix is requested. Every level keeps explicit
/// inverse transversals, so sifting costs one composition per level.
/// Generators can be added incrementally; after each call to
/// add_generator() the chain is complete for the group generated so far.
class StabilizerChain {
 public:
  explicit StabilizerChain(std::size_t degree, std::span<const Point> base_prefix = {}) : degree_(degree) {
    for (Point b : base_prefix) {
      if (b >= degree) throw PointOutOfRange("base point outside domain");
      push_level(b);
    }
  }

  std::size_t degree() const noexcept { return degree_; }
  std::size_t length() const noexcept { return levels_.size(); }

  std::vector<Point> base() const {
    std::vector<Point> b;
    for (const auto& l : levels_) b.push_back(l.base);
    return b;
  }

  std::span<const Point> orbit(std::size_t level) const { return levels_[level].orbit; }

  /// Strong generators of the stabilizer of the first `level` base points.
  std::vector<Permutation> level_generators(std::size_t level) const {
    std::vector<Permutation> out;
    for (std::size_t s : levels_[level].gens) out.push_back(strong_[s]);
    return out;
  }

  const std::vector<Permutation>& strong_generators() const noexcept { return strong_; }

  Integer order() const {
    Integer n = 1;
    for (const auto& l : levels_) n *= l.orbit.size();
    return n;
  }

  /// Sifts g through the chain. Returns the residue and the level at which
  /// sifting stopped (length() when it passed every level).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from = 0) const {
    std::vector<Point> w(g.images().begin(), g.images().end());
    std::size_t l = sift_in_place(w, from);
    return {Permutation::from_images(std::move(w)), l};
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) throw DegreeMismatch("permutation degree differs from group degree");
    std::vector<Point> w(g.images().begin(), g.images().end());
    if (sift_in_place(w, 0) != levels_.size()) return false;
    for (Point x = 0; x < degree_; ++x) {
      if (w[x] != x) return false;
    }
    return true;
  }

  /// Adds g to the generating set. Returns false if g was already a member.
  bool add_generator(const Permutation& g) {
    if (g.degree() != degree_) throw DegreeMismatch("generator degree differs from chain degree");
    std::vector<Point> w(g.images().begin(), g.images().end());
    std::size_t m = sift_in_place(w, 0);
    if (m == levels_.size() && is_identity(w)) return false;
    // The residue fixes the first m base points, so it joins levels 0..m.
    if (m == levels_.size()) push_level(first_moved(w));
    add_strong(Permutation::from_images(std::move(w)), 0, m);
    for (std::size_t l = m + 1; l-- > 0;) saturate(l);
    return true;
  }

  /// Canonical label of the right coset H c, where H is the group of this
  /// chain. The coset element h * c with lexicographically least base image
  /// is unique; the label is its image of `determining`, which must be a base
  /// of some group containing c (e.g. the ambient group's base).
  std::vector<Point> right_coset_label(std::span<const Point> c_images, std::span<const Point> determining) const {
    std::vector<Point> c(c_images.begin(), c_images.end()), tmp(degree_);
    for (const auto& lv : levels_) {
      std::size_t best_k = 0;
      Point best = c[lv.orbit[0]];
      for (std::size_t k = 1; k < lv.orbit.size(); ++k) {
        if (c[lv.orbit[k]] < best) {
          best = c[lv.orbit[k]];
          best_k = k;
        }
      }
      if (best_k == 0) continue;
      // c <- u * c, where u maps the base point to orbit[best_k].
      const Point* inv = lv.inv_trans.data() + best_k * degree_;
      for (Point y = 0; y < degree_; ++y) tmp[inv[y]] = c[y];
      c.swap(tmp);
    }
    std::vector<Point> label;
    label.reserve(determining.size());
    for (Point p : determining) label.push_back(c[p]);
    return label;
  }

  /// Uniformly random element, as a product of one transversal element per level.
  template <class URBG>
  Permutation random_element(URBG& rng) const {
    std::vector<Point> w(degree_), fwd(degree_);
    std::iota(w.begin(), w.end(), Point{0});
    for (std::size_t l = levels_.size(); l-- > 0;) {
      const Level& lv = levels_[l];
      std::uniform_int_distribution<std::size_t> pick(0, lv.orbit.size() - 1);
      const Point* inv = lv.inv_trans.data() + pick(rng) * degree_;
      for (Point y = 0; y < degree_; ++y) fwd[inv[y]] = y;
      for (auto& y : w) y = fwd[y];
    }
    return Permutation::from_images(std::move(w));
  }

  /// The chain of the pointwise stabilizer of the first k base points.
  StabilizerChain suffix(std::size_t k) const {
    StabilizerChain out(degree_);
    std::vector<std::ptrdiff_t> remap(strong_.size(), -1);
    for (std::size_t l = k; l < levels_.size(); ++l) {
      Level lv = levels_[l];
      for (auto& s : lv.gens) {
        if (remap[s] < 0) {
          remap[s] = static_cast<std::ptrdiff_t>(out.strong_.size());
          out.strong_.push_back(strong_[s]);
          out.strong_inv_.push_back(strong_inv_[s]);
        }
        s = static_cast<std::size_t>(remap[s]);
      }
      out.levels_.push_back(std::move(lv));
    }
    return out;
  }

 private:
  struct Level {
    Point base = 0;
    std::vector<std::size_t> gens;   // indices into strong_
    std::vector<Point> orbit;
    std::vector<std::int32_t> pos;   // orbit index per point, -1 outside the orbit
    std::vector<Point> inv_trans;    // row k maps orbit[k] back to base
    std::vector<std::size_t> done;   // generators already paired with orbit[k]
  };

  static bool is_identity(std::span<const Point> w) {
    for (Point x = 0; x < w.size(); ++x) {
      if (w[x] != x) return false;
    }
    return true;
  }

  static Point first_moved(std::span<const Point> w) {
    for (Point x = 0; x < w.size(); ++x) {
      if (w[x] != x) return x;
    }
    return 0;
  }

  void push_level(Point b) {
    Level l;
    l.base = b;
    l.pos.assign(degree_, -1);
    l.pos[b] = 0;
    l.orbit.push_back(b);
    l.inv_trans.resize(degree_);
    std::iota(l.inv_trans.begin(), l.inv_trans.end(), Point{0});
    l.done.push_back(0);
    levels_.push_back(std::move(l));
  }

  std::size_t sift_in_place(std::vector<Point>& w, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      const Level& lv = levels_[l];
      Point b = w[lv.base];
      if (b == lv.base) continue;
      std::int32_t k = lv.pos[b];
      if (k < 0) return l;
      const Point* u = lv.inv_trans.data() + static_cast<std::size_t>(k) * degree_;
      for (auto& y : w) y = u[y];
    }
    return levels_.size();
  }

  void add_strong(const Permutation& g, std::size_t from, std::size_t to) {
    std::size_t idx = strong_.size();
    strong_.push_back(g);
    strong_inv_.push_back(g.inverse());
    for (std::size_t l = from; l <= to; ++l) {
      levels_[l].gens.push_back(idx);
      extend_orbit(l, idx);
    }
  }

  void add_orbit_point(Level& lv, std::size_t from_index, std::size_t gen) {
    const Permutation& g = strong_[gen];
    const Permutation& ginv = strong_inv_[gen];
    Point delta = g(lv.orbit[from_index]);
    lv.pos[delta] = static_cast<std::int32_t>(lv.orbit.size());
    lv.orbit.push_back(delta);
    lv.done.push_back(0);
    std::size_t old = lv.inv_trans.size();
    lv.inv_trans.resize(old + degree_);
    const Point* src = lv.inv_trans.data() + from_index * degree_;
    Point* dst = lv.inv_trans.data() + old;
    for (Point x = 0; x < degree_; ++x) dst[x] = src[ginv(x)];
  }

  void extend_orbit(std::size_t l, std::size_t new_gen) {
    Level& lv = levels_[l];
    std::size_t old_size = lv.orbit.size();
    for (std::size_t k = 0; k < old_size; ++k) {
      if (lv.pos[strong_[new_gen](lv.orbit[k])] < 0) add_orbit_point(lv, k, new_gen);
    }
    for (std::size_t k = old_size; k < lv.orbit.size(); ++k) {
      for (std::size_t s : lv.gens) {
        if (lv.pos[strong_[s](lv.orbit[k])] < 0) add_orbit_point(lv, k, s);
      }
    }
  }

  // Sifts every unchecked Schreier generator of level i, adding residues
  // to deeper levels and completing those first.
  void saturate(std::size_t i) {
    std::vector<Point> fwd(degree_), w(degree_);
    for (std::size_t k = 0; k < levels_[i].orbit.size(); ++k) {
      if (levels_[i].done[k] >= levels_[i].gens.size()) continue;
      {
        const Point* inv = levels_[i].inv_trans.data() + k * degree_;
        for (Point x = 0; x < degree_; ++x) fwd[inv[x]] = x;
      }
      while (levels_[i].done[k] < levels_[i].gens.size()) {
        std::size_t s = levels_[i].gens[levels_[i].done[k]++];
        const Permutation& g = strong_[s];
        const Level& lv = levels_[i];
        Point delta = g(lv.orbit[k]);
        const Point* uinv = lv.inv_trans.data() + static_cast<std::size_t>(lv.pos[delta]) * degree_;
        bool trivial = true;
        for (Point x = 0; x < degree_; ++x) {
          w[x] = uinv[g(fwd[x])];
          trivial = trivial && w[x] == x;
        }
        if (trivial) continue;
        std::size_t m = sift_in_place(w, i + 1);
        if (m == levels_.size() && is_identity(w)) continue;
        if (m == levels_.size()) push_level(first_moved(w));
        add_strong(Permutation::from_images(w), i + 1, m);
        for (std::size_t l = m + 1; l-- > i + 1;) saturate(l);
      }
    }
  }

  std::size_t degree_;
  std::vector<Level> levels_;
  std::vector<Permutation> strong_;
  std::vector<Permutation> strong_inv_;
};

/// A finite permutation group: its generators together with a complete
/// stabilizer chain. Immutable after construction; copies share the chain.
class Group {
 public:
  Group() : Group(1, {}) {}

  /// Runs Schreier-Sims on the given generators.
  Group(std::size_t degree, std::vector<Permutation> generators) : degree_(degree) {
    if (degree == 0) throw InvalidArgument("group degree must be positive");
    auto chain = std::make_shared<StabilizerChain>(degree);
    for (const auto& g : generators) {
      if (g.degree() != degree) throw DegreeMismatch("generator degree differs from group degree");
      chain->add_generator(g);
    }
    generators_ = std::move(generators);
    chain_ = std::move(chain);
  }

  /// Adopts an already complete chain for the group generated by `generators`.
  Group(std::size_t degree, std::vector<Permutation> generators, std::shared_ptr<const StabilizerChain> chain)
      : degree_(degree), generators_(std::move(generators)), chain_(std::move(chain)) {}

  static Group trivial(std::size_t degree) { return Group(degree, {}); }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const StabilizerChain& chain() const noexcept { return *chain_; }
  std::shared_ptr<const StabilizerChain> shared_chain() const noexcept { return chain_; }

  Integer order() const { return chain_->order(); }
  bool is_trivial() const { return chain_->order() == 1; }
  std::vector<Point> base() const { return chain_->base(); }

  bool contains(const Permutation& p) const { return chain_->contains(p); }

  /// true when every generator of h lies in this group.
  bool contains(const Group& h) const {
    if (h.degree() != degree_) throw DegreeMismatch("subgroup degree differs");
    for (const auto& g : h.generators()) {
      if (!contains(g)) return false;
    }
    return true;
  }

  /// Orbit of a point, in breadth-first discovery order.
  std::vector<Point> orbit(Point x) const {
    if (x >= degree_) throw PointOutOfRange("point outside domain");
    std::vector<Point> orb{x};
    std::vector<bool> seen(degree_, false);
    seen[x] = true;
    for (std::size_t k = 0; k < orb.size(); ++k) {
      for (const auto& g : generators_) {
        Point y = g(orb[k]);
        if (!seen[y]) {
          seen[y] = true;
          orb.push_back(y);
        }
      }
    }
    return orb;
  }

  bool is_transitive() const { return orbit(0).size() == degree_; }

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<const StabilizerChain> chain_;
};

/// Builds a group from generators; the deterministic Schreier-Sims entry point.
inline Group schreier_sims(std::size_t degree, std::vector<Permutation> gens) {
  return Group(degree, std::move(gens));
}

inline Integer order(const Group& g) { return g.order(); }

inline bool contains(const Group& g, const Permutation& p) { return g.contains(p); }

/// Pointwise stabilizer of `pts` (0-based, in the given order).
inline Group point_stabilizer(const Group& g, std::span<const Point> pts) {
  if (pts.empty()) throw InvalidArgument("point_stabilizer needs at least one point");
  for (Point p : pts) {
    if (p >= g.degree()) throw PointOutOfRange("point " + std::to_string(p + 1) + " outside domain");
  }
  auto base = g.base();
  bool prefix = pts.size() <= base.size() && std::equal(pts.begin(), pts.end(), base.begin());
  StabilizerChain chain = [&] {
    if (prefix) return g.chain().suffix(pts.size());
    StabilizerChain rebuilt(g.degree(), pts);
    for (const auto& s : g.chain().strong_generators()) rebuilt.add_generator(s);
    return rebuilt.suffix(pts.size());
  }();
  auto gens = chain.strong_generators();
  return Group(g.degree(), std::move(gens), std::make_shared<const StabilizerChain>(std::move(chain)));
}

inline Group point_stabilizer(const Group& g, std::initializer_list<Point> pts) {
  std::vector<Point> v(pts);
  return point_stabilizer(g, std::span<const Point>(v));
}

}  // namespace dlstar

#endif  // DLSTAR_GROUP_HPP
