#ifndef DLSTAR_COSET_ACTION_HPP
#define DLSTAR_COSET_ACTION_HPP

#include <unordered_map>
#include <vector>

#include "dlstar/derived.hpp"
#include "dlstar/group.hpp"

namespace dlstar {

namespace detail {
struct LabelHash {
  std::size_t operator()(const std::vector<Point>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Point x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};
}  // namespace detail

/// The action of G on the right cosets of a subgroup H. Coset 0 is H
/// itself; the others are numbered in breadth-first discovery order.
class CosetAction {
 public:
  CosetAction(const Group& g, const Group& h, std::size_t cap = Limits{}.index_cap)
      : subgroup_(h.shared_chain()), ambient_base_(g.base()) {
    if (g.degree() != h.degree()) throw DegreeMismatch("coset_action: groups act on different degrees");
    if (!g.contains(h)) throw NotInGroup("coset_action: H is not a subgroup of G");
    Integer idx = g.order() / h.order();
    if (idx > cap) {
      throw IndexCapExceeded("coset_action: index " + idx.str() + " exceeds cap " + std::to_string(cap));
    }
    Permutation id = Permutation::identity(g.degree());
    reps_.push_back(id);
    labels_.emplace(subgroup_->right_coset_label(id.images(), ambient_base_), 0);
    for (std::size_t k = 0; k < reps_.size(); ++k) {
      for (const auto& x : g.generators()) {
        Permutation y = reps_[k] * x;
        auto [it, fresh] = labels_.try_emplace(subgroup_->right_coset_label(y.images(), ambient_base_),
                                               static_cast<Point>(reps_.size()));
        if (fresh) reps_.push_back(std::move(y));
      }
    }
    std::vector<Permutation> images;
    for (const auto& x : g.generators()) images.push_back(image(x));
    image_ = Group(reps_.size(), std::move(images));
  }

  std::size_t index() const noexcept { return reps_.size(); }

  /// Permutation induced on the cosets by an element of G.
  Permutation image(const Permutation& x) const {
    std::vector<Point> img(reps_.size());
    for (std::size_t k = 0; k < reps_.size(); ++k) {
      img[k] = labels_.at(subgroup_->right_coset_label((reps_[k] * x).images(), ambient_base_));
    }
    return Permutation::from_images(std::move(img));
  }

  /// The permutation image of G; isomorphic to G/H when H is normal.
  const Group& image_group() const noexcept { return image_; }

 private:
  std::shared_ptr<const StabilizerChain> subgroup_;
  std::vector<Point> ambient_base_;
  std::vector<Permutation> reps_;
  std::unordered_map<std::vector<Point>, Point, detail::LabelHash> labels_;
  Group image_;
};

struct CosetImage {
  Group image;
  std::size_t index;
};

inline CosetImage coset_action(const Group& g, const Group& h, std::size_t cap = Limits{}.index_cap) {
  CosetAction act(g, h, cap);
  return {act.image_group(), act.index()};
}

/// Checks (G/N)^(n) = N G^(n) / N by computing both sides in the coset
/// action of G on N.
inline bool quotient_derived_check(const Group& g, const Group& n, std::size_t depth,
                                   std::size_t cap = Limits{}.index_cap) {
  if (!g.contains(n) || !is_normal(g, n)) throw NotNormal("quotient_derived_check: N is not normal in G");
  CosetAction act(g, n, cap);
  auto quotient_terms = derived_terms(act.image_group());
  const Group& lhs = quotient_terms[std::min(depth, quotient_terms.size() - 1)];
  auto terms = derived_terms(g);
  const Group& gn = terms[std::min(depth, terms.size() - 1)];
  Group ngn = join(n, gn);
  if (lhs.order() * n.order() != ngn.order()) return false;
  for (const auto& x : gn.generators()) {
    if (!lhs.contains(act.image(x))) return false;
  }
  return true;
}

}  // namespace dlstar

#endif  // DLSTAR_COSET_ACTION_HPP
