#ifndef DLSTAR_CONSTRUCT_HPP
#define DLSTAR_CONSTRUCT_HPP

#include <optional>
#include <unordered_map>
#include <vector>

#include "dlstar/coset_action.hpp"
#include "dlstar/derived.hpp"
#include "dlstar/group.hpp"

namespace dlstar {

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

namespace detail {

inline Permutation cycle_on(std::size_t degree, Point first, Point last) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (Point x = first; x < last; ++x) img[x] = x + 1;
  img[last] = first;
  return Permutation::from_images(std::move(img));
}

inline std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap, const char* what) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > cap / std::max<std::size_t>(base, 1)) {
      throw DegreeCapExceeded(std::string(what) + ": degree exceeds cap " + std::to_string(cap));
    }
    r *= base;
  }
  if (r > cap) throw DegreeCapExceeded(std::string(what) + ": degree exceeds cap " + std::to_string(cap));
  return r;
}

// Embeds p (acting on its own degree) into a larger domain, shifted by offset.
inline Permutation embed(const Permutation& p, std::size_t degree, std::size_t offset) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (Point x = 0; x < p.degree(); ++x) img[offset + x] = static_cast<Point>(offset + p(x));
  return Permutation::from_images(std::move(img));
}

// Smallest point of each orbit of `top` on its domain.
inline std::vector<Point> orbit_representatives(const Group& top) {
  std::vector<bool> seen(top.degree(), false);
  std::vector<Point> reps;
  for (Point x = 0; x < top.degree(); ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (Point y : top.orbit(x)) seen[y] = true;
  }
  return reps;
}

inline Permutation restrict_to(const Permutation& p, std::size_t n) {
  std::vector<Point> img(p.images().begin(), p.images().begin() + static_cast<std::ptrdiff_t>(n));
  return Permutation::from_images(std::move(img));
}

// Vectors of F_p^d are encoded as base-p integers, coordinate i at digit i.
struct VectorSpace {
  std::size_t d, p, size;
  std::vector<std::size_t> digits(std::size_t v) const {
    std::vector<std::size_t> c(d);
    for (std::size_t i = 0; i < d; ++i, v /= p) c[i] = v % p;
    return c;
  }
  std::size_t encode(const std::vector<std::size_t>& c) const {
    std::size_t v = 0;
    for (std::size_t i = d; i-- > 0;) v = v * p + c[i];
    return v;
  }
  // v -> M v for a d x d matrix in row-major order.
  std::size_t apply(const std::vector<std::size_t>& m, std::size_t v) const {
    auto c = digits(v);
    std::vector<std::size_t> r(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) r[i] = (r[i] + m[i * d + j] * c[j]) % p;
    }
    return encode(r);
  }
};

inline std::size_t primitive_root(std::size_t p) {
  for (std::size_t g = 1; g < p; ++g) {
    std::size_t x = 1, ord = 0;
    do {
      x = x * g % p;
      ++ord;
    } while (x != 1);
    if (ord == p - 1) return g;
  }
  return 1;
}

// Adjacent elementary transvections I + E_{i,i+1}, I + E_{i+1,i}, which
// generate SL_d(p) over a prime field; with_diagonal adds diag(w, 1, ..., 1).
inline std::vector<std::vector<std::size_t>> linear_generators(std::size_t d, std::size_t p, bool with_diagonal) {
  std::vector<std::vector<std::size_t>> mats;
  auto identity = [&] {
    std::vector<std::size_t> m(d * d, 0);
    for (std::size_t i = 0; i < d; ++i) m[i * d + i] = 1;
    return m;
  };
  if (with_diagonal && p > 2) {
    auto m = identity();
    m[0] = primitive_root(p);
    mats.push_back(m);
  }
  for (std::size_t i = 0; i + 1 < d; ++i) {
    auto up = identity();
    up[i * d + i + 1] = 1;
    mats.push_back(up);
    auto down = identity();
    down[(i + 1) * d + i] = 1;
    mats.push_back(down);
  }
  return mats;
}

inline void check_linear_params(std::size_t d, std::size_t p, const Limits& lim, const char* what) {
  if (!is_prime(p)) throw InvalidArgument(std::string(what) + ": p = " + std::to_string(p) + " is not prime");
  if (d < 1) throw InvalidArgument(std::string(what) + ": dimension must be at least 1");
  checked_power(p, d, lim.degree_cap, what);
}

inline Group linear_group(std::size_t d, std::size_t p, bool with_diagonal, bool affine, const Limits& lim) {
  VectorSpace vs{d, p, checked_power(p, d, lim.degree_cap, "linear group")};
  // Affine groups act on all vectors; linear groups on the nonzero ones.
  std::size_t degree = affine ? vs.size : vs.size - 1;
  std::size_t shift = affine ? 0 : 1;
  if (degree == 0) throw InvalidArgument("linear group on an empty domain");
  std::vector<Permutation> gens;
  for (const auto& m : linear_generators(d, p, with_diagonal)) {
    std::vector<Point> img(degree);
    for (std::size_t v = shift; v < vs.size; ++v) img[v - shift] = static_cast<Point>(vs.apply(m, v) - shift);
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  if (affine) {
    std::vector<Point> img(degree);
    for (std::size_t v = 0; v < vs.size; ++v) {
      auto c = vs.digits(v);
      c[0] = (c[0] + 1) % p;
      img[v] = static_cast<Point>(vs.encode(c));
    }
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  return Group(degree, std::move(gens));
}

}  // namespace detail

/// Sym(n) in its natural action.
inline Group sym(std::size_t n) {
  if (n < 1) throw InvalidArgument("sym: n must be at least 1");
  std::vector<Permutation> gens;
  if (n >= 3) gens.push_back(detail::cycle_on(n, 0, static_cast<Point>(n - 1)));
  if (n >= 2) gens.push_back(detail::cycle_on(n, 0, 1));
  return Group(n, std::move(gens));
}

/// Alt(n), generated by (1,2,3) and an n-cycle (n odd) or (2,...,n) (n even).
inline Group alt(std::size_t n) {
  if (n < 1) throw InvalidArgument("alt: n must be at least 1");
  std::vector<Permutation> gens;
  if (n >= 3) gens.push_back(detail::cycle_on(n, 0, 2));
  if (n >= 4) {
    gens.push_back(n % 2 ? detail::cycle_on(n, 0, static_cast<Point>(n - 1))
                         : detail::cycle_on(n, 1, static_cast<Point>(n - 1)));
  }
  return Group(n, std::move(gens));
}

inline Group cyclic(std::size_t n) {
  if (n < 1) throw InvalidArgument("cyclic: n must be at least 1");
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(detail::cycle_on(n, 0, static_cast<Point>(n - 1)));
  return Group(n, std::move(gens));
}

/// Symmetries of the n-gon acting on its vertices.
inline Group dihedral(std::size_t n) {
  if (n < 3) throw InvalidArgument("dihedral: n must be at least 3");
  std::vector<Point> refl(n);
  for (Point i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
  return Group(n, {detail::cycle_on(n, 0, static_cast<Point>(n - 1)), Permutation::from_images(std::move(refl))});
}

/// GL_d(p) on the p^d - 1 nonzero vectors.
inline Group gl(std::size_t d, std::size_t p, const Limits& lim = {}) {
  detail::check_linear_params(d, p, lim, "gl");
  return detail::linear_group(d, p, true, false, lim);
}

/// SL_d(p) on the p^d - 1 nonzero vectors.
inline Group sl(std::size_t d, std::size_t p, const Limits& lim = {}) {
  detail::check_linear_params(d, p, lim, "sl");
  return detail::linear_group(d, p, false, false, lim);
}

/// AGL_d(p) on all p^d vectors.
inline Group agl(std::size_t d, std::size_t p, const Limits& lim = {}) {
  detail::check_linear_params(d, p, lim, "agl");
  return detail::linear_group(d, p, true, true, lim);
}

/// A x B on the disjoint union of the two domains.
inline Group direct_product(const Group& a, const Group& b) {
  std::size_t n = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) gens.push_back(detail::embed(g, n, 0));
  for (const auto& g : b.generators()) gens.push_back(detail::embed(g, n, a.degree()));
  return Group(n, std::move(gens));
}

/// A wr Top in its imprimitive action on deg(A) * deg(Top) points; point
/// x of block b is b * deg(A) + x.
inline Group wreath_imprimitive(const Group& a, const Group& top, const Limits& lim = {}) {
  std::size_t m = a.degree(), d = top.degree();
  if (m * d > lim.degree_cap) throw DegreeCapExceeded("wreath: degree exceeds cap");
  std::size_t n = m * d;
  std::vector<Permutation> gens;
  for (Point b : detail::orbit_representatives(top)) {
    for (const auto& g : a.generators()) gens.push_back(detail::embed(g, n, b * m));
  }
  for (const auto& t : top.generators()) {
    std::vector<Point> img(n);
    for (Point b = 0; b < d; ++b) {
      for (Point x = 0; x < m; ++x) img[b * m + x] = static_cast<Point>(t(b) * m + x);
    }
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  return Group(n, std::move(gens));
}

/// A wr Top in product action on deg(A)^deg(Top) tuples; the tuple
/// (x_0, ..., x_{d-1}) is the point sum x_i m^i.
inline Group wreath_product_action(const Group& a, const Group& top, const Limits& lim = {}) {
  std::size_t m = a.degree(), d = top.degree();
  std::size_t n = detail::checked_power(m, d, lim.degree_cap, "prodact");
  std::vector<std::size_t> weight(d, 1);
  for (std::size_t i = 1; i < d; ++i) weight[i] = weight[i - 1] * m;
  auto digit = [&](std::size_t v, std::size_t i) { return (v / weight[i]) % m; };
  std::vector<Permutation> gens;
  for (Point c : detail::orbit_representatives(top)) {
    for (const auto& g : a.generators()) {
      std::vector<Point> img(n);
      for (std::size_t v = 0; v < n; ++v) {
        std::size_t x = digit(v, c);
        img[v] = static_cast<Point>(v - x * weight[c] + g(static_cast<Point>(x)) * weight[c]);
      }
      gens.push_back(Permutation::from_images(std::move(img)));
    }
  }
  for (const auto& t : top.generators()) {
    std::vector<Point> img(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::size_t w = 0;
      for (std::size_t i = 0; i < d; ++i) w += digit(v, i) * weight[t(static_cast<Point>(i))];
      img[v] = static_cast<Point>(w);
    }
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  return Group(n, std::move(gens));
}

/// G intersected with Alt(n): the even permutations of G.
inline Group intersect_with_alt(const Group& g) {
  const auto& gens = g.generators();
  auto odd = std::find_if(gens.begin(), gens.end(), [](const Permutation& p) { return !p.is_even(); });
  if (odd == gens.end()) return g;
  // Schreier generators for the transversal {1, t} of the sign kernel.
  const Permutation& t = *odd;
  Permutation tinv = t.inverse();
  std::vector<Permutation> out;
  for (const auto& x : gens) {
    if (x.is_even()) {
      out.push_back(x);
      out.push_back(t * x * tinv);
    } else {
      out.push_back(x * tinv);
      out.push_back(t * x);
    }
  }
  std::erase_if(out, [](const Permutation& p) { return p.is_identity(); });
  return Group(g.degree(), std::move(out));
}

struct DiagonalAction {
  Group group;       // T x T acting on T by x -> t1^-1 x t2
  Group stabilizer;  // stabilizer of the identity: the diagonal copy of T
  std::vector<Permutation> elements;  // point i is elements[i]
};

/// T x T on the elements of T. Elements are numbered in breadth-first order
/// from the identity under right multiplication by the generators.
inline DiagonalAction diagonal_action(const Group& t, std::size_t cap = 10000) {
  if (t.order() > cap) throw DegreeCapExceeded("diag: |T| exceeds cap " + std::to_string(cap));
  std::vector<Permutation> elems{Permutation::identity(t.degree())};
  std::unordered_map<Permutation, Point, PermutationHash> index{{elems[0], 0}};
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (const auto& g : t.generators()) {
      Permutation y = elems[k] * g;
      if (!index.contains(y)) {
        index.emplace(y, static_cast<Point>(elems.size()));
        elems.push_back(std::move(y));
      }
    }
  }
  std::size_t n = elems.size();
  auto action = [&](const Permutation& left, const Permutation& right) {
    Permutation linv = left.inverse();
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = index.at(linv * elems[i] * right);
    return Permutation::from_images(std::move(img));
  };
  Permutation id = elems[0];
  std::vector<Permutation> gens, diag;
  for (const auto& g : t.generators()) gens.push_back(action(g, id));
  for (const auto& g : t.generators()) gens.push_back(action(id, g));
  for (const auto& g : t.generators()) diag.push_back(action(g, g));
  return {Group(n, std::move(gens)), Group(n, std::move(diag)), std::move(elems)};
}

struct ExBad {
  Group wreath;      // W = S wr_5 Alt(5)
  Group group;       // G = W'
  Group stabilizer;  // H = G intersected with S^5 : K
};

/// W = S wr_d Alt(d), G = W', and H = the preimage in G of K < Alt(d) under
/// the action on blocks. K defaults to the stabilizer of the last block.
inline ExBad exbad(const Group& s, std::size_t d = 5, std::optional<Group> k = std::nullopt) {
  if (!is_solvable(s)) throw NotSolvable("exbad: S must be solvable");
  Group top = alt(d);
  if (!k) k = point_stabilizer(top, {static_cast<Point>(d - 1)});
  if (k->degree() != d || !top.contains(*k)) throw InvalidArgument("exbad: K must be a subgroup of Alt(d)");
  Group w = wreath_imprimitive(s, top);
  Group g = derived_subgroup(w);
  std::size_t m = s.degree(), n = w.degree();

  // Let G act on points and on the cosets of K simultaneously; H is the
  // stabilizer of the coset K itself, restricted back to the points.
  CosetAction blocks(top, *k);
  std::size_t ext = n + blocks.index();
  auto block_image = [&](const Permutation& x) {
    std::vector<Point> img(d);
    for (Point b = 0; b < d; ++b) img[b] = static_cast<Point>(x(static_cast<Point>(b * m)) / m);
    return Permutation::from_images(std::move(img));
  };
  std::vector<Permutation> ext_gens;
  for (const auto& x : g.generators()) {
    std::vector<Point> img(ext);
    for (Point p = 0; p < n; ++p) img[p] = x(p);
    Permutation on_cosets = blocks.image(block_image(x));
    for (Point c = 0; c < blocks.index(); ++c) img[n + c] = static_cast<Point>(n + on_cosets(c));
    ext_gens.push_back(Permutation::from_images(std::move(img)));
  }
  Group gext(ext, std::move(ext_gens));
  Group hext = point_stabilizer(gext, {static_cast<Point>(n)});
  std::vector<Permutation> hgens;
  for (const auto& x : hext.generators()) hgens.push_back(detail::restrict_to(x, n));
  return {std::move(w), std::move(g), Group(n, std::move(hgens))};
}

}  // namespace dlstar

#endif  // DLSTAR_CONSTRUCT_HPP
